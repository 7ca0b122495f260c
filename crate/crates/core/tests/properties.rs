//! Property tests for the structural invariants that hold on every
//! hypergraph, not just the named families.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

use hyperocc::hardcore::{count, independence_polynomial, occupancy_exact};
use hyperocc::hypergraph::{validate, Hypergraph};

/// Arbitrary simple hypergraph with edges of size at least `min_edge`.
fn arb_hypergraph(min_edge: usize) -> impl Strategy<Value = Hypergraph> {
    (min_edge.max(1)..=7usize).prop_flat_map(move |n| {
        let edge = prop::collection::btree_set(0..n, min_edge..=n.min(4));
        prop::collection::vec(edge, 0..=6).prop_map(move |edges| {
            let dedup: BTreeSet<Vec<usize>> =
                edges.into_iter().map(|e| e.into_iter().collect()).collect();
            Hypergraph::new(n, dedup.into_iter().collect()).expect("valid by construction")
        })
    })
}

fn arb_lambda() -> impl Strategy<Value = BigRational> {
    (1i64..=16, 1i64..=8).prop_map(|(p, q)| BigRational::new(p.into(), q.into()))
}

proptest! {
    #[test]
    fn save_load_round_trip(h in arb_hypergraph(1)) {
        let reloaded = Hypergraph::load(&h.save()).unwrap();
        prop_assert_eq!(h, reloaded);
    }

    #[test]
    fn degree_sum_equals_edge_size_sum(h in arb_hypergraph(1)) {
        let total: usize = h.degrees().iter().sum();
        let sizes: usize = h.edges().iter().map(|e| e.len()).sum();
        prop_assert_eq!(total, sizes);
    }

    #[test]
    fn validation_is_deterministic(h in arb_hypergraph(1)) {
        prop_assert_eq!(validate(&h), validate(&h));
    }

    #[test]
    fn occupancy_never_exceeds_lambda_over_mu(
        h in arb_hypergraph(2),
        lambda in arb_lambda(),
    ) {
        let poly = independence_polynomial(&h, 2).unwrap();
        let occ = occupancy_exact(&poly, &lambda).unwrap();
        let cap = &lambda / (BigRational::one() + &lambda);
        prop_assert!(occ <= cap);
    }

    #[test]
    fn count_monotone_in_level(h in arb_hypergraph(3)) {
        // every edge has size >= 3, so both k=2 and k=3 are admissible
        let strong = count(&h, 2).unwrap();
        let weak = count(&h, 3).unwrap();
        prop_assert!(strong <= weak);
    }

    #[test]
    fn partition_function_strictly_increasing(h in arb_hypergraph(2)) {
        prop_assume!(h.vertex_count() >= 1);
        let poly = independence_polynomial(&h, 2).unwrap();
        let lo = poly.evaluate(&BigRational::new(1.into(), 3.into()));
        let hi = poly.evaluate(&BigRational::new(2.into(), 3.into()));
        prop_assert!(hi > lo);
    }
}
