//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Criterion 1 is expected RED: the stated closed form for the weak count of
//! the 4-partite congruence family counts only the weak independent sets
//! omitting an entire part, which is a strict undercount (see the criterion's
//! failure message for the argument), so equality with enumeration cannot
//! hold. The check is asserted as stated rather than weakened.

use std::time::Instant;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use hyperocc::bounds;
use hyperocc::constructions::FamilySpec;
use hyperocc::hardcore::{
    count, glauber_estimate, independence_polynomial, occupancy_direct, occupancy_exact,
    occupancy_exact_f64, DEFAULT_ENUM_BUDGET,
};
use hyperocc::hypergraph::Hypergraph;
use hyperocc::lp;
use hyperocc::strong;
use hyperocc::weak;

fn report(criterion: usize, ok: bool, detail: &str) {
    println!("criterion {criterion}: {} — {detail}", if ok { "PASS" } else { "FAIL" });
}

fn lambda_grid() -> Vec<f64> {
    (1..=10).map(|i| i as f64 / 10.0).collect()
}

fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

/// Exact counts that must equal their closed forms.
#[test]
fn criterion_1_exact_construction_counts() {
    let started = Instant::now();
    let mut failures: Vec<String> = Vec::new();
    let mut check = |name: &str, spec: FamilySpec, k: usize, expected: BigUint| {
        let t0 = Instant::now();
        let h = spec.build().expect("buildable spec");
        let got = count(&h, k).expect("within budget");
        if t0.elapsed().as_secs_f64() >= 5.0 {
            failures.push(format!("{name}: took {:.1}s, budget 5s", t0.elapsed().as_secs_f64()));
        }
        if got != expected {
            failures.push(format!("{name}: enumerated {got}, formula {expected}"));
        }
    };

    for d in [2u32, 3, 4, 5] {
        check(
            &format!("i2(mod3, d={d})"),
            FamilySpec::mod3(d as usize),
            2,
            big(3 * 2u64.pow(d) - 2),
        );
    }
    for d in [3u32, 5] {
        check(&format!("i2(h4, d={d})"), FamilySpec::h4(d as usize), 2, big(4 * 2u64.pow(d) - 3));
    }
    check(
        "i4(h4, d=3)",
        FamilySpec::h4(3),
        4,
        big(4 * 2u64.pow(9) - 6 * 2u64.pow(6) + 4 * 2u64.pow(3) - 1),
    );
    check("i2(hrd, r=3, d=5)", FamilySpec::hrd(3, 5), 2, big(94));
    check("i2(hrd, r=5, d=7)", FamilySpec::hrd(5, 7), 2, big(636));
    for d in [2u32, 3, 4] {
        check(&format!("i2(kdd, d={d})"), FamilySpec::kdd(d as usize), 2, big(2u64.pow(d + 1) - 1));
    }

    let ok = failures.is_empty();
    report(1, ok, &format!("exact construction counts ({:.2}s)", started.elapsed().as_secs_f64()));
    assert!(
        ok,
        "exact-count mismatches: {}. The i4 formula for the 4-partite family counts \
         exactly the weak independent sets that omit an entire part (inclusion-exclusion \
         over the 4 parts: 4*2^(3d) - 6*2^(2d) + 4*2^d - 1); any one-vertex-per-part \
         selection that is not itself an edge is also weak-independent and misses no \
         part, and there are d^4 - d^2 > 0 of those, so the formula is a strict lower \
         bound and equality cannot hold for d >= 2.",
        failures.join("; ")
    );
}

/// Lower-bound counts verified by exact enumeration.
#[test]
fn criterion_2_lower_bound_counts() {
    let started = Instant::now();
    let mut ok = true;
    let mut details = Vec::new();
    for d in [2u32, 3, 4] {
        let h = FamilySpec::mod3(d as usize).build().unwrap();
        let got = count(&h, 3).unwrap();
        let bound = big(3 * 2u64.pow(2 * d) - 3 * 2u64.pow(d) + 1);
        if got < bound {
            ok = false;
            details.push(format!("i3(mod3, d={d}) = {got} < {bound}"));
        }
    }
    let h = FamilySpec::tripartite_k(2).build().unwrap();
    let got = count(&h, 2).unwrap();
    if got < big(49) {
        ok = false;
        details.push(format!("i2(tripartite-k, d=2) = {got} < 49"));
    }
    let elapsed = started.elapsed().as_secs_f64();
    if elapsed >= 30.0 {
        ok = false;
        details.push(format!("took {elapsed:.1}s, budget 30s"));
    }
    report(2, ok, &format!("lower-bound counts ({elapsed:.2}s)"));
    assert!(ok, "{}", details.join("; "));
}

fn cross_edge_free_corpus() -> Vec<(String, Hypergraph, usize)> {
    // (name, hypergraph, d) for 3-uniform d-regular linear cross-edge-free
    vec![
        ("tripartite-k d=2".into(), FamilySpec::tripartite_k(2).build().unwrap(), 2),
        ("tripartite-k d=3".into(), FamilySpec::tripartite_k(3).build().unwrap(), 3),
        ("krrt r=3".into(), FamilySpec::krrt(3).build().unwrap(), 2),
    ]
}

/// Occupancy of every corpus hypergraph stays under both occupancy bounds.
#[test]
fn criterion_3_occupancy_sandwich() {
    let started = Instant::now();
    let mut ok = true;
    let mut details = Vec::new();
    for (name, h, d) in cross_edge_free_corpus() {
        let strong_poly = independence_polynomial(&h, 2).unwrap();
        let weak_poly = independence_polynomial(&h, 3).unwrap();
        for lambda in lambda_grid() {
            let occ2 = occupancy_exact_f64(&strong_poly, lambda).unwrap();
            let alpha_s = strong::alpha_strong(3, d, lambda).unwrap().value;
            if occ2 > alpha_s + 1e-10 {
                ok = false;
                details.push(format!("{name}: occ2({lambda}) = {occ2} > alpha_s = {alpha_s}"));
            }
            let occ3 = occupancy_exact_f64(&weak_poly, lambda).unwrap();
            let alpha_w = weak::alpha_weak(3, d, lambda).unwrap();
            if occ3 > alpha_w + 1e-10 {
                ok = false;
                details.push(format!("{name}: occ3({lambda}) = {occ3} > alpha_w = {alpha_w}"));
            }
        }
    }
    report(3, ok, &format!("occupancy sandwich ({:.2}s)", started.elapsed().as_secs_f64()));
    assert!(ok, "{}", details.join("; "));
}

/// LP optimum times lambda equals the closed forms.
#[test]
fn criterion_4_lp_equals_closed_form() {
    let started = Instant::now();
    let mut ok = true;
    let mut details = Vec::new();
    let lambdas = [0.25, 0.5, 1.0];
    for (r, d) in [(3usize, 2usize), (3, 3), (4, 2), (5, 2)] {
        for lambda in lambdas {
            let sol = lp::solve(&weak::build_weak_lp(r, d, lambda).unwrap()).unwrap();
            let alpha = weak::alpha_weak(r, d, lambda).unwrap();
            let gap = (lambda * sol.value - alpha).abs();
            if gap > 1e-8 {
                ok = false;
                details.push(format!("weak (r={r}, d={d}, lambda={lambda}): gap {gap:.2e}"));
            }
        }
    }
    for d in [2usize, 3, 4] {
        for lambda in lambdas {
            let sol = lp::solve(&strong::build_strong_lp(3, d, lambda).unwrap()).unwrap();
            let alpha = strong::alpha_strong(3, d, lambda).unwrap().value;
            let gap = (lambda * sol.value - alpha).abs();
            if gap > 1e-8 {
                ok = false;
                details.push(format!("strong (d={d}, lambda={lambda}): gap {gap:.2e}"));
            }
        }
    }
    report(4, ok, &format!("LP equals closed form ({:.2}s)", started.elapsed().as_secs_f64()));
    assert!(ok, "{}", details.join("; "));
}

/// Dual certificates feasible across the grids; vertex profiles tight.
#[test]
fn criterion_5_dual_certificates() {
    let started = Instant::now();
    let mut ok = true;
    let mut details = Vec::new();
    for (r, d) in [(3usize, 2usize), (3, 3), (4, 2), (5, 2)] {
        for lambda in lambda_grid() {
            let rep = weak::weak_dual_certificate(r, d, lambda).unwrap();
            if rep.worst_slack < -1e-10 {
                ok = false;
                details.push(format!(
                    "weak (r={r}, d={d}, lambda={lambda}): slack {} at {:?}",
                    rep.worst_slack, rep.worst_config
                ));
            }
        }
    }
    for d in 2..=10usize {
        for lambda in lambda_grid() {
            let cert = strong::strong_dual(3, d, lambda).unwrap();
            let rep = strong::slack_check(3, d, lambda, &cert).unwrap();
            if rep.min_slack < -1e-10 {
                ok = false;
                details.push(format!(
                    "strong (d={d}, lambda={lambda}): min slack {} at {:?}",
                    rep.min_slack, rep.argmin
                ));
            }
            if rep.max_vertex_abs > 1e-12 {
                ok = false;
                details.push(format!(
                    "strong (d={d}, lambda={lambda}): vertex slack {}",
                    rep.max_vertex_abs
                ));
            }
            if rep.sampled {
                ok = false;
                details.push(format!("strong (d={d}): expected exhaustive sweep"));
            }
        }
    }
    report(5, ok, &format!("dual certificates ({:.2}s)", started.elapsed().as_secs_f64()));
    assert!(ok, "{}", details.join("; "));
}

/// Coefficient ordering and pairwise inequalities for r = 3.
#[test]
fn criterion_6_r3_coefficient_claims() {
    let started = Instant::now();
    let mut ok = true;
    let mut details = Vec::new();
    for d in 2..=10usize {
        let rep = strong::r3_coefficient_checks(d, &lambda_grid()).unwrap();
        for checks in &rep.per_lambda {
            if checks.display_error > 1e-9 {
                ok = false;
                details.push(format!(
                    "d={d} lambda={}: display error {:.2e}",
                    checks.lambda, checks.display_error
                ));
            }
            if checks.ordering_margin <= 0.0 {
                ok = false;
                details.push(format!(
                    "d={d} lambda={}: ordering margin {}",
                    checks.lambda, checks.ordering_margin
                ));
            }
            if checks.pairwise_margin <= 0.0 {
                ok = false;
                details.push(format!(
                    "d={d} lambda={}: pairwise margin {}",
                    checks.lambda, checks.pairwise_margin
                ));
            }
        }
    }
    report(6, ok, &format!("r=3 coefficient claims ({:.2}s)", started.elapsed().as_secs_f64()));
    assert!(ok, "{}", details.join("; "));
}

/// The strong asymptotic constant reproduces its stated value.
#[test]
fn criterion_7_constant_reproduction() {
    let started = Instant::now();
    let value = strong::cs3_constant(1e-7);
    let elapsed = started.elapsed().as_secs_f64();
    let ok = (value - 0.603772).abs() < 5e-6 && elapsed < 1.0;
    report(7, ok, &format!("c_s3 = {value:.9} ({elapsed:.3}s)"));
    assert!(ok, "c_s3 = {value}, elapsed {elapsed}s");
}

/// Second-order terms converge to the asymptotic constants along a d-ladder.
#[test]
fn criterion_8_asymptotic_trends() {
    let started = Instant::now();
    let cs3 = strong::cs3_constant(1e-9);
    let cw3 = weak::cw_constant(3, 1e-9).unwrap();
    let ladder = [100usize, 1_000, 10_000];

    let strong_dev: Vec<f64> = ladder
        .iter()
        .map(|&d| {
            let b = bounds::strong_bound(d, 1e-10).unwrap().bound;
            (d as f64 * (b - 1.0 / 3.0) / cs3 - 1.0).abs()
        })
        .collect();
    let weak_dev: Vec<f64> = ladder
        .iter()
        .map(|&d| {
            let b = bounds::weak_bound(3, d, 1e-10).unwrap().bound;
            ((d as f64).sqrt() * (b - 2.0 / 3.0) / cw3 - 1.0).abs()
        })
        .collect();

    let elapsed = started.elapsed().as_secs_f64();
    let mut ok = elapsed < 60.0;
    let mut details = Vec::new();
    if !(strong_dev[0] > strong_dev[1] && strong_dev[1] > strong_dev[2]) {
        ok = false;
        details.push(format!("strong deviations not decreasing: {strong_dev:?}"));
    }
    if strong_dev[2] >= 0.05 {
        ok = false;
        details.push(format!("strong e_10000 = {} >= 0.05", strong_dev[2]));
    }
    if !(weak_dev[0] > weak_dev[1] && weak_dev[1] > weak_dev[2]) {
        ok = false;
        details.push(format!("weak deviations not decreasing: {weak_dev:?}"));
    }
    report(
        8,
        ok,
        &format!(
            "asymptotic trends: strong {strong_dev:?}, weak {weak_dev:?} ({elapsed:.1}s)"
        ),
    );
    assert!(ok, "{}", details.join("; "));
}

/// The derivative route and the direct-expectation route agree exactly.
#[test]
fn criterion_9_two_way_occupancy_identity() {
    let started = Instant::now();
    let corpus: Vec<(String, Hypergraph, usize)> = vec![
        (
            "4-cycle".into(),
            Hypergraph::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]]).unwrap(),
            2,
        ),
        ("single edge".into(), Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap(), 3),
        ("edgeless".into(), Hypergraph::new(4, vec![]).unwrap(), 2),
        ("mod3 d=2".into(), FamilySpec::mod3(2).build().unwrap(), 2),
        ("mod3 d=3".into(), FamilySpec::mod3(3).build().unwrap(), 3),
        ("h4 d=3 strong".into(), FamilySpec::h4(3).build().unwrap(), 2),
        ("h4 d=3 weak".into(), FamilySpec::h4(3).build().unwrap(), 4),
        ("hrd(3,5)".into(), FamilySpec::hrd(3, 5).build().unwrap(), 2),
        ("tripartite-k d=2 strong".into(), FamilySpec::tripartite_k(2).build().unwrap(), 2),
        ("tripartite-k d=2 weak".into(), FamilySpec::tripartite_k(2).build().unwrap(), 3),
        ("krrt r=3 strong".into(), FamilySpec::krrt(3).build().unwrap(), 2),
        ("krrt r=3 weak".into(), FamilySpec::krrt(3).build().unwrap(), 3),
        ("kdd d=2".into(), FamilySpec::kdd(2).build().unwrap(), 2),
        ("kdd d=3".into(), FamilySpec::kdd(3).build().unwrap(), 2),
    ];
    let lambdas = [rational(1, 4), rational(1, 2), rational(1, 1)];
    let mut ok = true;
    let mut details = Vec::new();
    for (name, h, k) in &corpus {
        let poly = independence_polynomial(h, *k).unwrap();
        for lambda in &lambdas {
            let via_derivative = occupancy_exact(&poly, lambda).unwrap();
            let direct = occupancy_direct(h, *k, lambda, DEFAULT_ENUM_BUDGET).unwrap();
            if via_derivative != direct {
                ok = false;
                details.push(format!("{name} at {lambda}: {via_derivative} vs {direct}"));
            }
        }
    }
    report(9, ok, &format!("two-way occupancy identity ({:.2}s)", started.elapsed().as_secs_f64()));
    assert!(ok, "{}", details.join("; "));
}

/// Glauber sampler within three standard errors of the exact value and
/// deterministic per seed.
#[test]
fn criterion_10_sampler_sanity() {
    let started = Instant::now();
    let h = Hypergraph::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]]).unwrap();
    let est = glauber_estimate(&h, 2, 1.0, 1_000_000, 10_000, 42).unwrap();
    let again = glauber_estimate(&h, 2, 1.0, 1_000_000, 10_000, 42).unwrap();
    let exact = rational(2, 7).to_f64().unwrap();
    let mut ok = true;
    let mut details = Vec::new();
    if (est.mean - exact).abs() > 3.0 * est.stderr {
        ok = false;
        details.push(format!(
            "mean {} not within 3 x {} of {exact}",
            est.mean, est.stderr
        ));
    }
    if est != again {
        ok = false;
        details.push("identical seeds produced different estimates".into());
    }
    report(
        10,
        ok,
        &format!(
            "sampler: mean {:.6} +- {:.6} vs 2/7 ({:.2}s)",
            est.mean,
            est.stderr,
            started.elapsed().as_secs_f64()
        ),
    );
    assert!(ok, "{}", details.join("; "));
}
