//! Exact occupancy fractions of small instances against the weak and strong
//! occupancy bounds, across a fugacity sweep.
//!
//! Run: cargo run --example occupancy

use hyperocc::constructions::FamilySpec;
use hyperocc::hardcore::{independence_polynomial, occupancy_exact_f64};
use hyperocc::{strong, weak};

fn main() {
    let corpus = [
        ("tripartite-k d=2", FamilySpec::tripartite_k(2), 2usize),
        ("krrt r=3 (grid)", FamilySpec::krrt(3), 2),
    ];
    for (name, spec, d) in corpus {
        let h = spec.build().unwrap();
        let strong_poly = independence_polynomial(&h, 2).unwrap();
        let weak_poly = independence_polynomial(&h, 3).unwrap();
        println!("{name} (n = {}):", h.vertex_count());
        println!(
            "  {:>6} {:>12} {:>12} {:>12} {:>12}",
            "lambda", "occ k=2", "alpha_s", "occ k=3", "alpha_w"
        );
        for i in 1..=10 {
            let lambda = i as f64 / 10.0;
            let occ2 = occupancy_exact_f64(&strong_poly, lambda).unwrap();
            let occ3 = occupancy_exact_f64(&weak_poly, lambda).unwrap();
            let alpha_s = strong::alpha_strong(3, d, lambda).unwrap().value;
            let alpha_w = weak::alpha_weak(3, d, lambda).unwrap();
            assert!(occ2 <= alpha_s + 1e-10 && occ3 <= alpha_w + 1e-10);
            println!(
                "  {lambda:>6.2} {occ2:>12.8} {alpha_s:>12.8} {occ3:>12.8} {alpha_w:>12.8}"
            );
        }
        println!();
    }
    println!("the grid attains the strong bound at d = 2: the alpha_s column");
    println!("matches its occupancy column exactly.");
}
