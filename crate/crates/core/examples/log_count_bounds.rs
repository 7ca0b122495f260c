//! Integrated log2(count)/n bounds vs exact counts of the constructions,
//! and the conjecture gaps.
//!
//! Run: cargo run --example log_count_bounds

use hyperocc::bounds::{conjecture_gap, strong_bound, weak_bound};
use hyperocc::constructions::FamilySpec;
use hyperocc::hardcore::count;
use num_traits::ToPrimitive;

fn main() {
    // strong bound at d=2 vs the grid, which attains it
    let report = strong_bound(2, 1e-10).unwrap();
    let grid = FamilySpec::krrt(3).build().unwrap();
    let i2 = count(&grid, 2).unwrap();
    let grid_value = i2.to_f64().unwrap().log2() / grid.vertex_count() as f64;
    println!("strong bound d=2:      {:.12}", report.bound);
    println!("log2 i2(grid)/9:       {grid_value:.12}   (i2 = {i2}, attained)");

    // weak bound d=2 vs the tripartite construction
    let report = weak_bound(3, 2, 1e-10).unwrap();
    let tri = FamilySpec::tripartite_k(2).build().unwrap();
    let i3 = count(&tri, 3).unwrap();
    let tri_value = i3.to_f64().unwrap().log2() / tri.vertex_count() as f64;
    println!("weak bound r=3 d=2:    {:.12}", report.bound);
    println!("log2 i3(K)/12:         {tri_value:.12}   (i3 = {i3})");

    println!("\nconjecture gaps (construction vs conjectured bound):");
    println!(
        "{:<16} {:>2} {:>2} {:>14} {:>14} {:>9}",
        "family", "k", "d", "construction", "conjecture", "attains"
    );
    let cases = [
        (FamilySpec::mod3(5), 2),
        (FamilySpec::mod3(4), 3),
        (FamilySpec::hrd(5, 7), 2),
        (FamilySpec::kdd(4), 2),
        (FamilySpec::h4(3), 2),
        (FamilySpec::tripartite_k(2), 2),
    ];
    for (spec, k) in cases {
        let gap = conjecture_gap(&spec, k, 1e-9).unwrap();
        println!(
            "{:<16} {:>2} {:>2} {:>14.10} {:>14.10} {:>9}",
            spec.family.name(),
            k,
            gap.d,
            gap.construction_value.unwrap(),
            gap.conjecture_value,
            gap.attains_conjecture.unwrap(),
        );
        if gap.bound.is_finite() {
            println!("{:<16}    proved bound {:>14.10}", "", gap.bound);
        }
    }
}
