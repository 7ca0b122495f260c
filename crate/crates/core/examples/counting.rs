//! Exact enumeration against the closed-form counts of each family.
//!
//! Run: cargo run --example counting

use hyperocc::constructions::{CountKind, FamilySpec};
use hyperocc::hardcore::{count, independence_polynomial};

fn main() {
    let cases = [
        (FamilySpec::kdd(3), 2),
        (FamilySpec::kdd(4), 2),
        (FamilySpec::mod3(3), 2),
        (FamilySpec::mod3(5), 2),
        (FamilySpec::mod3(3), 3),
        (FamilySpec::h4(3), 2),
        (FamilySpec::h4(3), 4),
        (FamilySpec::hrd(3, 5), 2),
        (FamilySpec::hrd(5, 7), 2),
        (FamilySpec::tripartite_k(2), 2),
    ];
    println!(
        "{:<20} {:>2} {:>12} {:>12}  {}",
        "family", "k", "enumerated", "formula", "kind"
    );
    for (spec, k) in cases {
        let h = spec.build().unwrap();
        let enumerated = count(&h, k).unwrap();
        match spec.predicted_count(k) {
            Ok((formula, kind)) => {
                let label = match kind {
                    CountKind::Exact => "exact",
                    CountKind::LowerBound => "lower bound",
                };
                let mark = match kind {
                    CountKind::Exact if enumerated == formula => "ok",
                    CountKind::Exact => "MISMATCH",
                    CountKind::LowerBound if enumerated >= formula => "ok",
                    CountKind::LowerBound => "VIOLATED",
                };
                println!(
                    "{:<20} {:>2} {:>12} {:>12}  {label} ({mark})",
                    spec.family.name(),
                    k,
                    enumerated.to_string(),
                    formula.to_string(),
                );
            }
            Err(err) => println!("{:<20} {:>2} {:>12}  {err}", spec.family.name(), k, enumerated.to_string()),
        }
    }

    // the full coefficient vector for one small instance
    let grid = FamilySpec::krrt(3).build().unwrap();
    let poly = independence_polynomial(&grid, 2).unwrap();
    println!("\nindependence polynomial of the 3x3 grid (strong sets by size):");
    for (m, c) in poly.coeffs.iter().enumerate() {
        println!("  size {m}: {c}");
    }
    println!("  total: {}", poly.total());
}
