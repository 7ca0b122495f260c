//! Builds each hypergraph family and prints its structural report.
//!
//! Run: cargo run --example families

use hyperocc::constructions::FamilySpec;
use hyperocc::hypergraph::validate;

fn main() {
    let specs = [
        ("kdd d=3", FamilySpec::kdd(3)),
        ("krrt r=4", FamilySpec::krrt(4)),
        ("tripartite-k d=2", FamilySpec::tripartite_k(2)),
        ("tripartite-k d=3", FamilySpec::tripartite_k(3)),
        ("mod3 d=5", FamilySpec::mod3(5)),
        ("h4 d=3", FamilySpec::h4(3)),
        ("hrd r=3 d=5", FamilySpec::hrd(3, 5)),
        ("hrd r=5 d=7", FamilySpec::hrd(5, 7)),
    ];
    println!(
        "{:<18} {:>5} {:>6} {:>4} {:>4} {:>7} {:>11}",
        "family", "n", "edges", "r", "d", "linear", "cross-free"
    );
    for (name, spec) in specs {
        let h = spec.build().expect("valid parameters");
        let report = validate(&h);
        println!(
            "{:<18} {:>5} {:>6} {:>4} {:>4} {:>7} {:>11}",
            name,
            h.vertex_count(),
            h.edge_count(),
            report.uniform_r.map_or("-".into(), |r| r.to_string()),
            report.regular_d.map_or("-".into(), |d| d.to_string()),
            report.is_linear,
            report.is_cross_edge_free,
        );
        if let Some((v, e)) = report.witnesses.cross_edge {
            println!("{:<18}   e.g. edge {e} crosses the neighborhood of vertex {v}", "");
        }
    }

    // rejected parameters carry the reason
    for bad in [FamilySpec::h4(4), FamilySpec::hrd(3, 9)] {
        println!("\nrejected: {}", bad.build().unwrap_err());
    }
}
