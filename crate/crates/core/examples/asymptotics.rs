//! Second-order asymptotic constants and how the integrated bounds approach
//! them along a degree ladder.
//!
//! Run: cargo run --example asymptotics

use hyperocc::bounds::{strong_bound, weak_bound};
use hyperocc::strong::cs3_constant;
use hyperocc::weak::cw_constant;

fn main() {
    let cs3 = cs3_constant(1e-9);
    println!("c_s(3)  = {cs3:.9}");
    for r in 3..=10 {
        println!("c_w({r}) = {:.9}", cw_constant(r, 1e-9).unwrap());
    }

    println!("\nstrong r=3: d * (bound - 1/3) -> c_s(3)");
    println!("{:>7} {:>16} {:>14} {:>12}", "d", "bound", "second order", "scaled");
    for d in [10usize, 100, 1_000, 10_000] {
        let b = strong_bound(d, 1e-10).unwrap();
        println!(
            "{d:>7} {:>16.12} {:>14.3e} {:>12.8}",
            b.bound,
            b.second_order,
            b.second_order * d as f64
        );
    }

    println!("\nweak r=3: sqrt(d) * (bound - 2/3) -> c_w(3)");
    println!("{:>7} {:>16} {:>14} {:>12}", "d", "bound", "second order", "scaled");
    for d in [10usize, 100, 1_000, 10_000] {
        let b = weak_bound(3, d, 1e-10).unwrap();
        println!(
            "{d:>7} {:>16.12} {:>14.3e} {:>12.8}",
            b.bound,
            b.second_order,
            b.second_order * (d as f64).sqrt()
        );
    }
}
