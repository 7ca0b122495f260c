//! The weak-IS occupancy LP: closed form vs simplex, the two-point candidate
//! primal, the dual certificate sweep, and the g-monotonicity companion.
//!
//! Run: cargo run --example weak_certificates

use hyperocc::lp::{check_dual_feasible, solve};
use hyperocc::weak::{
    alpha_weak, build_weak_lp, candidate_primal, configs, g_monotonicity_check,
    weak_dual_certificate,
};

fn main() {
    let grid: Vec<f64> = (1..=10).map(|i| i as f64 / 10.0).collect();

    for (r, d) in [(3usize, 2usize), (3, 5), (4, 3), (5, 2)] {
        let lambda = 0.5;
        let alpha = alpha_weak(r, d, lambda).unwrap();
        let lp = build_weak_lp(r, d, lambda).unwrap();
        let sol = solve(&lp).unwrap();
        let cand = candidate_primal(r, d, lambda).unwrap();
        println!("r={r} d={d} lambda={lambda}:");
        println!("  closed form alpha_w        {alpha:.12}");
        println!("  lambda x LP value          {:.12}", lambda * sol.value);
        println!("  candidate primal value     {:.12}  (p_top = {:.6})", cand.value, cand.p_top);

        // support of the simplex optimum
        let support: Vec<String> = configs(r, d)
            .iter()
            .zip(&sol.primal)
            .filter(|(_, &p)| p > 1e-7)
            .map(|(cfg, &p)| format!("(j={}, k={}): {p:.6}", cfg.j, cfg.k))
            .collect();
        println!("  optimum support            {}", support.join(", "));

        // certificate: tight at the two support configurations, feasible everywhere
        let report = weak_dual_certificate(r, d, lambda).unwrap();
        println!(
            "  dual certificate           Lambda_p = {:.12}, Lambda_c = {:.12}",
            report.certificate.lambda_p, report.certificate.lambda_c
        );
        println!(
            "  slack: top {:.2e}, bottom {:.2e}, worst {:.2e} at (j={}, k={})",
            report.slack_top,
            report.slack_bottom,
            report.worst_slack,
            report.worst_config.j,
            report.worst_config.k
        );
        let dual_check =
            check_dual_feasible(&lp, &report.certificate.lp_dual_vector(lambda), 1e-10).unwrap();
        println!("  LP dual system feasible    {}", dual_check.feasible);

        let mono = g_monotonicity_check(r, d, &grid).unwrap();
        println!(
            "  g(j) <= g(d) on the grid   {} (max excess {:.2e})\n",
            mono.all_pass, mono.max_excess
        );
    }
}
