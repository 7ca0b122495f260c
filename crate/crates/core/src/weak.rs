//! Weak independent sets: local configurations, the occupancy LP, its
//! closed-form optimum, the dual certificate, and the asymptotic constant.
//!
//! A local configuration in a cross-edge-free hypergraph is described by two
//! integers: `j` intact size-r edges through the center vertex and `k`
//! externally covered dangling neighbors, with `k <= (d-j)(r-2)`. All
//! occupancy statistics of the configuration follow from the two partition
//! functions `Z_j^- = mu^{(r-1)j}` (center unoccupied) and
//! `Z_j^+ = (mu^{r-1} - lambda^{r-1})^j` (center occupied), `mu = 1 + lambda`.

use serde::Serialize;
use thiserror::Error;

use crate::lp::DenseLp;
use crate::quad::{adaptive_simpson, tail_cutoff};

/// Violations smaller than this count as clean dual feasibility; it separates
/// true violations from accumulated roundoff on the tested grids.
pub const CERTIFICATE_TOL: f64 = 1e-10;

/// Cross-over point between the direct power evaluation of the closed form
/// and the exp/log route.
const DIRECT_EVAL_MAX_D: usize = 200;

/// Largest exponent fed to powi/exp before the direct route would overflow.
const MAX_SAFE_EXPONENT: f64 = 690.0;

#[derive(Debug, Error)]
pub enum WeakError {
    #[error("requires r >= {min}, got r={r}")]
    UniformityTooSmall { r: usize, min: usize },
    #[error("requires d >= {min}, got d={d}")]
    DegreeTooSmall { d: usize, min: usize },
    #[error("fugacity must be positive and finite, got {lambda}")]
    BadFugacity { lambda: f64 },
    #[error("configuration (j={j}, k={k}) out of range for r={r}, d={d}")]
    BadConfig { j: usize, k: usize, r: usize, d: usize },
    #[error("d (1+lambda)^{{r-1}} too large for direct evaluation; parameters overflow f64")]
    Overflow,
}

/// Local configuration: `j` intact edges, `k` externally covered neighbors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WeakConfig {
    pub j: usize,
    pub k: usize,
}

/// All configurations for given r and d, ordered by (j, k).
pub fn configs(r: usize, d: usize) -> Vec<WeakConfig> {
    let mut out = Vec::new();
    for j in 0..=d {
        for k in 0..=(d - j) * (r - 2) {
            out.push(WeakConfig { j, k });
        }
    }
    out
}

/// Partition functions and conditional occupancy statistics of a local
/// configuration.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct WeakLocalStats {
    pub z_minus: f64,
    pub z_plus: f64,
    /// Conditional probability that the center vertex is occupied.
    pub alpha_v: f64,
    /// Conditional expected occupied fraction of the d(r-1) neighbors.
    pub alpha_n: f64,
    pub mu: f64,
}

fn check_rdl(r: usize, d: usize, lambda: f64, min_r: usize) -> Result<(), WeakError> {
    if r < min_r {
        return Err(WeakError::UniformityTooSmall { r, min: min_r });
    }
    if d < 1 {
        return Err(WeakError::DegreeTooSmall { d, min: 1 });
    }
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(WeakError::BadFugacity { lambda });
    }
    Ok(())
}

pub fn local_stats(
    r: usize,
    d: usize,
    lambda: f64,
    cfg: WeakConfig,
) -> Result<WeakLocalStats, WeakError> {
    check_rdl(r, d, lambda, 2)?;
    if cfg.j > d || cfg.k > (d - cfg.j) * (r - 2) {
        return Err(WeakError::BadConfig { j: cfg.j, k: cfg.k, r, d });
    }
    let mu = 1.0 + lambda;
    let s = (r - 1) as i32;
    let j = cfg.j as i32;
    let z_minus = mu.powi(s * j);
    let nu = mu.powi(s) - lambda.powi(s);
    let z_plus = nu.powi(j);
    let alpha_v = lambda * z_plus / (z_minus + lambda * z_plus);
    let sj = ((r - 1) * cfg.j) as f64;
    // the j part vanishes at j = 0; the formula is continuous there
    let bracket = cfg.k as f64 + sj - sj * (alpha_v / lambda) * (lambda.powi(s) / nu);
    let alpha_n = lambda / (mu * (d * (r - 1)) as f64) * bracket;
    Ok(WeakLocalStats { z_minus, z_plus, alpha_v, alpha_n, mu })
}

/// Shared coefficients of the closed form: alpha_w / lambda =
/// (n1 A + n2 B) / (mu (d1 A + d2 B)) with A = mu^{d(r-1)}, B = nu^d.
fn closed_form_coeffs(r: usize, lambda: f64) -> (f64, f64, f64, f64) {
    let mu = 1.0 + lambda;
    let rf = r as f64;
    let lam_r = lambda.powi(r as i32);
    let mu_r = mu.powi(r as i32);
    let t1 = mu * lam_r - lambda * mu_r;
    let n1 = (rf - 1.0) * t1;
    let n2 = mu * mu * lam_r + lambda * (rf - mu - 1.0) * mu_r;
    let d1 = rf * t1;
    let d2 = lambda * (mu * lam_r + (rf - mu) * mu_r);
    (n1, n2, d1, d2)
}

/// Closed-form optimum of the weak occupancy LP, evaluated with explicit
/// powers. Overflows f64 once d(r-1) ln(mu) grows past ~690.
pub fn alpha_weak_direct(r: usize, d: usize, lambda: f64) -> Result<f64, WeakError> {
    check_rdl(r, d, lambda, 3)?;
    let mu = 1.0 + lambda;
    let s = (r - 1) as i32;
    if (d as f64) * (s as f64) * mu.ln() > MAX_SAFE_EXPONENT {
        return Err(WeakError::Overflow);
    }
    let a = mu.powi(d as i32 * s);
    let b = (mu.powi(s) - lambda.powi(s)).powi(d as i32);
    let (n1, n2, d1, d2) = closed_form_coeffs(r, lambda);
    Ok(lambda * (n1 * a + n2 * b) / (mu * (d1 * a + d2 * b)))
}

/// Closed-form optimum with the large-d ratio X = (nu / mu^{r-1})^d
/// evaluated as exp(d (ln nu - (r-1) ln mu)); X lies in (0, 1], so this
/// route never overflows.
pub fn alpha_weak_logspace(r: usize, d: usize, lambda: f64) -> Result<f64, WeakError> {
    check_rdl(r, d, lambda, 3)?;
    let mu = 1.0 + lambda;
    let s = (r - 1) as i32;
    let nu = mu.powi(s) - lambda.powi(s);
    let x = ((d as f64) * (nu.ln() - (s as f64) * mu.ln())).exp();
    let (n1, n2, d1, d2) = closed_form_coeffs(r, lambda);
    Ok(lambda * (n1 + n2 * x) / (mu * (d1 + d2 * x)))
}

/// alpha_w(r, d, lambda): the proved upper bound on the weak-IS occupancy
/// fraction of r-uniform d-regular linear cross-edge-free hypergraphs.
pub fn alpha_weak(r: usize, d: usize, lambda: f64) -> Result<f64, WeakError> {
    check_rdl(r, d, lambda, 3)?;
    let mu = 1.0 + lambda;
    if d <= DIRECT_EVAL_MAX_D && (d * (r - 1)) as f64 * mu.ln() <= MAX_SAFE_EXPONENT {
        alpha_weak_direct(r, d, lambda)
    } else {
        alpha_weak_logspace(r, d, lambda)
    }
}

/// Integrand alpha_w / lambda with its analytic limit 1 at lambda = 0.
pub fn alpha_weak_over_lambda(r: usize, d: usize, lambda: f64) -> Result<f64, WeakError> {
    if lambda == 0.0 {
        return Ok(1.0);
    }
    Ok(alpha_weak_logspace(r, d, lambda)? / lambda)
}

/// Two-point candidate primal supported on (d, 0) and (0, (r-2)d).
#[derive(Debug, Clone, Copy, Serialize)]
pub struct WeakCandidatePrimal {
    /// Probability assigned to configuration (d, 0).
    pub p_top: f64,
    /// Objective value, equal to alpha_w.
    pub value: f64,
}

pub fn candidate_primal(r: usize, d: usize, lambda: f64) -> Result<WeakCandidatePrimal, WeakError> {
    let top = local_stats(r, d, lambda, WeakConfig { j: d, k: 0 })?;
    let bottom = local_stats(r, d, lambda, WeakConfig { j: 0, k: (r - 2) * d })?;
    let p_top = lambda / (lambda + (r - 1) as f64 * top.mu * (top.alpha_n - top.alpha_v));
    let value = p_top * top.alpha_v + (1.0 - p_top) * bottom.alpha_v;
    Ok(WeakCandidatePrimal { p_top, value })
}

/// Occupancy LP over weak configurations, in the normalization where the
/// optimal value is alpha_w / lambda.
///
/// One column per [`configs`] entry with objective alpha_v / lambda; row 0 is
/// the two-formulation consistency constraint (alpha_v - alpha_n) / lambda,
/// row 1 the probability normalization. The dual vector of the solved LP is
/// (Lambda_c, Lambda_p / lambda).
pub fn build_weak_lp(r: usize, d: usize, lambda: f64) -> Result<DenseLp, WeakError> {
    check_rdl(r, d, lambda, 3)?;
    let cols = configs(r, d);
    let mut objective = Vec::with_capacity(cols.len());
    let mut consistency = Vec::with_capacity(cols.len());
    for cfg in &cols {
        let stats = local_stats(r, d, lambda, *cfg)?;
        objective.push(stats.alpha_v / lambda);
        consistency.push((stats.alpha_v - stats.alpha_n) / lambda);
    }
    let ones = vec![1.0; cols.len()];
    Ok(DenseLp { objective, constraints: vec![consistency, ones], rhs: vec![0.0, 1.0] })
}

/// Dual variables of the weak occupancy LP.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct WeakDualCertificate {
    pub lambda_p: f64,
    pub lambda_c: f64,
}

impl WeakDualCertificate {
    /// The same certificate in the scaling of [`build_weak_lp`]'s dual.
    pub fn lp_dual_vector(&self, lambda: f64) -> Vec<f64> {
        vec![self.lambda_c, self.lambda_p / lambda]
    }
}

/// Certificate plus the outcome of the feasibility sweep over all (j, k).
#[derive(Debug, Clone, Serialize)]
pub struct WeakCertificateReport {
    pub certificate: WeakDualCertificate,
    /// min over configurations of Lambda_p + (alpha_v - alpha_n) Lambda_c - alpha_v.
    pub worst_slack: f64,
    pub worst_config: WeakConfig,
    /// Slack at (d, 0), tight by construction.
    pub slack_top: f64,
    /// Slack at (0, (r-2)d), tight by construction.
    pub slack_bottom: f64,
    pub feasible: bool,
}

/// Builds the candidate dual certificate Lambda_p = alpha_w,
/// Lambda_c = (r-1)(1 - mu Lambda_p / lambda) and sweeps the dual
/// constraint over every configuration, not just the k = (d-j)(r-2) frontier
/// the monotonicity argument reduces to.
pub fn weak_dual_certificate(
    r: usize,
    d: usize,
    lambda: f64,
) -> Result<WeakCertificateReport, WeakError> {
    let lambda_p = alpha_weak(r, d, lambda)?;
    let mu = 1.0 + lambda;
    let lambda_c = (r - 1) as f64 * (1.0 - mu / lambda * lambda_p);
    let certificate = WeakDualCertificate { lambda_p, lambda_c };

    let mut worst_slack = f64::INFINITY;
    let mut worst_config = WeakConfig { j: 0, k: 0 };
    let mut slack_top = 0.0;
    let mut slack_bottom = 0.0;
    for cfg in configs(r, d) {
        let stats = local_stats(r, d, lambda, cfg)?;
        let slack = lambda_p + (stats.alpha_v - stats.alpha_n) * lambda_c - stats.alpha_v;
        if slack < worst_slack {
            worst_slack = slack;
            worst_config = cfg;
        }
        if cfg.j == d && cfg.k == 0 {
            slack_top = slack;
        }
        if cfg.j == 0 && cfg.k == (r - 2) * d {
            slack_bottom = slack;
        }
    }
    Ok(WeakCertificateReport {
        certificate,
        worst_slack,
        worst_config,
        slack_top,
        slack_bottom,
        feasible: worst_slack >= -CERTIFICATE_TOL,
    })
}

/// Auxiliary quantities from the dual-feasibility analysis, exposed as
/// diagnostics: nu, gamma, rho = mu^{r-1}, sigma = lambda^{r-1}, and the
/// per-j values B_j, C_j, g(j) = j C_j / B_j, f(j).
#[derive(Debug, Clone, Copy, Serialize)]
pub struct WeakDualDiagnostics {
    pub nu: f64,
    pub gamma: f64,
    pub rho: f64,
    pub sigma: f64,
    pub b_j: f64,
    pub c_j: f64,
    pub g_j: f64,
    pub f_j: f64,
}

/// Diagnostics at a given j >= 1.
pub fn diagnostics(
    r: usize,
    d: usize,
    lambda: f64,
    j: usize,
) -> Result<WeakDualDiagnostics, WeakError> {
    check_rdl(r, d, lambda, 3)?;
    if j < 1 || j > d {
        return Err(WeakError::BadConfig { j, k: 0, r, d });
    }
    let mu = 1.0 + lambda;
    let s = (r - 1) as i32;
    if (d as f64) * (s as f64) * mu.ln() > MAX_SAFE_EXPONENT {
        return Err(WeakError::Overflow);
    }
    let rho = mu.powi(s);
    let sigma = lambda.powi(s);
    let nu = rho - sigma;
    let gamma = rho - lambda.powi(s - 1) * (lambda + s as f64);
    let b_j = mu.powi(s * j as i32) - nu.powi(j as i32);
    let c_j = mu.powi(s * j as i32) * nu + lambda * gamma * nu.powi(j as i32);
    let g_j = j as f64 * c_j / b_j;

    // f(j) from the constraint rearrangement, using alpha_j = alpha_v / lambda
    let z_minus = mu.powi(s * j as i32);
    let z_plus = nu.powi(j as i32);
    let alpha_j = z_plus / (z_minus + lambda * z_plus);
    let inner = j as f64 * (sigma * s as f64 * alpha_j - nu) / (mu * alpha_j - 1.0)
        + (s as f64) * (d as f64) * nu;
    let f_j = (1.0 - (d as f64) * nu / inner) / mu;
    Ok(WeakDualDiagnostics { nu, gamma, rho, sigma, b_j, c_j, g_j, f_j })
}

#[derive(Debug, Clone, Serialize)]
pub struct GMonotonicityReport {
    pub all_pass: bool,
    /// max over the grid of g(j) - g(d); feasibility needs this <= tol.
    pub max_excess: f64,
    pub worst_lambda: f64,
    pub worst_j: usize,
}

/// Numeric companion to the dual-feasibility induction: checks
/// g(j) <= g(d) for all 0 < j <= d at every grid fugacity, along with the
/// algebraic identities rho - nu = sigma and rho >= gamma.
pub fn g_monotonicity_check(
    r: usize,
    d: usize,
    lambdas: &[f64],
) -> Result<GMonotonicityReport, WeakError> {
    if d < 2 {
        return Err(WeakError::DegreeTooSmall { d, min: 2 });
    }
    let mut max_excess = f64::NEG_INFINITY;
    let mut worst = (0.0, 1);
    for &lambda in lambdas {
        let at_d = diagnostics(r, d, lambda, d)?;
        debug_assert!((at_d.rho - at_d.nu - at_d.sigma).abs() <= 1e-12 * at_d.rho);
        debug_assert!(at_d.rho >= at_d.gamma);
        for j in 1..=d {
            let at_j = diagnostics(r, d, lambda, j)?;
            let excess = at_j.g_j - at_d.g_j;
            if excess > max_excess {
                max_excess = excess;
                worst = (lambda, j);
            }
        }
    }
    let scale = lambdas
        .iter()
        .map(|&l| diagnostics(r, d, l, d).map(|x| x.g_j.abs()).unwrap_or(1.0))
        .fold(1.0f64, f64::max);
    Ok(GMonotonicityReport {
        all_pass: max_excess <= 1e-9 * scale,
        max_excess,
        worst_lambda: worst.0,
        worst_j: worst.1,
    })
}

/// Integrand of the weak asymptotic constant.
pub fn cw_integrand(r: usize, c: f64) -> f64 {
    let t = c.powi(r as i32 - 1);
    if t > MAX_SAFE_EXPONENT {
        return 0.0;
    }
    1.0 / (r as f64 + (r * r) as f64 * t.exp_m1())
}

/// c_{w,r}: the weak second-order constant, (1/ln 2) times the integral of
/// [`cw_integrand`] over (0, infinity) with the tail truncated where the
/// integrand drops below tol * 1e-3.
pub fn cw_constant(r: usize, tol: f64) -> Result<f64, WeakError> {
    if r < 3 {
        return Err(WeakError::UniformityTooSmall { r, min: 3 });
    }
    let cutoff = tail_cutoff(|c| cw_integrand(r, c), tol * 1e-3, 100.0);
    Ok(adaptive_simpson(|c| cw_integrand(r, c), 0.0, cutoff, tol) / std::f64::consts::LN_2)
}
