//! Strong independent sets in r-uniform hypergraphs: local configurations
//! indexed by edge-size degree profiles, the occupancy LP, its closed-form
//! optimum, the dual recursion and certificate, the slack-constraint sweep,
//! and the r = 3 coefficient claims.
//!
//! In a cross-edge-free hypergraph the local configuration of a vertex is
//! determined by the profile (d_1, ..., d_r), where d_t counts the edges
//! through the vertex truncated to size t by externally covered neighbors.
//! Its partition function is P_C = lambda + prod_t (1 + (t-1) lambda)^{d_t}.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::lp::DenseLp;
use crate::quad::{adaptive_simpson, tail_cutoff};

/// Violations smaller than this count as clean dual feasibility.
pub const CERTIFICATE_TOL: f64 = 1e-10;

/// Profile sweeps larger than this fall back to sampling.
const EXHAUSTIVE_PROFILE_LIMIT: u128 = 25_000;

const SAMPLED_PROFILES: usize = 10_000;

#[derive(Debug, Error)]
pub enum StrongError {
    #[error("requires r >= {min}, got r={r}")]
    UniformityTooSmall { r: usize, min: usize },
    #[error("requires d >= {min}, got d={d}")]
    DegreeTooSmall { d: usize, min: usize },
    #[error("fugacity must be positive and finite, got {lambda}")]
    BadFugacity { lambda: f64 },
    #[error("profile {profile:?} is not a degree profile for r={r}, d={d}")]
    BadProfile { profile: Vec<usize>, r: usize, d: usize },
    #[error("parameters overflow f64; use the asymptotic (log-space) entry points")]
    Overflow,
    #[error("LP would have {columns} columns, over the budget of {budget}")]
    LpTooLarge { columns: u128, budget: u128 },
    #[error(
        "dual recursion and closed form disagree at t={t}: {recursion} vs {closed}; \
         parameters are outside the certified numeric range"
    )]
    DualRoutesDisagree { t: usize, recursion: f64, closed: f64 },
}

/// Degree profile (d_1, ..., d_r) with sum d.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrongConfig {
    pub profile: Vec<usize>,
}

impl StrongConfig {
    pub fn new(profile: Vec<usize>, r: usize, d: usize) -> Result<Self, StrongError> {
        if profile.len() != r || profile.iter().sum::<usize>() != d {
            return Err(StrongError::BadProfile { profile, r, d });
        }
        Ok(StrongConfig { profile })
    }

    /// Profile concentrated on size t (1-based): all d edges have size t.
    pub fn vertex(t: usize, r: usize, d: usize) -> Self {
        let mut profile = vec![0; r];
        profile[t - 1] = d;
        StrongConfig { profile }
    }
}

/// Number of profiles: C(d + r - 1, r - 1).
pub fn profile_count(r: usize, d: usize) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..r - 1 {
        acc = acc * (d + r - 1 - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// All degree profiles in lexicographic order.
pub fn profiles(r: usize, d: usize) -> Vec<StrongConfig> {
    let mut out = Vec::new();
    let mut current = vec![0usize; r];
    fill(&mut out, &mut current, 0, d, r);
    out
}

fn fill(out: &mut Vec<StrongConfig>, current: &mut Vec<usize>, pos: usize, left: usize, r: usize) {
    if pos == r - 1 {
        current[pos] = left;
        out.push(StrongConfig { profile: current.clone() });
        return;
    }
    for take in 0..=left {
        current[pos] = take;
        fill(out, current, pos + 1, left - take, r);
    }
}

fn check_rdl(r: usize, d: usize, lambda: f64, min_r: usize, min_d: usize) -> Result<(), StrongError> {
    if r < min_r {
        return Err(StrongError::UniformityTooSmall { r, min: min_r });
    }
    if d < min_d {
        return Err(StrongError::DegreeTooSmall { d, min: min_d });
    }
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(StrongError::BadFugacity { lambda });
    }
    Ok(())
}

fn binomial(n: usize, k: usize) -> f64 {
    let mut acc = 1.0f64;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// Local partition function P_C = lambda + prod_t (1 + (t-1) lambda)^{d_t}.
pub fn partition_local(
    r: usize,
    d: usize,
    lambda: f64,
    cfg: &StrongConfig,
) -> Result<f64, StrongError> {
    check_rdl(r, d, lambda, 2, 1)?;
    if cfg.profile.len() != r || cfg.profile.iter().sum::<usize>() != d {
        return Err(StrongError::BadProfile { profile: cfg.profile.clone(), r, d });
    }
    let mut prod = 1.0f64;
    for (t0, &dt) in cfg.profile.iter().enumerate() {
        prod *= (1.0 + t0 as f64 * lambda).powi(dt as i32);
    }
    Ok(lambda + prod)
}

/// The per-(r, d, lambda) quantities shared by the LP, the dual, and the
/// slack sweep: Q_t = (1 + (t-1) lambda)^d, the weights v(t), and
/// Z = sum_t P_{I_t} v(t).
#[derive(Debug, Clone, Serialize)]
pub struct StrongQuantities {
    pub r: usize,
    pub d: usize,
    pub lambda: f64,
    /// Q_t at index t-1.
    pub q: Vec<f64>,
    /// v(t) at index t-1; v(r) = 1.
    pub v: Vec<f64>,
    pub z: f64,
}

impl StrongQuantities {
    pub fn p_vertex(&self, t: usize) -> f64 {
        self.q[t - 1] + self.lambda
    }

    /// Q_eta = prod_t Q_t^{eta_t} for an integral profile, via exact integer
    /// powers so that vertex profiles reproduce Q_t bit for bit.
    pub fn q_profile(&self, cfg: &StrongConfig) -> f64 {
        let mut acc = 1.0f64;
        for (t0, &dt) in cfg.profile.iter().enumerate() {
            acc *= (1.0 + t0 as f64 * self.lambda).powi(dt as i32);
        }
        acc
    }
}

/// Computes Q, v, Z in plain f64. Errors with [`StrongError::Overflow`]
/// once the powers leave f64 range; the asymptotic paths use
/// [`alpha_strong_over_lambda`] instead.
pub fn quantities(r: usize, d: usize, lambda: f64) -> Result<StrongQuantities, StrongError> {
    check_rdl(r, d, lambda, 2, 1)?;
    let top = d as f64 * (1.0 + (r as f64 - 1.0) * lambda).ln();
    if top > 700.0 {
        return Err(StrongError::Overflow);
    }
    let q: Vec<f64> = (1..=r).map(|t| (1.0 + (t - 1) as f64 * lambda).powi(d as i32)).collect();
    let mut v = vec![0.0f64; r];
    for t in 1..=r {
        // v(t) = C(r-1, t-1) prod_{i=t}^{r-1} ((1+i lambda)^{d-1} - 1),
        // each factor as expm1(m log1p(x)) for relative accuracy near 0
        let mut acc = binomial(r - 1, t - 1);
        for i in t..r {
            acc *= ((d - 1) as f64 * (i as f64 * lambda).ln_1p()).exp_m1();
        }
        v[t - 1] = acc;
        debug_assert!(
            d < 2 || v[t - 1] > 0.0,
            "v({t}) vanished at lambda={lambda}, d={d}"
        );
    }
    let z = (1..=r).map(|t| (q[t - 1] + lambda) * v[t - 1]).sum();
    Ok(StrongQuantities { r, d, lambda, q, v, z })
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct StrongAlpha {
    pub value: f64,
    /// The occupancy bound is proved only for r = 3; other uniformities are
    /// computed as-is and flagged unproven.
    pub proven: bool,
}

fn ln_expm1(m: f64) -> f64 {
    if m > 0.693 {
        m + (-(-m).exp()).ln_1p()
    } else {
        m.exp_m1().ln()
    }
}

fn logsumexp(xs: &[f64]) -> f64 {
    let max = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    max + xs.iter().map(|x| (x - max).exp()).sum::<f64>().ln()
}

/// alpha_s(r, d, lambda) / lambda evaluated in log space; stable for d up to
/// at least 10^7. Returns the analytic limit 1 at lambda = 0.
pub fn alpha_strong_over_lambda(r: usize, d: usize, lambda: f64) -> Result<f64, StrongError> {
    if lambda == 0.0 {
        return Ok(1.0);
    }
    check_rdl(r, d, lambda, 2, 1)?;
    let mut ln_v = vec![0.0f64; r];
    let mut ln_vp = vec![0.0f64; r];
    for t in 1..=r {
        let mut acc = binomial(r - 1, t - 1).ln();
        for i in t..r {
            acc += ln_expm1((d - 1) as f64 * (i as f64 * lambda).ln_1p());
        }
        ln_v[t - 1] = acc;
        let m_q = d as f64 * ((t - 1) as f64 * lambda).ln_1p();
        let ln_p = m_q + (lambda * (-m_q).exp()).ln_1p();
        ln_vp[t - 1] = acc + ln_p;
    }
    Ok((logsumexp(&ln_v) - logsumexp(&ln_vp)).exp())
}

/// alpha_s(r, d, lambda): upper bound on the strong-IS occupancy fraction of
/// r-uniform d-regular linear cross-edge-free hypergraphs (proved for r = 3).
pub fn alpha_strong(r: usize, d: usize, lambda: f64) -> Result<StrongAlpha, StrongError> {
    let value = lambda * alpha_strong_over_lambda(r, d, lambda)?;
    Ok(StrongAlpha { value, proven: r == 3 })
}

/// Occupancy LP over degree profiles, in the normalization where the optimal
/// value is alpha_s / lambda: objective 1/P_C, rows t = 1..r-1 carrying
/// (eta_t + eta_{t+1}((P_C - lambda)/(1 + t lambda) - 1) - r eta_t / t) / P_C,
/// then the probability normalization. The dual vector of the solved LP is
/// (Lambda_1, ..., Lambda_{r-1}, Lambda).
pub fn build_strong_lp(r: usize, d: usize, lambda: f64) -> Result<DenseLp, StrongError> {
    check_rdl(r, d, lambda, 2, 1)?;
    let count = profile_count(r, d);
    if count > EXHAUSTIVE_PROFILE_LIMIT {
        return Err(StrongError::LpTooLarge { columns: count, budget: EXHAUSTIVE_PROFILE_LIMIT });
    }
    let cols = profiles(r, d);
    let mut objective = Vec::with_capacity(cols.len());
    let mut rows = vec![Vec::with_capacity(cols.len()); r - 1];
    for cfg in &cols {
        let p = partition_local(r, d, lambda, cfg)?;
        objective.push(1.0 / p);
        let eta: Vec<f64> = cfg.profile.iter().map(|&x| x as f64 / d as f64).collect();
        for t in 1..r {
            let coef = eta[t - 1]
                + eta[t] * ((p - lambda) / (1.0 + t as f64 * lambda) - 1.0)
                - r as f64 * eta[t - 1] / t as f64;
            rows[t - 1].push(coef / p);
        }
    }
    let mut constraints = rows;
    constraints.push(vec![1.0; cols.len()]);
    let mut rhs = vec![0.0; r - 1];
    rhs.push(1.0);
    Ok(DenseLp { objective, constraints, rhs })
}

/// Candidate primal p*(I_t) = P_{I_t} v(t) / Z spread over the full profile
/// ordering (zero off the vertex profiles).
pub fn candidate_primal(r: usize, d: usize, lambda: f64) -> Result<Vec<f64>, StrongError> {
    let q = quantities(r, d, lambda)?;
    let cols = profiles(r, d);
    let mut primal = vec![0.0; cols.len()];
    for t in 1..=r {
        let vertex = StrongConfig::vertex(t, r, d);
        let idx = cols.iter().position(|c| *c == vertex).expect("vertex profile present");
        primal[idx] = q.p_vertex(t) * q.v[t - 1] / q.z;
    }
    Ok(primal)
}

fn big_binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn rat_pow(base: &BigRational, exp: usize) -> BigRational {
    num_traits::pow::pow(base.clone(), exp)
}

/// Exact-rational core of the dual certificate. The coefficients
/// c_t = Lambda + Lambda_{t-1} / (1 + (t-1) lambda) cancel to within an
/// exponentially small remainder of Lambda as d grows, so they are computed
/// in exact arithmetic (with the fugacity taken as the rational the f64
/// denotes) and rounded once on output.
#[derive(Debug, Clone)]
struct ExactDual {
    lambda: BigRational,
    lam_star: BigRational,
    lambdas: Vec<BigRational>,
    c: Vec<BigRational>,
}

fn exact_dual(r: usize, d: usize, lambda_f: f64) -> Result<ExactDual, StrongError> {
    check_rdl(r, d, lambda_f, 2, 2)?;
    let lambda = BigRational::from_float(lambda_f).expect("finite fugacity");
    let one = BigRational::one();

    let base: Vec<BigRational> =
        (0..r).map(|t0| &one + BigRational::from_integer(t0.into()) * &lambda).collect();
    let q: Vec<BigRational> = base.iter().map(|b| rat_pow(b, d)).collect();
    let p: Vec<BigRational> = q.iter().map(|qt| qt + &lambda).collect();
    let mut v = vec![BigRational::one(); r];
    for t in 1..=r {
        let mut acc = BigRational::from_integer(big_binomial(r - 1, t - 1));
        for i in t..r {
            acc *= rat_pow(&base[i], d - 1) - &one;
        }
        v[t - 1] = acc;
    }
    let z: BigRational = (0..r).map(|i| &p[i] * &v[i]).sum();
    let lam_star = v.iter().sum::<BigRational>() / &z;

    // closed form and forward recursion; algebraically identical, so exact
    // agreement is asserted below
    let mut closed = vec![BigRational::zero(); r - 1];
    for t in 1..r {
        let mut acc = BigRational::zero();
        for s in 1..=t {
            acc += &v[s - 1] / &v[t - 1] * (&lam_star * &p[s - 1] - &one);
        }
        closed[t - 1] = BigRational::new(t.into(), (r - t).into()) * acc;
    }
    let mut prev = BigRational::zero();
    for s in 1..r {
        let growth = rat_pow(&base[s - 1], d - 1) - &one;
        let cur = BigRational::new(s.into(), (r - s).into())
            * (prev * growth + &lam_star * &p[s - 1] - &one);
        if cur != closed[s - 1] {
            return Err(StrongError::DualRoutesDisagree {
                t: s,
                recursion: cur.to_f64().unwrap_or(f64::NAN),
                closed: closed[s - 1].to_f64().unwrap_or(f64::NAN),
            });
        }
        prev = cur;
    }

    let mut c = vec![BigRational::zero(); r];
    for t in 1..=r {
        let prev_lambda =
            if t >= 2 { closed[t - 2].clone() } else { BigRational::zero() };
        c[t - 1] = &lam_star + prev_lambda / &base[t - 1];
    }
    Ok(ExactDual { lambda, lam_star, lambdas: closed, c })
}

/// Dual variables: Lambda (the LP value), Lambda_t for t = 1..r-1, and the
/// slack coefficients c_t = Lambda + Lambda_{t-1} / (1 + (t-1) lambda).
/// The f64 fields are views of an exact-rational computation.
#[derive(Debug, Clone, Serialize)]
pub struct StrongDualCertificate {
    pub lambda: f64,
    /// Lambda_t at index t-1, t = 1..r-1.
    pub lambdas: Vec<f64>,
    /// c_t at index t-1, t = 1..r.
    pub c: Vec<f64>,
    #[serde(skip)]
    exact: ExactDual,
}

impl StrongDualCertificate {
    /// Lambda_s with the convention Lambda_s = 0 for s <= 0 or s >= r.
    pub fn lambda_star(&self, s: isize) -> f64 {
        if s <= 0 || s as usize > self.lambdas.len() {
            0.0
        } else {
            self.lambdas[s as usize - 1]
        }
    }

    /// Dual vector in the row order of [`build_strong_lp`].
    pub fn lp_dual_vector(&self) -> Vec<f64> {
        let mut out = self.lambdas.clone();
        out.push(self.lambda);
        out
    }
}

/// Computes the dual certificate twice — by the forward recursion with the
/// constraints set to equality, and by the closed form — in exact rational
/// arithmetic, and insists the two agree.
pub fn strong_dual(r: usize, d: usize, lambda: f64) -> Result<StrongDualCertificate, StrongError> {
    let exact = exact_dual(r, d, lambda)?;
    let f = |x: &BigRational| x.to_f64().unwrap_or(f64::NAN);
    Ok(StrongDualCertificate {
        lambda: f(&exact.lam_star),
        lambdas: exact.lambdas.iter().map(f).collect(),
        c: exact.c.iter().map(f).collect(),
        exact,
    })
}

/// Outcome of the slack sweep S(eta) = sum_t eta_t c_t (Q_eta - Q_t) >= 0.
#[derive(Debug, Clone, Serialize)]
pub struct SlackReport {
    pub min_slack: f64,
    pub argmin: StrongConfig,
    /// max |S| over the r vertex profiles, where S vanishes by construction.
    pub max_vertex_abs: f64,
    /// true when the sweep sampled instead of enumerating every profile.
    pub sampled: bool,
    pub profiles_checked: usize,
    pub feasible: bool,
}

/// Power tables (1 + (t-1) lambda)^m for m = 0..=d, shared across the sweep.
struct SlackTables {
    powers: Vec<Vec<BigRational>>,
    d: usize,
}

impl SlackTables {
    fn new(exact: &ExactDual, r: usize, d: usize) -> Self {
        let one = BigRational::one();
        let mut powers = Vec::with_capacity(r);
        for t0 in 0..r {
            let base = &one + BigRational::from_integer(t0.into()) * &exact.lambda;
            let mut table = Vec::with_capacity(d + 1);
            table.push(BigRational::one());
            for m in 1..=d {
                let next = &table[m - 1] * &base;
                table.push(next);
            }
            powers.push(table);
        }
        SlackTables { powers, d }
    }

    /// d * S(eta) = sum_t d_t c_t (Q_eta - Q_t), exactly.
    fn scaled_slack(&self, exact: &ExactDual, cfg: &StrongConfig) -> BigRational {
        let mut q_eta = BigRational::one();
        for (t0, &dt) in cfg.profile.iter().enumerate() {
            if dt > 0 {
                q_eta *= &self.powers[t0][dt];
            }
        }
        let mut s = BigRational::zero();
        for (t0, &dt) in cfg.profile.iter().enumerate() {
            if dt > 0 {
                s += BigRational::from_integer(dt.into())
                    * &exact.c[t0]
                    * (&q_eta - &self.powers[t0][self.d]);
            }
        }
        s
    }
}

/// Evaluates the slack constraint over integral profiles in exact rational
/// arithmetic: every profile when their number is within budget, otherwise
/// the vertex profiles, pairwise half-and-half profiles, and a seeded random
/// sample.
pub fn slack_check(
    r: usize,
    d: usize,
    lambda: f64,
    cert: &StrongDualCertificate,
) -> Result<SlackReport, StrongError> {
    check_rdl(r, d, lambda, 2, 2)?;
    let exact = &cert.exact;
    let tables = SlackTables::new(exact, r, d);
    let scale = BigRational::from_integer(d.into());

    let mut min_slack: Option<(BigRational, StrongConfig)> = None;
    let mut consider = |cfg: StrongConfig| {
        let s = tables.scaled_slack(exact, &cfg);
        if min_slack.as_ref().map_or(true, |(best, _)| s < *best) {
            min_slack = Some((s, cfg));
        }
    };

    let mut max_vertex_abs = BigRational::zero();
    for t in 1..=r {
        let s = tables.scaled_slack(exact, &StrongConfig::vertex(t, r, d));
        if s.abs() > max_vertex_abs {
            max_vertex_abs = s.abs();
        }
    }

    let exhaustive = profile_count(r, d) <= EXHAUSTIVE_PROFILE_LIMIT;
    let mut checked = 0usize;
    if exhaustive {
        for cfg in profiles(r, d) {
            consider(cfg);
            checked += 1;
        }
    } else {
        for t in 1..=r {
            consider(StrongConfig::vertex(t, r, d));
            checked += 1;
        }
        for a in 1..=r {
            for b in a + 1..=r {
                let mut profile = vec![0usize; r];
                profile[a - 1] = d / 2;
                profile[b - 1] = d - d / 2;
                consider(StrongConfig { profile });
                checked += 1;
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
        for _ in 0..SAMPLED_PROFILES {
            let mut cuts: Vec<usize> = (0..r - 1).map(|_| rng.gen_range(0..=d)).collect();
            cuts.sort_unstable();
            let mut profile = Vec::with_capacity(r);
            let mut prev = 0;
            for &c in &cuts {
                profile.push(c - prev);
                prev = c;
            }
            profile.push(d - prev);
            consider(StrongConfig { profile });
            checked += 1;
        }
    }
    let (min_exact, argmin) = min_slack.expect("at least one profile");
    let min_slack = (min_exact / &scale).to_f64().unwrap_or(f64::NAN);
    Ok(SlackReport {
        feasible: min_slack >= -CERTIFICATE_TOL,
        min_slack,
        argmin,
        max_vertex_abs: (max_vertex_abs / &scale).to_f64().unwrap_or(f64::NAN),
        sampled: !exhaustive,
        profiles_checked: checked,
    })
}

/// Explicit r = 3 coefficient checks at one fugacity.
#[derive(Debug, Clone, Serialize)]
pub struct R3Checks {
    pub lambda: f64,
    /// max relative error between c_t Z and the explicit displays.
    pub display_error: f64,
    /// min of c_1 - c_2, c_2 - c_3, c_3.
    pub ordering_margin: f64,
    /// min over j < i of 2 c_j Q_j - c_i (Q_i + Q_j).
    pub pairwise_margin: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct R3Report {
    pub d: usize,
    pub per_lambda: Vec<R3Checks>,
    pub all_pass: bool,
}

/// Verifies, per grid fugacity: the closed-form displays for Z c_1, Z c_2,
/// Z c_3; the strict ordering c_1 > c_2 > c_3 > 0; and the pairwise
/// inequalities c_i (Q_i + Q_j) < 2 c_j Q_j for j < i.
pub fn r3_coefficient_checks(d: usize, lambdas: &[f64]) -> Result<R3Report, StrongError> {
    let r = 3usize;
    let mut per_lambda = Vec::with_capacity(lambdas.len());
    let mut all_pass = true;
    for &lambda in lambdas {
        let q = quantities(r, d, lambda)?;
        let cert = strong_dual(r, d, lambda)?;
        let a = (1.0 + lambda).powi(d as i32 - 1);
        let b = (1.0 + 2.0 * lambda).powi(d as i32 - 1);
        let displays = [
            a * b + b - a,
            (3.0 * b - 1.0) / (2.0 * (1.0 + lambda)),
            (2.0 * a - 1.0) / (1.0 + 2.0 * lambda),
        ];
        let mut display_error = 0.0f64;
        for t in 0..3 {
            let got = cert.c[t] * q.z;
            let rel = (got - displays[t]).abs() / displays[t].abs().max(1.0);
            display_error = display_error.max(rel);
        }
        let ordering_margin = (cert.c[0] - cert.c[1])
            .min(cert.c[1] - cert.c[2])
            .min(cert.c[2]);
        let mut pairwise_margin = f64::INFINITY;
        for j in 1..=3usize {
            for i in j + 1..=3 {
                let margin = 2.0 * cert.c[j - 1] * q.q[j - 1]
                    - cert.c[i - 1] * (q.q[i - 1] + q.q[j - 1]);
                pairwise_margin = pairwise_margin.min(margin);
            }
        }
        if display_error > 1e-9 || ordering_margin <= 0.0 || pairwise_margin <= 0.0 {
            all_pass = false;
        }
        per_lambda.push(R3Checks { lambda, display_error, ordering_margin, pairwise_margin });
    }
    Ok(R3Report { d, per_lambda, all_pass })
}

/// G_3(d, lambda) = alpha_s(3, d, lambda) / lambda - 1 / (3 (1 + lambda)):
/// the second-order excess over the leading term.
pub fn g3_excess(d: usize, lambda: f64) -> Result<f64, StrongError> {
    check_rdl(3, d, lambda, 3, 1)?;
    if d as f64 * (1.0 + 2.0 * lambda).ln() > 700.0 {
        return Err(StrongError::Overflow);
    }
    let p = (1.0 + lambda).powi(d as i32);
    let w = (1.0 + 2.0 * lambda).powi(d as i32);
    let num = 3.0 * w - 1.0 - 2.0 * lambda;
    let den = 3.0
        * (1.0 + lambda)
        * (1.0 - 3.0 * p + 3.0 * p * w + lambda * (2.0 - 6.0 * p + 3.0 * w));
    Ok(num / den)
}

/// Integrand of the strong r = 3 asymptotic constant, written with
/// exp(-c) factors so it is stable for all c >= 0.
pub fn cs3_integrand(c: f64) -> f64 {
    let e1 = (-c).exp();
    let e2 = (-2.0 * c).exp();
    let e3 = (-3.0 * c).exp();
    (3.0 * e1 - e3) / (3.0 * (e3 - 3.0 * e2 + 3.0))
}

/// c_{s,3}: the strong second-order constant, about 0.603772.
pub fn cs3_constant(tol: f64) -> f64 {
    let cutoff = tail_cutoff(cs3_integrand, tol * 1e-3, 200.0);
    adaptive_simpson(cs3_integrand, 0.0, cutoff, tol) / std::f64::consts::LN_2
}
