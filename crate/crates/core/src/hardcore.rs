//! Hard-core model machinery: exact enumeration of k-independent sets,
//! independence polynomials, occupancy fractions, and a Glauber-dynamics
//! estimator for instances too large to enumerate.
//!
//! Enumeration is count-output-sensitive backtracking: partial independent
//! sets are extended in increasing vertex order, maintaining per-edge
//! intersection counters, so the work is proportional to the number of
//! independent sets rather than to 2^n.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::hypergraph::Hypergraph;

/// Default cap on the number of enumerated independent sets.
pub const DEFAULT_ENUM_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error)]
pub enum HardcoreError {
    #[error("independence level k={k} must be at least 2")]
    LevelTooSmall { k: usize },
    #[error("independence level k={k} exceeds the size of edge {edge}")]
    LevelExceedsEdge { k: usize, edge: usize },
    #[error("enumeration budget of {budget} independent sets exceeded; use the Glauber sampler")]
    BudgetExceeded { budget: u64 },
    #[error("fugacity must be nonnegative, got {lambda}")]
    NegativeFugacity { lambda: f64 },
    #[error("{name} must be positive")]
    NonPositiveParameter { name: &'static str },
}

/// Coefficients of Z_G(lambda) at independence level k:
/// `coeffs[m]` counts the k-independent sets of size m.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndependencePolynomial {
    pub k: usize,
    pub n: usize,
    pub coeffs: Vec<BigUint>,
}

impl IndependencePolynomial {
    /// Total number of k-independent sets (the value at lambda = 1).
    pub fn total(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Z_G(lambda) as an exact rational.
    pub fn evaluate(&self, lambda: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        let mut power = BigRational::one();
        for c in &self.coeffs {
            acc += BigRational::from_integer(c.clone().into()) * &power;
            power *= lambda;
        }
        acc
    }

    /// lambda Z'(lambda) as an exact rational (the occupancy numerator).
    pub fn weighted_size_sum(&self, lambda: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        let mut power = BigRational::one();
        for (m, c) in self.coeffs.iter().enumerate() {
            acc += BigRational::from_integer((c.clone() * BigUint::from(m)).into()) * &power;
            power *= lambda;
        }
        acc
    }
}

struct Backtracker {
    incidence: Vec<Vec<usize>>,
    hits: Vec<usize>,
    cap: usize, // k - 1: maximum allowed intersection with any edge
    n: usize,
    budget: u64,
    visited: u64,
}

impl Backtracker {
    fn new(h: &Hypergraph, k: usize, budget: u64) -> Result<Self, HardcoreError> {
        if k < 2 {
            return Err(HardcoreError::LevelTooSmall { k });
        }
        for (idx, e) in h.edges().iter().enumerate() {
            if k > e.len() {
                return Err(HardcoreError::LevelExceedsEdge { k, edge: idx });
            }
        }
        let mut incidence = vec![Vec::new(); h.vertex_count()];
        for (idx, e) in h.edges().iter().enumerate() {
            for &v in e {
                incidence[v].push(idx);
            }
        }
        Ok(Backtracker {
            incidence,
            hits: vec![0; h.edge_count()],
            cap: k - 1,
            n: h.vertex_count(),
            budget,
            visited: 0,
        })
    }

    fn can_add(&self, v: usize) -> bool {
        self.incidence[v].iter().all(|&e| self.hits[e] < self.cap)
    }

    /// Visits every k-independent set exactly once, calling `visit(size)` on
    /// entry. Sets are extended in increasing vertex order.
    fn run(&mut self, visit: &mut dyn FnMut(usize)) -> Result<(), HardcoreError> {
        self.recurse(0, 0, visit)
    }

    fn recurse(
        &mut self,
        start: usize,
        size: usize,
        visit: &mut dyn FnMut(usize),
    ) -> Result<(), HardcoreError> {
        self.visited += 1;
        if self.visited > self.budget {
            return Err(HardcoreError::BudgetExceeded { budget: self.budget });
        }
        visit(size);
        for v in start..self.n {
            if self.can_add(v) {
                for &e in &self.incidence[v] {
                    self.hits[e] += 1;
                }
                self.recurse(v + 1, size + 1, visit)?;
                for &e in &self.incidence[v] {
                    self.hits[e] -= 1;
                }
            }
        }
        Ok(())
    }
}

/// Exact coefficients of the independence polynomial at level k.
pub fn independence_polynomial(
    h: &Hypergraph,
    k: usize,
) -> Result<IndependencePolynomial, HardcoreError> {
    independence_polynomial_with_budget(h, k, DEFAULT_ENUM_BUDGET)
}

pub fn independence_polynomial_with_budget(
    h: &Hypergraph,
    k: usize,
    budget: u64,
) -> Result<IndependencePolynomial, HardcoreError> {
    let mut counts = vec![0u64; h.vertex_count() + 1];
    let mut bt = Backtracker::new(h, k, budget)?;
    bt.run(&mut |size| counts[size] += 1)?;
    while counts.len() > 1 && *counts.last().unwrap() == 0 {
        counts.pop();
    }
    Ok(IndependencePolynomial {
        k,
        n: h.vertex_count(),
        coeffs: counts.into_iter().map(BigUint::from).collect(),
    })
}

/// i_k(H): number of k-independent sets. Cheaper than the polynomial —
/// skips the size bookkeeping.
pub fn count(h: &Hypergraph, k: usize) -> Result<BigUint, HardcoreError> {
    count_with_budget(h, k, DEFAULT_ENUM_BUDGET)
}

pub fn count_with_budget(h: &Hypergraph, k: usize, budget: u64) -> Result<BigUint, HardcoreError> {
    let mut total = 0u64;
    let mut bt = Backtracker::new(h, k, budget)?;
    bt.run(&mut |_| total += 1)?;
    Ok(BigUint::from(total))
}

/// Direct-expectation accumulator: sums lambda^{|I|} and |I| lambda^{|I|}
/// over all independent sets, without polynomial coefficients. Provides the
/// second route for the two-formulation occupancy identity.
pub fn occupancy_direct(
    h: &Hypergraph,
    k: usize,
    lambda: &BigRational,
    budget: u64,
) -> Result<BigRational, HardcoreError> {
    if lambda.is_negative() {
        return Err(HardcoreError::NegativeFugacity {
            lambda: lambda.to_f64().unwrap_or(f64::NAN),
        });
    }
    let n = h.vertex_count();
    let mut powers = Vec::with_capacity(n + 1);
    powers.push(BigRational::one());
    for m in 1..=n {
        let next = &powers[m - 1] * lambda;
        powers.push(next);
    }
    let mut z = BigRational::zero();
    let mut weighted = BigRational::zero();
    let mut bt = Backtracker::new(h, k, budget)?;
    bt.run(&mut |size| {
        z += &powers[size];
        weighted += &powers[size] * BigRational::from_integer(size.into());
    })?;
    Ok(weighted / (BigRational::from_integer(n.into()) * z))
}

/// Occupancy fraction (lambda / n) Z'(lambda) / Z(lambda), exactly.
pub fn occupancy_exact(
    poly: &IndependencePolynomial,
    lambda: &BigRational,
) -> Result<BigRational, HardcoreError> {
    if lambda.is_negative() {
        return Err(HardcoreError::NegativeFugacity {
            lambda: lambda.to_f64().unwrap_or(f64::NAN),
        });
    }
    let z = poly.evaluate(lambda);
    let weighted = poly.weighted_size_sum(lambda);
    Ok(weighted / (BigRational::from_integer(poly.n.into()) * z))
}

/// Float entry point: the fugacity is interpreted as the exact rational the
/// f64 denotes, evaluated in exact arithmetic and rounded once at the end.
pub fn occupancy_exact_f64(
    poly: &IndependencePolynomial,
    lambda: f64,
) -> Result<f64, HardcoreError> {
    if lambda < 0.0 || !lambda.is_finite() {
        return Err(HardcoreError::NegativeFugacity { lambda });
    }
    let rat = BigRational::from_float(lambda).expect("finite float");
    let occ = occupancy_exact(poly, &rat)?;
    Ok(occ.to_f64().expect("occupancy fraction fits in f64"))
}

/// Result of a Glauber-dynamics run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct McEstimate {
    pub mean: f64,
    pub stderr: f64,
    pub steps: u64,
    pub burnin: u64,
    pub seed: u64,
}

const BATCHES: u64 = 64;

/// Single-site heat-bath dynamics targeting Pr(I) proportional to
/// lambda^{|I|} on the k-independent sets of `h`.
///
/// Each step picks a uniform vertex v and resamples it: occupied with
/// probability lambda/(1+lambda) when insertion keeps the set independent,
/// unoccupied otherwise. Reports the time-averaged occupied fraction after
/// burn-in with a batch-means standard error. Runs with equal seeds are
/// bit-identical.
pub fn glauber_estimate(
    h: &Hypergraph,
    k: usize,
    lambda: f64,
    steps: u64,
    burnin: u64,
    seed: u64,
) -> Result<McEstimate, HardcoreError> {
    if lambda < 0.0 || !lambda.is_finite() {
        return Err(HardcoreError::NegativeFugacity { lambda });
    }
    if steps == 0 {
        return Err(HardcoreError::NonPositiveParameter { name: "steps" });
    }
    if k < 2 {
        return Err(HardcoreError::LevelTooSmall { k });
    }
    for (idx, e) in h.edges().iter().enumerate() {
        if k > e.len() {
            return Err(HardcoreError::LevelExceedsEdge { k, edge: idx });
        }
    }

    let n = h.vertex_count();
    if n == 0 {
        return Ok(McEstimate { mean: 0.0, stderr: 0.0, steps, burnin, seed });
    }
    let mut incidence = vec![Vec::new(); n];
    for (idx, e) in h.edges().iter().enumerate() {
        for &v in e {
            incidence[v].push(idx);
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p_insert = lambda / (1.0 + lambda);
    let mut occupied = vec![false; n];
    let mut hits = vec![0usize; h.edge_count()];
    let mut occupied_count = 0usize;

    let step = |occupied: &mut Vec<bool>,
                    hits: &mut Vec<usize>,
                    occupied_count: &mut usize,
                    rng: &mut ChaCha8Rng| {
        let v = rng.gen_range(0..n);
        let want_occupied = rng.gen::<f64>() < p_insert;
        if want_occupied && !occupied[v] {
            if incidence[v].iter().all(|&e| hits[e] < k - 1) {
                occupied[v] = true;
                *occupied_count += 1;
                for &e in &incidence[v] {
                    hits[e] += 1;
                }
            }
        } else if !want_occupied && occupied[v] {
            occupied[v] = false;
            *occupied_count -= 1;
            for &e in &incidence[v] {
                hits[e] -= 1;
            }
        }
        debug_assert!(incidence[v].iter().all(|&e| hits[e] <= k - 1));
    };

    for _ in 0..burnin {
        step(&mut occupied, &mut hits, &mut occupied_count, &mut rng);
    }

    let batches = BATCHES.min(steps);
    let mut batch_means = Vec::with_capacity(batches as usize);
    let mut done = 0u64;
    let mut total = 0.0f64;
    for b in 0..batches {
        let target = steps * (b + 1) / batches;
        let mut acc = 0.0f64;
        let mut cnt = 0u64;
        while done < target {
            step(&mut occupied, &mut hits, &mut occupied_count, &mut rng);
            acc += occupied_count as f64 / n as f64;
            cnt += 1;
            done += 1;
        }
        if cnt > 0 {
            batch_means.push(acc / cnt as f64);
        }
        total += acc;
    }
    let mean = total / steps as f64;
    let b = batch_means.len() as f64;
    let stderr = if batch_means.len() > 1 {
        let var = batch_means.iter().map(|m| (m - mean).powi(2)).sum::<f64>() / (b - 1.0);
        (var / b).sqrt()
    } else {
        0.0
    };
    Ok(McEstimate { mean, stderr, steps, burnin, seed })
}
