//! Adaptive Simpson quadrature.
//!
//! `adaptive_simpson` is the workhorse. `integrate_unit_dyadic` integrates
//! over (0, 1] with the interval pre-split dyadically toward 0, because the
//! occupancy integrands develop a spike of width ~1/d near the origin that
//! plain adaptivity started from three samples would miss entirely.

const MAX_DEPTH: u32 = 60;

fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
    h * (fa + 4.0 * fm + fb) / 6.0
}

fn recurse<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(fa, flm, fm, m - a);
    let right = simpson(fm, frm, fb, b - m);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        // Richardson correction
        left + right + delta / 15.0
    } else {
        recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
}

/// Integral of `f` over `[a, b]` with absolute error near `tol`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = simpson(fa, fm, fb, b - a);
    recurse(&f, a, b, fa, fm, fb, whole, tol, MAX_DEPTH)
}

/// Number of dyadic pieces in [`integrate_unit_dyadic`]; the leftover sliver
/// at the origin has width 2^-52 and is handled by the limiting value.
const DYADIC_LEVELS: u32 = 52;

/// Integral of `f` over (0, 1], where `f(0)` must already return the
/// limiting value at 0+. Sub-tolerances are proportional to piece width.
pub fn integrate_unit_dyadic<F: Fn(f64) -> f64>(f: F, tol: f64) -> f64 {
    let mut total = 0.0;
    let mut hi = 1.0f64;
    for _ in 0..DYADIC_LEVELS {
        let lo = 0.5 * hi;
        total += adaptive_simpson(&f, lo, hi, tol * (hi - lo));
        hi = lo;
    }
    total + f(0.0) * hi
}

/// Smallest `c >= 1` (stepping by 0.5) where `f(c)` drops below `threshold`.
/// Used to truncate rapidly decaying tails of improper integrals.
pub fn tail_cutoff<F: Fn(f64) -> f64>(f: F, threshold: f64, max: f64) -> f64 {
    let mut c = 1.0f64;
    while c < max && f(c) >= threshold {
        c += 0.5;
    }
    c
}
