//! Small dense linear-program solver with dual vectors.
//!
//! Solves `maximize c.p  subject to  A p = b, p >= 0` by two-phase primal
//! simplex on a dense tableau. Bland's rule (lowest eligible index enters,
//! ratio ties broken by lowest basic variable index) guarantees termination.
//! The artificial columns double as B^{-1}, which yields the dual vector
//! y = c_B B^{-1} at the optimum.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LpError {
    #[error("constraint matrix has {rows} rows but rhs has {rhs} entries")]
    RhsMismatch { rows: usize, rhs: usize },
    #[error("constraint row {row} has {len} entries, expected {expected}")]
    RowMismatch { row: usize, len: usize, expected: usize },
    #[error("objective has {len} entries, expected {expected}")]
    ObjectiveMismatch { len: usize, expected: usize },
    #[error("non-finite entry in {place}")]
    NonFinite { place: String },
    #[error("dual vector has {len} entries, expected {expected}")]
    DualLenMismatch { len: usize, expected: usize },
}

/// maximize objective . p subject to constraints . p = rhs, p >= 0.
#[derive(Debug, Clone)]
pub struct DenseLp {
    pub objective: Vec<f64>,
    pub constraints: Vec<Vec<f64>>,
    pub rhs: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, Serialize)]
pub struct LpSolution {
    pub status: LpStatus,
    pub value: f64,
    pub primal: Vec<f64>,
    pub dual: Vec<f64>,
}

/// Solver tolerances. The defaults are what every caller in this crate uses.
#[derive(Debug, Clone, Copy)]
pub struct LpTolerances {
    /// Entries below this magnitude are not eligible pivots.
    pub pivot: f64,
    /// Feasibility slack for phase-1 termination and sign checks.
    pub feasibility: f64,
    /// Allowed duality gap, relative to 1 + |value|.
    pub duality_gap: f64,
}

impl Default for LpTolerances {
    fn default() -> Self {
        LpTolerances { pivot: 1e-11, feasibility: 1e-9, duality_gap: 1e-8 }
    }
}

impl DenseLp {
    pub fn columns(&self) -> usize {
        self.objective.len()
    }

    pub fn rows(&self) -> usize {
        self.constraints.len()
    }

    fn check(&self) -> Result<(), LpError> {
        let n = self.objective.len();
        if self.rhs.len() != self.constraints.len() {
            return Err(LpError::RhsMismatch { rows: self.constraints.len(), rhs: self.rhs.len() });
        }
        for (i, row) in self.constraints.iter().enumerate() {
            if row.len() != n {
                return Err(LpError::RowMismatch { row: i, len: row.len(), expected: n });
            }
            if row.iter().any(|x| !x.is_finite()) {
                return Err(LpError::NonFinite { place: format!("constraint row {i}") });
            }
        }
        if self.objective.iter().any(|x| !x.is_finite()) {
            return Err(LpError::NonFinite { place: "objective".into() });
        }
        if self.rhs.iter().any(|x| !x.is_finite()) {
            return Err(LpError::NonFinite { place: "rhs".into() });
        }
        Ok(())
    }

    /// Writes the LP as CSV: an objective row then one row per constraint
    /// with its right-hand side in the last column.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let row = |values: &[f64], tail: &str| {
            let mut cells: Vec<String> = values.iter().map(|v| format!("{v:.17e}")).collect();
            cells.push(tail.to_string());
            cells.join(",")
        };
        out.push_str(&row(&self.objective, "objective"));
        out.push('\n');
        for (cons, b) in self.constraints.iter().zip(&self.rhs) {
            out.push_str(&row(cons, &format!("{b:.17e}")));
            out.push('\n');
        }
        out
    }
}

pub fn solve(lp: &DenseLp) -> Result<LpSolution, LpError> {
    solve_with(lp, LpTolerances::default())
}

struct Tableau {
    // m x (n + m + 1): original columns, artificial block, rhs
    rows: Vec<Vec<f64>>,
    basis: Vec<usize>,
    n: usize,
    m: usize,
    redundant: Vec<bool>,
    tol: LpTolerances,
}

impl Tableau {
    fn rhs_col(&self) -> usize {
        self.n + self.m
    }

    /// Reduced-cost row for objective `c` (length n + m) over the current
    /// basis: c_j - c_B B^{-1} A_j.
    fn reduced_costs(&self, c: &[f64]) -> Vec<f64> {
        let width = self.n + self.m;
        let mut red = vec![0.0; width];
        for j in 0..width {
            let mut cb_binv_aj = 0.0;
            for i in 0..self.m {
                cb_binv_aj += c[self.basis[i]] * self.rows[i][j];
            }
            red[j] = c[j] - cb_binv_aj;
        }
        red
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let piv = self.rows[row][col];
        let width = self.rhs_col() + 1;
        for j in 0..width {
            self.rows[row][j] /= piv;
        }
        for i in 0..self.m {
            if i == row {
                continue;
            }
            let factor = self.rows[i][col];
            if factor == 0.0 {
                continue;
            }
            for j in 0..width {
                self.rows[i][j] -= factor * self.rows[row][j];
            }
        }
        self.basis[row] = col;
    }

    /// One simplex phase maximizing `c`. `allowed` limits entering columns.
    /// Returns false if unbounded.
    fn run_phase(&mut self, c: &[f64], allowed: &dyn Fn(usize) -> bool) -> bool {
        loop {
            let red = self.reduced_costs(c);
            // Bland: lowest-index improving column enters
            let entering = (0..red.len())
                .find(|&j| allowed(j) && !self.basis.contains(&j) && red[j] > self.tol.pivot);
            let Some(col) = entering else { return true };
            let rhs = self.rhs_col();
            let mut leave: Option<(usize, f64)> = None;
            for i in 0..self.m {
                if self.redundant[i] {
                    continue;
                }
                let a = self.rows[i][col];
                if a > self.tol.pivot {
                    let ratio = self.rows[i][rhs] / a;
                    let better = match leave {
                        None => true,
                        Some((li, lr)) => {
                            ratio < lr - self.tol.pivot
                                || (ratio <= lr + self.tol.pivot && self.basis[i] < self.basis[li])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((row, _)) = leave else { return false };
            self.pivot(row, col);
        }
    }
}

pub fn solve_with(lp: &DenseLp, tol: LpTolerances) -> Result<LpSolution, LpError> {
    lp.check()?;
    let n = lp.columns();
    let m = lp.rows();

    let mut rows = Vec::with_capacity(m);
    let mut row_sign = vec![1.0; m];
    for i in 0..m {
        let flip = lp.rhs[i] < 0.0;
        if flip {
            row_sign[i] = -1.0;
        }
        let mut row: Vec<f64> = lp.constraints[i].iter().map(|&x| x * row_sign[i]).collect();
        row.extend((0..m).map(|j| if j == i { 1.0 } else { 0.0 }));
        row.push(lp.rhs[i] * row_sign[i]);
        rows.push(row);
    }
    let mut t = Tableau {
        rows,
        basis: (n..n + m).collect(),
        n,
        m,
        redundant: vec![false; m],
        tol,
    };

    // phase 1: maximize -(sum of artificials)
    let mut phase1_cost = vec![0.0; n + m];
    for j in n..n + m {
        phase1_cost[j] = -1.0;
    }
    t.run_phase(&phase1_cost, &|j| j < n + m);
    let infeasibility: f64 =
        (0..m).filter(|&i| t.basis[i] >= n).map(|i| t.rows[i][t.rhs_col()]).sum();
    if infeasibility > tol.feasibility {
        return Ok(LpSolution {
            status: LpStatus::Infeasible,
            value: f64::NAN,
            primal: vec![],
            dual: vec![],
        });
    }
    // drive leftover artificials out of the basis; an all-zero row is redundant
    for i in 0..m {
        if t.basis[i] >= n {
            let col = (0..n).find(|&j| t.rows[i][j].abs() > tol.pivot);
            match col {
                Some(j) => t.pivot(i, j),
                None => t.redundant[i] = true,
            }
        }
    }

    // phase 2: artificials stay out
    let mut phase2_cost = vec![0.0; n + m];
    phase2_cost[..n].copy_from_slice(&lp.objective);
    let bounded = t.run_phase(&phase2_cost, &|j| j < n);
    if !bounded {
        return Ok(LpSolution {
            status: LpStatus::Unbounded,
            value: f64::INFINITY,
            primal: vec![],
            dual: vec![],
        });
    }

    let mut primal = vec![0.0; n];
    for i in 0..m {
        if t.basis[i] < n {
            primal[t.basis[i]] = t.rows[i][t.rhs_col()];
        }
    }
    let value: f64 = primal.iter().zip(&lp.objective).map(|(x, c)| x * c).sum();

    // dual: y = c_B B^{-1}; the artificial block holds B^{-1} of the
    // sign-adjusted system, so undo the row flips
    let mut dual = vec![0.0; m];
    for (i, dual_i) in dual.iter_mut().enumerate() {
        let mut acc = 0.0;
        for row in 0..m {
            let cb = if t.basis[row] < n { lp.objective[t.basis[row]] } else { 0.0 };
            acc += cb * t.rows[row][n + i];
        }
        *dual_i = acc * row_sign[i];
    }

    Ok(LpSolution { status: LpStatus::Optimal, value, primal, dual })
}

/// Result of checking a candidate dual vector against `A^T y >= c`.
#[derive(Debug, Clone, Serialize)]
pub struct DualFeasibility {
    pub feasible: bool,
    /// max over columns of c_j - (A^T y)_j; positive means violated.
    pub worst_violation: f64,
    /// Column attaining the worst violation.
    pub worst_column: usize,
}

/// Verifies `A^T dual >= c - tol` componentwise and reports the most
/// violated column.
pub fn check_dual_feasible(
    lp: &DenseLp,
    dual: &[f64],
    tol: f64,
) -> Result<DualFeasibility, LpError> {
    lp.check()?;
    if dual.len() != lp.rows() {
        return Err(LpError::DualLenMismatch { len: dual.len(), expected: lp.rows() });
    }
    let mut worst = f64::NEG_INFINITY;
    let mut worst_column = 0;
    for j in 0..lp.columns() {
        let aty: f64 = (0..lp.rows()).map(|i| dual[i] * lp.constraints[i][j]).sum();
        let violation = lp.objective[j] - aty;
        if violation > worst {
            worst = violation;
            worst_column = j;
        }
    }
    Ok(DualFeasibility { feasible: worst <= tol, worst_violation: worst, worst_column })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn one_constraint_max() {
        // max p1 s.t. p1 + p2 = 1
        let lp = DenseLp {
            objective: vec![1.0, 0.0],
            constraints: vec![vec![1.0, 1.0]],
            rhs: vec![1.0],
        };
        let sol = solve(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_close(sol.value, 1.0, 1e-12);
        assert_close(sol.primal[0], 1.0, 1e-12);
        assert_close(sol.primal[1], 0.0, 1e-12);
        assert_close(sol.dual[0], 1.0, 1e-12);
    }

    #[test]
    fn degenerate_objective() {
        // max p1 + p2 s.t. p1 + p2 = 1: every vertex is optimal
        let lp = DenseLp {
            objective: vec![1.0, 1.0],
            constraints: vec![vec![1.0, 1.0]],
            rhs: vec![1.0],
        };
        let sol = solve(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_close(sol.value, 1.0, 1e-12);
        assert_close(sol.primal.iter().sum::<f64>(), 1.0, 1e-12);
    }

    #[test]
    fn two_constraints_with_duals() {
        // max 3x + 2y s.t. x + y = 4, x - y = 0 -> x = y = 2, value 10
        let lp = DenseLp {
            objective: vec![3.0, 2.0],
            constraints: vec![vec![1.0, 1.0], vec![1.0, -1.0]],
            rhs: vec![4.0, 0.0],
        };
        let sol = solve(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_close(sol.value, 10.0, 1e-9);
        // strong duality: b . y = value
        let by = 4.0 * sol.dual[0] + 0.0 * sol.dual[1];
        assert_close(by, sol.value, 1e-8);
    }

    #[test]
    fn negative_rhs_handled() {
        // max -x s.t. -x - y = -3 (i.e. x + y = 3)
        let lp = DenseLp {
            objective: vec![-1.0, 0.0],
            constraints: vec![vec![-1.0, -1.0]],
            rhs: vec![-3.0],
        };
        let sol = solve(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_close(sol.value, 0.0, 1e-12);
        assert_close(sol.primal[1], 3.0, 1e-12);
        // dual of original row: y * (-1) >= -1 and y * (-1) >= 0 => y <= 0
        let by = -3.0 * sol.dual[0];
        assert_close(by, sol.value, 1e-8);
    }

    #[test]
    fn infeasible_detected() {
        // p1 + p2 = 1, p1 + p2 = 3 cannot both hold
        let lp = DenseLp {
            objective: vec![1.0, 0.0],
            constraints: vec![vec![1.0, 1.0], vec![1.0, 1.0]],
            rhs: vec![1.0, 3.0],
        };
        let sol = solve(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Infeasible);
    }

    #[test]
    fn unbounded_detected() {
        // max x s.t. x - y = 1: x can grow with y
        let lp = DenseLp {
            objective: vec![1.0, 0.0],
            constraints: vec![vec![1.0, -1.0]],
            rhs: vec![1.0],
        };
        let sol = solve(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Unbounded);
    }

    #[test]
    fn redundant_row_tolerated() {
        // duplicated constraint: rank-deficient but consistent
        let lp = DenseLp {
            objective: vec![1.0, 0.0],
            constraints: vec![vec![1.0, 1.0], vec![1.0, 1.0]],
            rhs: vec![1.0, 1.0],
        };
        let sol = solve(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_close(sol.value, 1.0, 1e-12);
    }

    #[test]
    fn complementary_slackness() {
        let lp = DenseLp {
            objective: vec![2.0, 1.0, 0.5],
            constraints: vec![vec![1.0, 1.0, 1.0], vec![0.5, -1.0, 2.0]],
            rhs: vec![1.0, 0.25],
        };
        let sol = solve(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        for j in 0..3 {
            let aty: f64 = (0..2).map(|i| sol.dual[i] * lp.constraints[i][j]).sum();
            let slack = aty - lp.objective[j];
            assert!(slack >= -1e-9, "dual feasible at optimum");
            assert!(sol.primal[j] * slack <= 1e-8, "complementary slackness");
        }
    }

    #[test]
    fn dual_feasibility_checker() {
        let lp = DenseLp {
            objective: vec![1.0, 0.0],
            constraints: vec![vec![1.0, 1.0]],
            rhs: vec![1.0],
        };
        let ok = check_dual_feasible(&lp, &[1.0], 1e-12).unwrap();
        assert!(ok.feasible);
        let bad = check_dual_feasible(&lp, &[0.9], 1e-12).unwrap();
        assert!(!bad.feasible);
        assert_eq!(bad.worst_column, 0);
        assert_close(bad.worst_violation, 0.1, 1e-12);
        assert!(check_dual_feasible(&lp, &[1.0, 2.0], 1e-12).is_err());
    }

    #[test]
    fn rejects_malformed_input() {
        let lp = DenseLp {
            objective: vec![1.0],
            constraints: vec![vec![1.0, 2.0]],
            rhs: vec![1.0],
        };
        assert!(matches!(solve(&lp), Err(LpError::RowMismatch { .. })));
        let lp = DenseLp {
            objective: vec![f64::NAN],
            constraints: vec![vec![1.0]],
            rhs: vec![1.0],
        };
        assert!(matches!(solve(&lp), Err(LpError::NonFinite { .. })));
    }

    #[test]
    fn deterministic_pivoting() {
        let lp = DenseLp {
            objective: vec![1.0, 1.0, 1.0, 1.0],
            constraints: vec![vec![1.0, 1.0, 0.0, 0.0], vec![0.0, 0.0, 1.0, 1.0]],
            rhs: vec![1.0, 1.0],
        };
        let a = solve(&lp).unwrap();
        let b = solve(&lp).unwrap();
        assert_eq!(a.primal, b.primal);
        assert_eq!(a.dual, b.dual);
    }
}
