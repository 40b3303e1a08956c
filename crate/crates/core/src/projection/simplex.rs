//! Dense tableau simplex for `max cᵀy s.t. Ay ≤ b, y ≥ 0` with `b ≥ 0`.
//!
//! The origin is feasible, so no phase one is needed. Entering columns use
//! Dantzig's rule; after a run of degenerate pivots the solver falls back to
//! Bland's rule, which cannot cycle. Row duals are read off the objective row
//! in the slack columns.

use crate::error::{Error, Result};

const EPS: f64 = 1e-11;
const DEGENERATE_STREAK: usize = 64;

pub(crate) struct DenseLp {
    pub rows: usize,
    pub cols: usize,
    /// Row-major `rows × cols`.
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub c: Vec<f64>,
}

impl DenseLp {
    pub fn new(rows: usize, cols: usize) -> Self {
        DenseLp { rows, cols, a: vec![0.0; rows * cols], b: vec![0.0; rows], c: vec![0.0; cols] }
    }

    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        self.a[row * self.cols + col] = value;
    }
}

#[derive(Debug)]
pub(crate) struct SimplexSolution {
    pub primal: Vec<f64>,
    /// One multiplier per row; an optimal solution of the dual
    /// `min bᵀx s.t. Aᵀx ≥ c, x ≥ 0`.
    pub dual: Vec<f64>,
    pub objective: f64,
}

pub(crate) fn maximize(lp: &DenseLp) -> Result<SimplexSolution> {
    if lp.b.iter().any(|&b| b < 0.0) {
        return Err(Error::LpFailure("negative right-hand side".into()));
    }
    let m = lp.rows;
    let width = lp.cols + m + 1; // structural, slack, rhs
    let rhs = width - 1;
    let mut t = vec![0.0; (m + 1) * width];
    for i in 0..m {
        let row = &mut t[i * width..(i + 1) * width];
        row[..lp.cols].copy_from_slice(&lp.a[i * lp.cols..(i + 1) * lp.cols]);
        row[lp.cols + i] = 1.0;
        row[rhs] = lp.b[i];
    }
    // Objective row holds reduced costs z_j - c_j.
    {
        let obj = &mut t[m * width..];
        for (o, c) in obj.iter_mut().zip(&lp.c) {
            *o = -c;
        }
    }
    let mut basis: Vec<usize> = (lp.cols..lp.cols + m).collect();

    let max_pivots = 50 * (m + width) + 1000;
    let mut streak = 0;
    let mut pivots = 0;
    loop {
        let obj = &t[m * width..];
        let entering = if streak < DEGENERATE_STREAK {
            (0..rhs).filter(|&j| obj[j] < -EPS).min_by(|&a, &b| obj[a].total_cmp(&obj[b]))
        } else {
            (0..rhs).find(|&j| obj[j] < -EPS)
        };
        let Some(col) = entering else { break };

        let mut leave: Option<(usize, f64)> = None;
        for i in 0..m {
            let aij = t[i * width + col];
            if aij > EPS {
                let ratio = t[i * width + rhs] / aij;
                let better = match leave {
                    None => true,
                    Some((r, best)) => ratio < best - EPS || (ratio <= best + EPS && basis[i] < basis[r]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((row, ratio)) = leave else {
            return Err(Error::LpFailure("objective is unbounded".into()));
        };
        streak = if ratio.abs() <= EPS { streak + 1 } else { 0 };

        pivot(&mut t, width, m, row, col);
        basis[row] = col;
        pivots += 1;
        if pivots > max_pivots {
            return Err(Error::LpFailure(format!("no convergence after {pivots} pivots")));
        }
    }

    let mut primal = vec![0.0; lp.cols];
    for (i, &var) in basis.iter().enumerate() {
        if var < lp.cols {
            primal[var] = t[i * width + rhs];
        }
    }
    let dual = t[m * width + lp.cols..m * width + lp.cols + m].to_vec();
    let objective = t[m * width + rhs];
    if !objective.is_finite() {
        return Err(Error::LpFailure("non-finite objective".into()));
    }
    Ok(SimplexSolution { primal, dual, objective })
}

fn pivot(t: &mut [f64], width: usize, m: usize, row: usize, col: usize) {
    let p = t[row * width + col];
    for v in &mut t[row * width..(row + 1) * width] {
        *v /= p;
    }
    let pivot_row: Vec<f64> = t[row * width..(row + 1) * width].to_vec();
    for i in 0..=m {
        if i == row {
            continue;
        }
        let factor = t[i * width + col];
        if factor == 0.0 {
            continue;
        }
        let r = &mut t[i * width..(i + 1) * width];
        for (x, &pv) in r.iter_mut().zip(&pivot_row) {
            *x -= factor * pv;
        }
        r[col] = 0.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn textbook_instance() {
        // max 3x + 5y, x ≤ 4, 2y ≤ 12, 3x + 2y ≤ 18  → (2, 6), 36
        let mut lp = DenseLp::new(3, 2);
        lp.c = vec![3.0, 5.0];
        lp.set(0, 0, 1.0);
        lp.set(1, 1, 2.0);
        lp.set(2, 0, 3.0);
        lp.set(2, 1, 2.0);
        lp.b = vec![4.0, 12.0, 18.0];
        let s = maximize(&lp).unwrap();
        assert!((s.objective - 36.0).abs() < 1e-9);
        assert!((s.primal[0] - 2.0).abs() < 1e-9);
        assert!((s.primal[1] - 6.0).abs() < 1e-9);
        // Dual: (0, 1.5, 1) with bᵀx = 36.
        let dual_obj: f64 = s.dual.iter().zip(&lp.b).map(|(x, b)| x * b).sum();
        assert!((dual_obj - 36.0).abs() < 1e-9);
        assert!((s.dual[1] - 1.5).abs() < 1e-9 && (s.dual[2] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn unbounded_is_reported() {
        let mut lp = DenseLp::new(1, 2);
        lp.c = vec![1.0, 1.0];
        lp.set(0, 0, 1.0);
        lp.b = vec![1.0];
        assert!(matches!(maximize(&lp), Err(Error::LpFailure(_))));
    }

    #[test]
    fn degenerate_instance_terminates() {
        // Beale's cycling example (as a max problem).
        let mut lp = DenseLp::new(3, 4);
        lp.c = vec![0.75, -150.0, 0.02, -6.0];
        let rows = [[0.25, -60.0, -0.04, 9.0], [0.5, -90.0, -0.02, 3.0], [0.0, 0.0, 1.0, 0.0]];
        for (i, r) in rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                lp.set(i, j, v);
            }
        }
        lp.b = vec![0.0, 0.0, 1.0];
        let s = maximize(&lp).unwrap();
        assert!((s.objective - 0.05).abs() < 1e-9);
    }
}
