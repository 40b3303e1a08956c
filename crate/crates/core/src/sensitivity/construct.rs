//! Exact sensitivities over an enumerated universe, and the inductive
//! construction of a globally Lipschitz extension `f_H` of `f|_H`.
//!
//! Members of `H` keep their values. Non-members are visited by increasing
//! distance to `H` (ties by index); each receives the midpoint of the
//! intersection of the intervals `[f_H(D) − Δ·d, f_H(D) + Δ·d]` over every
//! already-assigned `D`, where `Δ = RS_f(H)`. Under a true metric that
//! intersection is never empty, and `f_H` is `Δ`-Lipschitz on all pairs.

use crate::error::{Error, Result};

use super::{SensitivityKind, SensitivityReport};

/// Symmetric matrix of small integer distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u16>,
}

impl DistanceMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> u16) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            for j in i + 1..n {
                let d = f(i, j);
                data[i * n + j] = d;
                data[j * n + i] = d;
            }
        }
        DistanceMatrix { n, data }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u16 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u16] {
        &self.data[i * self.n..(i + 1) * self.n]
    }
}

fn check_shapes(dist: &DistanceMatrix, f: &[f64], members: &[bool]) -> Result<()> {
    if f.len() != dist.len() || members.len() != dist.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} datasets but {} values and {} membership flags",
            dist.len(),
            f.len(),
            members.len()
        )));
    }
    Ok(())
}

/// `max |f(i) − f(j)| / d(i, j)` over distinct pairs within `members`.
/// Zero when fewer than two members exist.
pub fn restricted_sensitivity_exact(dist: &DistanceMatrix, f: &[f64], members: &[bool]) -> Result<SensitivityReport> {
    check_shapes(dist, f, members)?;
    let idx: Vec<usize> = (0..dist.len()).filter(|&i| members[i]).collect();
    let mut best: f64 = 0.0;
    for (a, &i) in idx.iter().enumerate() {
        for &j in &idx[a + 1..] {
            let d = dist.get(i, j);
            if d > 0 {
                best = best.max((f[i] - f[j]).abs() / d as f64);
            }
        }
    }
    Ok(SensitivityReport::new(
        best,
        SensitivityKind::RestrictedExact,
        format!("exhaustive scan over {} member pairs", idx.len() * idx.len().saturating_sub(1) / 2),
    ))
}

/// `max |f(i) − f(j)| / d(i, j)` over all distinct pairs. For a path metric
/// this is the global sensitivity.
pub fn max_lipschitz_ratio(dist: &DistanceMatrix, f: &[f64]) -> f64 {
    let mut best: f64 = 0.0;
    for i in 0..dist.len() {
        for j in i + 1..dist.len() {
            let d = dist.get(i, j);
            if d > 0 {
                best = best.max((f[i] - f[j]).abs() / d as f64);
            }
        }
    }
    best
}

pub fn construct_f_h(dist: &DistanceMatrix, f: &[f64], members: &[bool]) -> Result<Vec<f64>> {
    check_shapes(dist, f, members)?;
    let n = dist.len();
    if !members.iter().any(|&m| m) {
        return Err(Error::InvalidParameter("hypothesis has no member in the universe".into()));
    }
    let delta = restricted_sensitivity_exact(dist, f, members)?.value;

    let to_h = |i: usize| (0..n).filter(|&j| members[j]).map(|j| dist.get(i, j)).min().expect("nonempty hypothesis");
    let mut order: Vec<(u16, usize)> = (0..n).filter(|&i| !members[i]).map(|i| (to_h(i), i)).collect();
    order.sort_unstable();

    let mut value: Vec<Option<f64>> = (0..n).map(|i| members[i].then_some(f[i])).collect();
    let scale = f.iter().fold(1.0f64, |m, x| m.max(x.abs()));
    for (_, i) in order {
        let mut lo = f64::NEG_INFINITY;
        let mut hi = f64::INFINITY;
        for (j, v) in value.iter().enumerate() {
            if let Some(v) = v {
                let r = delta * dist.get(i, j) as f64;
                lo = lo.max(v - r);
                hi = hi.min(v + r);
            }
        }
        if lo > hi + 1e-9 * scale {
            return Err(Error::EmptyIntersection(i));
        }
        value[i] = Some((lo + hi) / 2.0);
    }
    Ok(value.into_iter().map(|v| v.expect("every dataset assigned")).collect())
}
