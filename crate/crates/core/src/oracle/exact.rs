//! Exact local, global and smooth sensitivities over a universe.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{AdjacencyModel, LabeledGraph};
use crate::mechanism::ESTIMATOR_SMOOTHNESS;
use crate::projection::project_vertex_lp;
use crate::query::Query;
use crate::sensitivity::{rs_bound, smooth_upper_bound, SmoothBoundParams};

use super::Universe;

/// `LS_f(D) = max_{D' ~ D} |f(D) − f(D')|` for every dataset.
pub fn local_sensitivities(u: &Universe, f: &[f64], model: AdjacencyModel) -> Vec<f64> {
    (0..u.len())
        .map(|i| u.neighbors(model, i).iter().map(|&j| (f[i] - f[j as usize]).abs()).fold(0.0, f64::max))
        .collect()
}

pub fn local_sensitivity_exact(u: &Universe, f: &[f64], g: &LabeledGraph, model: AdjacencyModel) -> Result<f64> {
    let i = u.index_of(g)?;
    Ok(u.neighbors(model, i).iter().map(|&j| (f[i] - f[j as usize]).abs()).fold(0.0, f64::max))
}

pub fn global_sensitivity_exact(u: &Universe, f: &[f64], model: AdjacencyModel) -> f64 {
    local_sensitivities(u, f, model).into_iter().fold(0.0, f64::max)
}

/// `S*(D) = max_{D'} e^{−β·d(D, D')} LS_f(D')`, the smallest `β`-smooth upper
/// bound on local sensitivity.
pub fn smooth_sensitivity_exact(u: &Universe, f: &[f64], beta: f64, model: AdjacencyModel) -> Result<Vec<f64>> {
    if !(beta >= 0.0 && beta.is_finite()) {
        return Err(Error::InvalidParameter(format!("beta must be non-negative, got {beta}")));
    }
    let ls = local_sensitivities(u, f, model);
    let dist = u.distances(model);
    let max_d = (0..u.len()).flat_map(|i| dist.row(i).iter().copied()).max().unwrap_or(0);
    let decay: Vec<f64> = (0..=max_d).map(|d| (-beta * d as f64).exp()).collect();
    Ok((0..u.len())
        .map(|i| dist.row(i).iter().zip(&ls).map(|(&d, &l)| decay[d as usize] * l).fold(0.0, f64::max))
        .collect())
}

/// How the smooth upper bound of the vertex mechanism compares with the
/// exact local sensitivity of `f ∘ μ_LP` across a universe.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DominanceSummary {
    pub k: u32,
    pub beta: f64,
    pub datasets: usize,
    /// Datasets where the bound falls below the local sensitivity.
    pub violations: usize,
    /// `min_D (S(D) − LS(D))`.
    pub worst_margin: f64,
    /// Largest `S(D1)/S(D2)` over vertex-adjacent pairs.
    pub max_neighbor_ratio: f64,
    /// Largest `|d̂(D1) − d̂(D2)|` over vertex-adjacent pairs.
    pub max_estimator_jump: f64,
}

pub fn smooth_dominance(u: &Universe, q: &Query, k: u32, beta: f64) -> Result<DominanceSummary> {
    let rs = rs_bound(q, 2 * k, AdjacencyModel::Vertex).value;
    let mut d_hat = Vec::with_capacity(u.len());
    let mut projected = Vec::with_capacity(u.len());
    for g in u.datasets() {
        let out = project_vertex_lp(g, k)?;
        d_hat.push(out.d_hat);
        projected.push(q.evaluate(&out.graph));
    }
    let bound = d_hat
        .iter()
        .map(|&d| smooth_upper_bound(&SmoothBoundParams { beta, c: ESTIMATOR_SMOOTHNESS, rs, d_hat: d }))
        .collect::<Result<Vec<f64>>>()?;
    let ls = local_sensitivities(u, &projected, AdjacencyModel::Vertex);

    let mut violations = 0;
    let mut worst_margin = f64::INFINITY;
    let mut max_ratio: f64 = 0.0;
    let mut max_jump: f64 = 0.0;
    for i in 0..u.len() {
        let margin = bound[i] - ls[i];
        if margin < -1e-9 {
            violations += 1;
        }
        worst_margin = worst_margin.min(margin);
        for &j in u.neighbors(AdjacencyModel::Vertex, i) {
            let j = j as usize;
            let ratio = match (bound[i], bound[j]) {
                (0.0, 0.0) => 1.0,
                (_, 0.0) => f64::INFINITY,
                (a, b) => a / b,
            };
            max_ratio = max_ratio.max(ratio);
            max_jump = max_jump.max((d_hat[i] - d_hat[j]).abs());
        }
    }
    Ok(DominanceSummary {
        k,
        beta,
        datasets: u.len(),
        violations,
        worst_margin,
        max_neighbor_ratio: max_ratio,
        max_estimator_jump: max_jump,
    })
}
