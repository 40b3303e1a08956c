//! Fractional distance to `H_k` and the LP-rounding vertex projection.
//!
//! The LP has a variable `x_v` per vertex (how much `v` must be rewired) and
//! `w_uv` per pair (how much of edge `uv` survives):
//!
//! ```text
//! min Σ x_v   s.t.  x_v ≥ 0,  w_uv ≥ 0,
//!                   a_uv ≥ w_uv ≥ a_uv − x_u − x_v,
//!                   Σ_{v≠u} w_uv ≤ k           for every u
//! ```
//!
//! Non-edges force `w_uv = 0` and the upper bounds `w ≤ 1`, `x ≤ 1` never bind
//! at an optimum, so the solver works on the reduced program over edges only.
//! It solves the dual, whose constraints are all `≤` with non-negative right
//! hand sides, and reads `x` and `w` back as its row multipliers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ordered, LabeledGraph};

use super::simplex::{self, DenseLp};
use super::{Certificate, ProjectionOutcome};

/// Absolute accuracy required of the optimal objective.
pub const LP_TOLERANCE: f64 = 1e-7;

/// Rounding threshold on `x*`: an edge is dropped when either endpoint
/// reaches it.
pub const ROUNDING_THRESHOLD: f64 = 0.25;

// Slack for floating-point noise when comparing against the threshold; a
// value within it of 1/4 is treated as 1/4.
const ROUNDING_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EdgeWeight {
    pub u: usize,
    pub v: usize,
    pub w: f64,
}

/// Optimal solution of the dual program
/// `max Σ_e y_e − k Σ_u z_u` s.t. `Σ_{e∋u} y_e ≤ 1`, `y_e ≤ z_a + z_b`,
/// `y, z ≥ 0`. Equal objectives certify optimality of the primal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DualCertificate {
    /// One entry per edge, in canonical edge order.
    pub y: Vec<f64>,
    pub z: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LpSolution {
    pub x: Vec<f64>,
    /// `w_uv` for every edge of the input; every non-edge has `w_uv = 0`.
    pub w: Vec<EdgeWeight>,
    pub objective: f64,
    pub tolerance: f64,
    pub dual: DualCertificate,
}

impl LpSolution {
    pub fn w(&self, u: usize, v: usize) -> f64 {
        let (a, b) = ordered(u, v);
        self.w.binary_search_by(|e| (e.u, e.v).cmp(&(a, b))).map_or(0.0, |i| self.w[i].w)
    }

    /// Largest violation of any LP constraint for graph `g` and bound `k`.
    pub fn max_violation(&self, g: &LabeledGraph, k: u32) -> f64 {
        let n = g.n();
        let mut worst: f64 = 0.0;
        for &x in &self.x {
            worst = worst.max(-x);
        }
        let mut load = vec![0.0; n];
        for u in 0..n {
            for v in u + 1..n {
                let a = if g.has_edge(u, v) { 1.0 } else { 0.0 };
                let w = self.w(u, v);
                worst = worst.max(-w);
                worst = worst.max(w - a);
                worst = worst.max(a - self.x[u] - self.x[v] - w);
                load[u] += w;
                load[v] += w;
            }
        }
        for l in load {
            worst = worst.max(l - k as f64);
        }
        let sum: f64 = self.x.iter().sum();
        worst.max((sum - self.objective).abs())
    }

    pub fn is_feasible(&self, g: &LabeledGraph, k: u32) -> bool {
        self.max_violation(g, k) <= self.tolerance
    }

    fn zero(g: &LabeledGraph) -> Self {
        LpSolution {
            x: vec![0.0; g.n()],
            w: g.edges().map(|(u, v)| EdgeWeight { u, v, w: 1.0 }).collect(),
            objective: 0.0,
            tolerance: LP_TOLERANCE,
            dual: DualCertificate { y: vec![0.0; g.edge_count()], z: vec![0.0; g.n()] },
        }
    }
}

pub fn solve_degree_lp(g: &LabeledGraph, k: u32) -> Result<LpSolution> {
    if g.max_degree() <= k as usize {
        // x = 0, w = a is feasible with objective 0, the minimum.
        return Ok(LpSolution::zero(g));
    }
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();

    // Dual: max Σ y_e − k Σ z_u
    //   row u:      Σ_{e∋u} y_e ≤ 1          (multiplier x_u)
    //   row n+e:    y_e − z_a − z_b ≤ 0      (multiplier w_e)
    // columns: y_0..y_{m-1}, z_0..z_{n-1}
    let mut lp = DenseLp::new(n + m, m + n);
    for (e, &(a, b)) in edges.iter().enumerate() {
        lp.c[e] = 1.0;
        lp.set(a, e, 1.0);
        lp.set(b, e, 1.0);
        lp.set(n + e, e, 1.0);
        lp.set(n + e, m + a, -1.0);
        lp.set(n + e, m + b, -1.0);
    }
    for u in 0..n {
        lp.c[m + u] = -(k as f64);
        lp.b[u] = 1.0;
    }
    let sol = simplex::maximize(&lp)?;

    let x: Vec<f64> = sol.dual[..n].iter().map(|v| v.clamp(0.0, 1.0)).collect();
    let w: Vec<EdgeWeight> =
        edges.iter().enumerate().map(|(e, &(u, v))| EdgeWeight { u, v, w: sol.dual[n + e].clamp(0.0, 1.0) }).collect();
    let objective: f64 = x.iter().sum();
    let solution = LpSolution {
        x,
        w,
        objective,
        tolerance: LP_TOLERANCE,
        dual: DualCertificate { y: sol.primal[..m].to_vec(), z: sol.primal[m..].to_vec() },
    };

    if (objective - sol.objective).abs() > LP_TOLERANCE {
        return Err(Error::LpFailure(format!(
            "duality gap {:.3e} exceeds tolerance",
            (objective - sol.objective).abs()
        )));
    }
    let violation = solution.max_violation(g, k);
    if violation > LP_TOLERANCE {
        return Err(Error::LpFailure(format!("recovered solution violates a constraint by {violation:.3e}")));
    }
    Ok(solution)
}

/// Drops every edge with an endpoint whose `x*` reaches 1/4. The output has
/// maximum degree at most `2k`, and `d̂ = 4 Σ x*` is a 4-smooth distance
/// estimator for it.
pub fn project_vertex_lp(g: &LabeledGraph, k: u32) -> Result<ProjectionOutcome> {
    let lp = solve_degree_lp(g, k)?;
    let heavy: Vec<bool> = lp.x.iter().map(|&x| x >= ROUNDING_THRESHOLD - ROUNDING_SLACK).collect();
    let removed: Vec<(usize, usize)> = g.edges().filter(|&(u, v)| heavy[u] || heavy[v]).collect();
    Ok(ProjectionOutcome {
        graph: g.without_edges(&removed),
        d_hat: 4.0 * lp.objective,
        removed_edges: removed,
        certificate: Certificate::Lp(lp),
        target_bound: 2 * k as usize,
    })
}
