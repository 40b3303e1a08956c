//! Greedy vertex-deletion projection onto `H_k`.
//!
//! With the potential `φ(G) = Σ_{deg(v) ≥ k} (deg(v) − k)`, each guess `d` of
//! the distance to `H_k` first deletes every vertex of degree `≥ k + d + 1`
//! (those survive no `d`-vertex repair), then repeatedly deletes the vertex
//! whose removal drops `φ` the most until `φ = 0`. The first guess whose total
//! deletions fit `d·ln(2d² + dk + d) + d` is accepted. "Deleting" a vertex
//! removes all of its edges; the vertex and its labels stay.

use serde::{Deserialize, Serialize};

use crate::graph::LabeledGraph;

use super::{Certificate, ProjectionOutcome};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GreedyTrace {
    pub guess: usize,
    pub budget: f64,
    /// Vertices removed for exceeding `k + guess` before the greedy phase.
    pub forced: Vec<usize>,
    /// Vertices removed by the greedy phase, in order.
    pub greedy: Vec<usize>,
}

impl GreedyTrace {
    pub fn removals(&self) -> usize {
        self.forced.len() + self.greedy.len()
    }
}

/// Deletion budget accepted for guess `d`.
pub fn greedy_budget(d: usize, k: u32) -> f64 {
    let d = d as f64;
    let k = k as f64;
    d * (2.0 * d * d + d * k + d).ln() + d
}

fn excess(deg: usize, k: usize) -> usize {
    deg.saturating_sub(k)
}

struct Residual {
    adj: Vec<Vec<usize>>,
    alive: Vec<Vec<bool>>,
    deg: Vec<usize>,
}

impl Residual {
    fn new(g: &LabeledGraph) -> Self {
        let adj: Vec<Vec<usize>> = (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect();
        let alive = adj.iter().map(|ns| vec![true; ns.len()]).collect();
        let deg = adj.iter().map(Vec::len).collect();
        Residual { adj, alive, deg }
    }

    fn potential(&self, k: usize) -> usize {
        self.deg.iter().map(|&d| excess(d, k)).sum()
    }

    fn potential_drop(&self, v: usize, k: usize) -> usize {
        let from_neighbors =
            self.adj[v].iter().zip(&self.alive[v]).filter(|&(&u, &live)| live && self.deg[u] > k).count();
        excess(self.deg[v], k) + from_neighbors
    }

    fn delete(&mut self, v: usize) {
        for i in 0..self.adj[v].len() {
            if !self.alive[v][i] {
                continue;
            }
            self.alive[v][i] = false;
            let u = self.adj[v][i];
            let j = self.adj[u].binary_search(&v).expect("symmetric adjacency");
            self.alive[u][j] = false;
            self.deg[u] -= 1;
        }
        self.deg[v] = 0;
    }
}

fn run_guess(g: &LabeledGraph, k: usize, d: usize) -> (Vec<usize>, Vec<usize>) {
    let mut r = Residual::new(g);
    let forced: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > k + d).collect();
    for &v in &forced {
        r.delete(v);
    }
    let mut greedy = Vec::new();
    while r.potential(k) > 0 {
        // Lowest index wins ties.
        let (v, drop) =
            (0..g.n())
                .map(|v| (v, r.potential_drop(v, k)))
                .fold((0, 0), |best, cur| if cur.1 > best.1 { cur } else { best });
        debug_assert!(drop > 0);
        r.delete(v);
        greedy.push(v);
    }
    (forced, greedy)
}

pub fn project_greedy(g: &LabeledGraph, k: u32) -> ProjectionOutcome {
    let kk = k as usize;
    let n = g.n().max(1);
    let mut accepted = None;
    for d in 1..=n {
        let (forced, greedy) = run_guess(g, kk, d);
        let budget = greedy_budget(d, k);
        if (forced.len() + greedy.len()) as f64 <= budget || d == n {
            accepted = Some(GreedyTrace { guess: d, budget, forced, greedy });
            break;
        }
    }
    let trace = accepted.expect("guess d = n is always accepted");
    let mut deleted = vec![false; g.n()];
    for &v in trace.forced.iter().chain(&trace.greedy) {
        deleted[v] = true;
    }
    let removed: Vec<(usize, usize)> = g.edges().filter(|&(u, v)| deleted[u] || deleted[v]).collect();
    ProjectionOutcome {
        graph: g.without_edges(&removed),
        d_hat: trace.removals() as f64,
        removed_edges: removed,
        certificate: Certificate::Greedy(trace),
        target_bound: kk,
    }
}
