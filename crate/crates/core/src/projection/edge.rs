//! Canonical edge projection: every vertex keeps its first `k` incident edges
//! in lexicographic order and an edge survives only if both endpoints keep it.
//!
//! Toggling one edge changes the kept prefix of at most its two endpoints, so
//! projections of edge-adjacent graphs differ in at most three edges.

use crate::graph::LabeledGraph;

use super::{Certificate, ProjectionOutcome};

pub fn project_edge(g: &LabeledGraph, k: u32) -> ProjectionOutcome {
    let k = k as usize;
    // Neighbor lists are sorted, so the i-th neighbor of u is the i-th
    // incident edge of u in (min, max) order.
    let keeps = |u: usize, v: usize| {
        let rank = g.neighbors(u).partition_point(|&w| w < v);
        rank < k
    };
    let removed: Vec<(usize, usize)> = g.edges().filter(|&(u, v)| !(keeps(u, v) && keeps(v, u))).collect();
    ProjectionOutcome {
        graph: g.without_edges(&removed),
        d_hat: removed.len() as f64,
        removed_edges: removed,
        certificate: Certificate::Canonical,
        target_bound: k,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn identity_on_members() {
        let g = cycle(5);
        let out = project_edge(&g, 2);
        assert_eq!(out.graph, g);
        assert!(out.removed_edges.is_empty());
        assert_eq!(out.d_hat, 0.0);
    }

    #[test]
    fn star_keeps_first_edges() {
        let out = project_edge(&star(5), 3);
        assert_eq!(out.graph.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (0, 3)]);
        assert_eq!(out.removed_edges, vec![(0, 4), (0, 5)]);
    }

    #[test]
    fn triangle_with_k_one() {
        let out = project_edge(&complete(3), 1);
        assert_eq!(out.graph.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn output_degree_bounded() {
        for k in 0..5 {
            let out = project_edge(&complete(7), k);
            assert!(out.graph.max_degree() <= k as usize);
        }
    }
}
