//! Closed forms for the shortest-path distance between two labeled graphs
//! under each adjacency model.
//!
//! With `U` the set of relabeled vertices:
//!
//! * edge model: `|U| + |E1 △ E2|`, one step per label and per edge;
//! * vertex model: `|U| + |VC((G1 − U) △ (G2 − U))|`, since a step at `v`
//!   may relabel `v` and rewire all of its edges at once.

use std::collections::BTreeSet;

use crate::error::Result;

use super::{min_vertex_cover_with_cap, LabeledGraph};

/// Default cap on the difference graph handed to the exact vertex cover.
pub const DEFAULT_VERTEX_COVER_CAP: usize = 24;

pub fn label_diff_set(g1: &LabeledGraph, g2: &LabeledGraph) -> Result<BTreeSet<usize>> {
    g1.same_shape(g2)?;
    Ok((0..g1.n()).filter(|&v| g1.label(v) != g2.label(v)).collect())
}

pub fn edge_distance(g1: &LabeledGraph, g2: &LabeledGraph) -> Result<usize> {
    let u = label_diff_set(g1, g2)?;
    let e1 = g1.edge_set();
    let e2 = g2.edge_set();
    Ok(u.len() + e1.symmetric_difference(&e2).count())
}

pub fn vertex_distance(g1: &LabeledGraph, g2: &LabeledGraph) -> Result<usize> {
    vertex_distance_with_cap(g1, g2, DEFAULT_VERTEX_COVER_CAP)
}

pub fn vertex_distance_with_cap(g1: &LabeledGraph, g2: &LabeledGraph, cap: usize) -> Result<usize> {
    let u = label_diff_set(g1, g2)?;
    let e1 = g1.edge_set();
    let e2 = g2.edge_set();
    let diff: Vec<(usize, usize)> =
        e1.symmetric_difference(&e2).filter(|(a, b)| !u.contains(a) && !u.contains(b)).copied().collect();
    Ok(u.len() + min_vertex_cover_with_cap(&diff, cap)?.len())
}
