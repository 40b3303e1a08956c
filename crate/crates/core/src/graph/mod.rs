//! Labeled graphs over a fixed, public vertex set `0..n`.
//!
//! A dataset is a simple undirected graph together with a label vector of
//! small non-negative integers for every vertex. All label vectors share the
//! same dimension. Graphs are immutable once built; operations that "change"
//! a graph return a new one.

mod distance;
pub mod io;
mod vertex_cover;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use distance::{
    edge_distance, label_diff_set, vertex_distance, vertex_distance_with_cap, DEFAULT_VERTEX_COVER_CAP,
};
pub use vertex_cover::{min_vertex_cover, min_vertex_cover_with_cap};

/// Which pairs of datasets count as neighbors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AdjacencyModel {
    /// One edge toggled, or one vertex relabeled.
    Edge,
    /// One vertex relabeled and/or any subset of its incident edges rewired.
    Vertex,
}

impl AdjacencyModel {
    pub const ALL: [AdjacencyModel; 2] = [AdjacencyModel::Edge, AdjacencyModel::Vertex];

    pub fn name(self) -> &'static str {
        match self {
            AdjacencyModel::Edge => "edge",
            AdjacencyModel::Vertex => "vertex",
        }
    }
}

impl fmt::Display for AdjacencyModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for AdjacencyModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge" => Ok(AdjacencyModel::Edge),
            "vertex" => Ok(AdjacencyModel::Vertex),
            other => Err(Error::InvalidParameter(format!("unknown adjacency model {other:?}"))),
        }
    }
}

/// A hypothesis about the dataset. Only the degree bound `H_k` exists today.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Hypothesis {
    DegreeBound { k: u32 },
}

impl Hypothesis {
    pub fn degree_bound(k: u32) -> Self {
        Hypothesis::DegreeBound { k }
    }

    pub fn contains(&self, g: &LabeledGraph) -> bool {
        in_hypothesis(g, self)
    }
}

pub fn max_degree(g: &LabeledGraph) -> usize {
    g.max_degree()
}

pub fn in_hypothesis(g: &LabeledGraph, h: &Hypothesis) -> bool {
    match *h {
        Hypothesis::DegreeBound { k } => g.max_degree() <= k as usize,
    }
}

/// Normalises an unordered pair so the smaller endpoint comes first.
#[inline]
pub fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    adj: Vec<Vec<usize>>,
    labels: Vec<Vec<u32>>,
    label_dim: usize,
    edge_count: usize,
}

impl LabeledGraph {
    /// Builds a graph on `labels.len()` vertices.
    ///
    /// Edges are unordered; `(u, v)` and `(v, u)` in the same input are a
    /// duplicate.
    pub fn new<I>(n: usize, edges: I, labels: Vec<Vec<u32>>) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if labels.len() != n {
            return Err(Error::LabelShape(format!("expected {n} label rows, got {}", labels.len())));
        }
        let label_dim = labels.first().map_or(0, Vec::len);
        if let Some((v, row)) = labels.iter().enumerate().find(|(_, r)| r.len() != label_dim) {
            return Err(Error::LabelShape(format!("vertex {v} has {} labels, expected {label_dim}", row.len())));
        }

        let mut adj = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EdgeOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let e = ordered(u, v);
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(LabeledGraph { adj, labels, label_dim, edge_count: seen.len() })
    }

    /// A graph whose vertices all carry the single label `[0]`.
    pub fn unlabeled<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::new(n, edges, vec![vec![0]; n])
    }

    pub fn empty(n: usize, label_dim: usize) -> Self {
        LabeledGraph { adj: vec![Vec::new(); n], labels: vec![vec![0; label_dim]; n], label_dim, edge_count: 0 }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn label_dim(&self) -> usize {
        self.label_dim
    }

    pub fn label(&self, v: usize) -> &[u32] {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[Vec<u32>] {
        &self.labels
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.edges().collect()
    }

    /// Same labels, with the given edges (in either orientation) dropped.
    /// Pairs that are not edges are ignored.
    pub fn without_edges(&self, removed: &[(usize, usize)]) -> LabeledGraph {
        let removed: BTreeSet<_> = removed.iter().map(|&(u, v)| ordered(u, v)).collect();
        let adj: Vec<Vec<usize>> = self
            .adj
            .iter()
            .enumerate()
            .map(|(u, ns)| ns.iter().copied().filter(|&v| !removed.contains(&ordered(u, v))).collect())
            .collect();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        LabeledGraph { adj, labels: self.labels.clone(), label_dim: self.label_dim, edge_count }
    }

    /// Same edges, new labels.
    pub fn with_labels(&self, labels: Vec<Vec<u32>>) -> Result<LabeledGraph> {
        LabeledGraph::new(self.n(), self.edges(), labels)
    }

    pub fn same_shape(&self, other: &LabeledGraph) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::ShapeMismatch(format!("{} vs {} vertices", self.n(), other.n())));
        }
        if self.label_dim != other.label_dim {
            return Err(Error::ShapeMismatch(format!("label dimension {} vs {}", self.label_dim, other.label_dim)));
        }
        Ok(())
    }
}
