//! Local profiles: `[0, 1]`-valued functions of a vertex's closed
//! neighborhood. A profile only ever sees a [`LocalView`], so locality holds
//! by construction.

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

use super::LabelPredicate;

/// The labeled subgraph induced on `{v} ∪ N(v)`, with `v` at position 0 and
/// its neighbors at positions `1..=deg(v)` in increasing id order.
#[derive(Debug, Clone)]
pub struct LocalView<'a> {
    vertices: Vec<usize>,
    adjacent: Vec<Vec<bool>>,
    graph: &'a LabeledGraph,
}

impl<'a> LocalView<'a> {
    pub fn new(g: &'a LabeledGraph, v: usize) -> Self {
        let mut vertices = vec![v];
        vertices.extend_from_slice(g.neighbors(v));
        let size = vertices.len();
        let mut adjacent = vec![vec![false; size]; size];
        for i in 0..size {
            for j in i + 1..size {
                let e = i == 0 || g.has_edge(vertices[i], vertices[j]);
                adjacent[i][j] = e;
                adjacent[j][i] = e;
            }
        }
        LocalView { vertices, adjacent, graph: g }
    }

    /// Number of neighbors of the center.
    pub fn degree(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacent[a][b]
    }

    /// Label of local position `a`.
    pub fn label(&self, a: usize) -> &[u32] {
        self.graph.label(self.vertices[a])
    }

    pub fn center_label(&self) -> &[u32] {
        self.label(0)
    }

    /// Local positions of the center's neighbors.
    pub fn neighbors(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.degree()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Profile {
    /// 1 iff some neighbor's label satisfies the predicate.
    NeighborLabel(LabelPredicate),
    /// 1 iff the vertex's own label satisfies the predicate.
    SelfLabel(LabelPredicate),
    /// Fraction of neighbor pairs that are adjacent; 0 below degree 2.
    Clustering,
    /// Fraction of incident edges whose endpoints share no neighbor.
    LocalBridge,
    /// Average over nonadjacent neighbor pairs of `1 / #midpoints`, where the
    /// midpoints are the center and every common neighbor inside the view.
    TwoBetweenness,
    Min(Vec<Profile>),
    Max(Vec<Profile>),
    Mean(Vec<Profile>),
    /// `1 − p`.
    Complement(Box<Profile>),
}

impl Profile {
    pub fn evaluate(&self, view: &LocalView<'_>) -> f64 {
        self.raw(view).clamp(0.0, 1.0)
    }

    fn raw(&self, view: &LocalView<'_>) -> f64 {
        match self {
            Profile::NeighborLabel(p) => indicator(view.neighbors().any(|a| p.matches(view.label(a)))),
            Profile::SelfLabel(p) => indicator(p.matches(view.center_label())),
            Profile::Clustering => {
                let d = view.degree();
                if d < 2 {
                    return 0.0;
                }
                let closed = neighbor_pairs(view).filter(|&(a, b)| view.adjacent(a, b)).count();
                closed as f64 / (d * (d - 1) / 2) as f64
            }
            Profile::LocalBridge => {
                let d = view.degree();
                if d == 0 {
                    return 0.0;
                }
                let bridges =
                    view.neighbors().filter(|&a| !view.neighbors().any(|w| w != a && view.adjacent(a, w))).count();
                bridges as f64 / d as f64
            }
            Profile::TwoBetweenness => {
                let mut pairs = 0usize;
                let mut total = 0.0;
                for (a, b) in neighbor_pairs(view).filter(|&(a, b)| !view.adjacent(a, b)) {
                    let common = view
                        .neighbors()
                        .filter(|&w| w != a && w != b && view.adjacent(a, w) && view.adjacent(b, w))
                        .count();
                    pairs += 1;
                    total += 1.0 / (1 + common) as f64;
                }
                if pairs == 0 {
                    0.0
                } else {
                    total / pairs as f64
                }
            }
            Profile::Min(ps) => ps.iter().map(|p| p.evaluate(view)).fold(1.0, f64::min),
            Profile::Max(ps) => ps.iter().map(|p| p.evaluate(view)).fold(0.0, f64::max),
            Profile::Mean(ps) => {
                if ps.is_empty() {
                    0.0
                } else {
                    ps.iter().map(|p| p.evaluate(view)).sum::<f64>() / ps.len() as f64
                }
            }
            Profile::Complement(p) => 1.0 - p.evaluate(view),
        }
    }

    pub(crate) fn check_dims(&self, label_dim: usize) -> Result<()> {
        match self {
            Profile::NeighborLabel(p) | Profile::SelfLabel(p) => p.check_dim(label_dim),
            Profile::Clustering | Profile::LocalBridge | Profile::TwoBetweenness => Ok(()),
            Profile::Min(ps) | Profile::Max(ps) | Profile::Mean(ps) => {
                ps.iter().try_for_each(|p| p.check_dims(label_dim))
            }
            Profile::Complement(p) => p.check_dims(label_dim),
        }
    }

    /// Looks up a built-in by name. Predicate-parameterised profiles require
    /// `param`; the others reject it.
    pub fn builtin(name: &str, param: Option<LabelPredicate>) -> Result<Profile> {
        let entry = builtin_profiles()
            .into_iter()
            .find(|b| b.name == name)
            .ok_or_else(|| Error::InvalidQuery(format!("unknown profile {name:?}")))?;
        match (entry.takes_predicate, param) {
            (true, Some(p)) => Ok(match name {
                "neighbor_label" => Profile::NeighborLabel(p),
                _ => Profile::SelfLabel(p),
            }),
            (true, None) => Err(Error::InvalidQuery(format!("profile {name:?} needs a predicate"))),
            (false, Some(_)) => Err(Error::InvalidQuery(format!("profile {name:?} takes no parameters"))),
            (false, None) => Ok(match name {
                "clustering" => Profile::Clustering,
                "local_bridge" => Profile::LocalBridge,
                _ => Profile::TwoBetweenness,
            }),
        }
    }
}

fn indicator(b: bool) -> f64 {
    if b {
        1.0
    } else {
        0.0
    }
}

fn neighbor_pairs<'v>(view: &'v LocalView<'_>) -> impl Iterator<Item = (usize, usize)> + 'v {
    view.neighbors().flat_map(move |a| (a + 1..=view.degree()).map(move |b| (a, b)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuiltinProfile {
    pub name: &'static str,
    pub takes_predicate: bool,
    pub description: &'static str,
}

pub fn builtin_profiles() -> Vec<BuiltinProfile> {
    vec![
        BuiltinProfile {
            name: "neighbor_label",
            takes_predicate: true,
            description: "1 if some neighbor's label satisfies the predicate",
        },
        BuiltinProfile {
            name: "self_label",
            takes_predicate: true,
            description: "1 if the vertex's own label satisfies the predicate",
        },
        BuiltinProfile {
            name: "clustering",
            takes_predicate: false,
            description: "fraction of neighbor pairs that are adjacent",
        },
        BuiltinProfile {
            name: "local_bridge",
            takes_predicate: false,
            description: "fraction of incident edges whose endpoints share no neighbor",
        },
        BuiltinProfile {
            name: "two_betweenness",
            takes_predicate: false,
            description: "mean share of length-two paths between nonadjacent neighbors that pass through the vertex",
        },
    ]
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProfileQuery {
    pub profile: Profile,
}

impl ProfileQuery {
    pub fn new(profile: Profile) -> Self {
        ProfileQuery { profile }
    }
}

pub fn evaluate_profile_query(q: &ProfileQuery, g: &LabeledGraph) -> f64 {
    (0..g.n()).map(|v| q.profile.evaluate(&LocalView::new(g, v))).sum()
}
