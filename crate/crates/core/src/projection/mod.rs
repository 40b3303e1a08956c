//! Projections of arbitrary graphs into (a superset of) `H_k`.
//!
//! Every projection fixes members of `H_k` and only deletes edges, so the
//! output keeps the input's labels. Each outcome carries a distance estimate
//! `d_hat` that is zero on `H_k`.

mod edge;
mod greedy;
mod lp;
pub(crate) mod simplex;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

pub use edge::project_edge;
pub use greedy::{greedy_budget, project_greedy, GreedyTrace};
pub use lp::{
    project_vertex_lp, solve_degree_lp, DualCertificate, EdgeWeight, LpSolution, LP_TOLERANCE, ROUNDING_THRESHOLD,
};

#[derive(Debug, Clone, PartialEq)]
pub enum Certificate {
    /// Keep-first-k rule; the removed edges are the whole certificate.
    Canonical,
    Lp(LpSolution),
    Greedy(GreedyTrace),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProjectionOutcome {
    pub graph: LabeledGraph,
    pub d_hat: f64,
    /// Sorted lexicographically.
    pub removed_edges: Vec<(usize, usize)>,
    pub certificate: Certificate,
    /// Degree cap the output is guaranteed to satisfy.
    pub target_bound: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProjectionMethod {
    Edge,
    Vertex,
    Greedy,
}

impl ProjectionMethod {
    pub fn name(self) -> &'static str {
        match self {
            ProjectionMethod::Edge => "edge",
            ProjectionMethod::Vertex => "vertex",
            ProjectionMethod::Greedy => "greedy",
        }
    }

    pub fn project(self, g: &LabeledGraph, k: u32) -> Result<ProjectionOutcome> {
        match self {
            ProjectionMethod::Edge => Ok(project_edge(g, k)),
            ProjectionMethod::Vertex => project_vertex_lp(g, k),
            ProjectionMethod::Greedy => Ok(project_greedy(g, k)),
        }
    }
}

impl std::str::FromStr for ProjectionMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge" => Ok(ProjectionMethod::Edge),
            "vertex" => Ok(ProjectionMethod::Vertex),
            "greedy" => Ok(ProjectionMethod::Greedy),
            other => {
                Err(Error::InvalidParameter(format!("unknown projection {other:?}, expected edge, vertex or greedy")))
            }
        }
    }
}

/// JSON-facing summary of a projection.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProjectionReport {
    pub method: ProjectionMethod,
    pub k: u32,
    pub target_bound: usize,
    pub d_hat: f64,
    pub removed_edges: Vec<[usize; 2]>,
    pub output_max_degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub objective: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub greedy: Option<GreedyTrace>,
}

impl ProjectionOutcome {
    pub fn report(&self, method: ProjectionMethod, k: u32) -> ProjectionReport {
        let (objective, x, greedy) = match &self.certificate {
            Certificate::Canonical => (None, None, None),
            Certificate::Lp(lp) => (Some(lp.objective), Some(lp.x.clone()), None),
            Certificate::Greedy(t) => (None, None, Some(t.clone())),
        };
        ProjectionReport {
            method,
            k,
            target_bound: self.target_bound,
            d_hat: self.d_hat,
            removed_edges: self.removed_edges.iter().map(|&(u, v)| [u, v]).collect(),
            output_max_degree: self.graph.max_degree(),
            objective,
            x,
            greedy,
        }
    }
}
