//! Exhaustive verification of the analytic bounds on a universe.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::AdjacencyModel;
use crate::projection::{project_edge, project_vertex_lp, LP_TOLERANCE};
use crate::query::{LabelPredicate, Profile, Query, SubgraphQuery};
use crate::sensitivity::{construct_f_h, max_lipschitz_ratio, restricted_sensitivity_exact, rs_bound};

use super::{enumerate_universe, global_sensitivity_exact, smooth_sensitivity_exact, Universe};

const TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct NamedQuery {
    pub name: String,
    pub query: Query,
}

impl NamedQuery {
    pub fn new(name: impl Into<String>, query: Query) -> Self {
        NamedQuery { name: name.into(), query }
    }
}

/// Every built-in query shape, instantiated with label value 1 as the
/// distinguished ("spy") label.
pub fn builtin_query_set() -> Vec<NamedQuery> {
    let spy = || LabelPredicate::equals(0, 1);
    let any = || LabelPredicate::Any;
    let sub = |edges: &[(usize, usize)], preds: Vec<LabelPredicate>| {
        Query::Subgraph(SubgraphQuery::new(edges, preds).expect("valid built-in pattern"))
    };
    vec![
        NamedQuery::new("spy_count", sub(&[], vec![spy()])),
        NamedQuery::new("edge_count", Query::edge_count()),
        NamedQuery::new("spy_edges", sub(&[(0, 1)], vec![spy(), any()])),
        NamedQuery::new("triangles", Query::triangle()),
        NamedQuery::new("spy_triangles", sub(&[(0, 1), (1, 2), (0, 2)], vec![spy(), any(), any()])),
        NamedQuery::new("induced_paths", sub(&[(0, 1), (1, 2)], vec![any(), any(), any()])),
        NamedQuery::new("stars_3", sub(&[(0, 1), (0, 2), (0, 3)], vec![any(); 4])),
        NamedQuery::new("neighbor_spy", Query::profile(Profile::NeighborLabel(spy()))),
        NamedQuery::new("self_spy", Query::profile(Profile::SelfLabel(spy()))),
        NamedQuery::new("clustering", Query::profile(Profile::Clustering)),
        NamedQuery::new("local_bridge", Query::profile(Profile::LocalBridge)),
        NamedQuery::new("two_betweenness", Query::profile(Profile::TwoBetweenness)),
        NamedQuery::new(
            "mixed_profile",
            Query::profile(Profile::Mean(vec![
                Profile::Clustering,
                Profile::Complement(Box::new(Profile::LocalBridge)),
                Profile::NeighborLabel(spy()),
            ])),
        ),
        NamedQuery::new("constant", Query::Constant(1.0)),
    ]
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub n: usize,
    pub alphabet: u32,
    pub ks: Vec<u32>,
    /// Smoothing rate for the exact smooth-sensitivity comparison.
    pub beta: f64,
    pub queries: Vec<NamedQuery>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { n: 4, alphabet: 2, ks: vec![0, 1, 2], beta: 0.1, queries: builtin_query_set() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub query: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub model: Option<AdjacencyModel>,
    pub k: u32,
    pub value: f64,
    /// One of `<=`, `>=`, `==`.
    pub relation: String,
    pub bound: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub n: usize,
    pub alphabet: u32,
    pub datasets: usize,
    pub beta: f64,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "universe n={} alphabet={} datasets={} beta={}",
            self.n, self.alphabet, self.datasets, self.beta
        );
        let _ = writeln!(
            out,
            "{:<6} {:<22} {:<16} {:<7} {:>2} {:>12} {:>2} {:>12}",
            "status", "check", "query", "model", "k", "value", "", "bound"
        );
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{:<6} {:<22} {:<16} {:<7} {:>2} {:>12.6} {:>2} {:>12.6}",
                if c.passed { "PASS" } else { "FAIL" },
                c.check,
                c.query.as_deref().unwrap_or("-"),
                c.model.map_or("-", AdjacencyModel::name),
                c.k,
                c.value,
                c.relation,
                c.bound
            );
        }
        let failed = self.failures().count();
        let _ = writeln!(out, "{} checks, {} failed", self.checks.len(), failed);
        out
    }
}

struct Recorder(Vec<CheckResult>);

impl Recorder {
    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        check: &str,
        query: Option<&str>,
        model: Option<AdjacencyModel>,
        k: u32,
        value: f64,
        relation: &str,
        bound: f64,
    ) {
        let passed = match relation {
            "<=" => value <= bound + TOL,
            ">=" => value + TOL >= bound,
            _ => (value - bound).abs() <= TOL,
        };
        self.0.push(CheckResult {
            check: check.into(),
            query: query.map(str::to_owned),
            model,
            k,
            value,
            relation: relation.into(),
            bound,
            passed,
        });
    }
}

pub fn verify_bounds(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let u = enumerate_universe(cfg.n, cfg.alphabet)?;
    let mut rec = Recorder(Vec::new());

    for &k in &cfg.ks {
        check_projections(&u, k, &mut rec)?;
    }

    for nq in &cfg.queries {
        let f = u.evaluate(&nq.query);
        for model in AdjacencyModel::ALL {
            let dist = u.distances(model);
            let smooth = smooth_sensitivity_exact(&u, &f, cfg.beta, model)?;
            for &k in &cfg.ks {
                let members = u.members(k);
                let name = Some(nq.name.as_str());
                let rs = restricted_sensitivity_exact(dist, &f, &members)?.value;
                let bound = rs_bound(&nq.query, k, model).value;
                rec.push("restricted_vs_bound", name, Some(model), k, rs, "<=", bound);

                let best_member_smooth = (0..u.len()).filter(|&i| members[i]).map(|i| smooth[i]).fold(0.0, f64::max);
                rec.push("smooth_vs_restricted", name, Some(model), k, best_member_smooth, ">=", rs);

                let fh = construct_f_h(dist, &f, &members)?;
                let agree = (0..u.len()).filter(|&i| members[i]).map(|i| (fh[i] - f[i]).abs()).fold(0.0, f64::max);
                rec.push("extension_agrees_on_h", name, Some(model), k, agree, "==", 0.0);
                rec.push("extension_global", name, Some(model), k, global_sensitivity_exact(&u, &fh, model), "==", rs);
                rec.push("extension_lipschitz", name, Some(model), k, max_lipschitz_ratio(dist, &fh), "<=", rs);
            }
        }
    }

    let checks = rec.0;
    Ok(VerifyReport {
        n: u.n(),
        alphabet: u.alphabet(),
        datasets: u.len(),
        beta: cfg.beta,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

fn check_projections(u: &Universe, k: u32, rec: &mut Recorder) -> Result<()> {
    let edge_proj: Vec<usize> =
        u.datasets().iter().map(|g| u.index_of(&project_edge(g, k).graph)).collect::<Result<_>>()?;
    let mut worst_edge = 0usize;
    for i in 0..u.len() {
        for &j in u.neighbors(AdjacencyModel::Edge, i) {
            worst_edge = worst_edge.max(u.distance(AdjacencyModel::Edge, edge_proj[i], edge_proj[j as usize]));
        }
    }
    rec.push("edge_projection_smooth", None, Some(AdjacencyModel::Edge), k, worst_edge as f64, "<=", 3.0);

    let mut d_hat = Vec::with_capacity(u.len());
    let mut worst_degree = 0usize;
    let mut worst_soundness = f64::NEG_INFINITY;
    let mut worst_on_h: f64 = 0.0;
    for (i, g) in u.datasets().iter().enumerate() {
        let out = project_vertex_lp(g, k)?;
        worst_degree = worst_degree.max(out.graph.max_degree());
        let moved = u.distance(AdjacencyModel::Vertex, i, u.index_of(&out.graph)?) as f64;
        worst_soundness = worst_soundness.max(moved - out.d_hat);
        if g.max_degree() <= k as usize {
            worst_on_h = worst_on_h.max(out.d_hat.abs());
        }
        d_hat.push(out.d_hat);
    }
    let mut worst_jump: f64 = 0.0;
    for i in 0..u.len() {
        for &j in u.neighbors(AdjacencyModel::Vertex, i) {
            worst_jump = worst_jump.max((d_hat[i] - d_hat[j as usize]).abs());
        }
    }
    let vertex = Some(AdjacencyModel::Vertex);
    rec.push("lp_output_degree", None, vertex, k, worst_degree as f64, "<=", 2.0 * k as f64);
    rec.push("lp_estimator_sound", None, vertex, k, worst_soundness, "<=", 0.0);
    rec.push("lp_estimator_zero_on_h", None, vertex, k, worst_on_h, "==", 0.0);
    rec.push("lp_estimator_smooth", None, vertex, k, worst_jump, "<=", 4.0 + 2.0 * LP_TOLERANCE);
    Ok(())
}
