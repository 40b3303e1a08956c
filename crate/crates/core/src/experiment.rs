//! Restricted sensitivity against smooth sensitivity on synthetic graphs.
//!
//! For one generated graph and every (query, model, k) the experiment lists
//! the analytic restricted bound, exact values from the oracle when the graph
//! is small enough, the mechanism's noise scale, and the empirical error of
//! seeded mechanism runs.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generate::{generate, FamilyParams, GraphFamily};
use crate::graph::{AdjacencyModel, LabeledGraph};
use crate::mechanism::{edge_noise_scale, release, vertex_noise_scale, PrivacyParams};
use crate::oracle::{
    enumerate_universe, local_sensitivity_exact, smooth_sensitivity_exact, NamedQuery, Universe, MAX_UNIVERSE_N,
};
use crate::projection::{project_edge, project_vertex_lp};
use crate::query::{LabelPredicate, Query};
use crate::sensitivity::{restricted_sensitivity_exact, rs_bound};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExperimentMode {
    /// Exact oracle columns; needs `n ≤ 4`.
    Exact,
    /// Analytic columns only.
    Bound,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub family: GraphFamily,
    pub n: usize,
    pub family_params: FamilyParams,
    pub ks: Vec<u32>,
    pub models: Vec<AdjacencyModel>,
    pub queries: Vec<NamedQuery>,
    pub epsilon: f64,
    pub delta: f64,
    pub trials: usize,
    pub seed: u64,
    pub mode: ExperimentMode,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapRow {
    pub family: GraphFamily,
    pub n: usize,
    pub query: String,
    pub model: AdjacencyModel,
    pub k: u32,
    pub beta: f64,
    pub true_value: f64,
    pub restricted_bound: f64,
    pub restricted_exact: Option<f64>,
    pub local_exact: Option<f64>,
    pub smooth_exact: Option<f64>,
    /// `e^{−2β}(n − 2)`, a lower bound on any `β`-smooth bound for unlabeled
    /// triangle counting in the vertex model; empty for other queries.
    pub smooth_lower_bound: Option<f64>,
    pub noise_scale: f64,
    pub mean_abs_error: f64,
}

fn is_unlabeled_triangle(q: &Query) -> bool {
    match q {
        Query::Subgraph(s) => {
            s.t() == 3 && s.pattern_edges().len() == 3 && s.predicates().iter().all(|p| *p == LabelPredicate::Any)
        }
        _ => false,
    }
}

impl ExperimentConfig {
    fn validate(&self) -> Result<PrivacyParams> {
        if self.trials == 0 {
            return Err(Error::InvalidParameter("trials must be at least 1".into()));
        }
        if self.ks.is_empty() || self.models.is_empty() || self.queries.is_empty() {
            return Err(Error::InvalidParameter("need at least one k, model and query".into()));
        }
        let params = PrivacyParams::new(self.epsilon, self.delta, self.seed)?;
        params.beta()?;
        if self.mode == ExperimentMode::Exact && self.n > MAX_UNIVERSE_N {
            return Err(Error::UniverseTooLarge(format!(
                "exact mode needs n ≤ {MAX_UNIVERSE_N}, got {}; use bound mode",
                self.n
            )));
        }
        Ok(params)
    }
}

struct ExactContext {
    universe: Universe,
}

pub fn run_gap_experiment(cfg: &ExperimentConfig) -> Result<Vec<GapRow>> {
    let params = cfg.validate()?;
    let beta = params.beta()?;
    let g = generate(cfg.family, cfg.n, &cfg.family_params, cfg.seed)?;
    let exact = match cfg.mode {
        ExperimentMode::Exact => Some(ExactContext { universe: enumerate_universe(cfg.n, 2)? }),
        ExperimentMode::Bound => None,
    };

    let mut rows = Vec::new();
    for nq in &cfg.queries {
        nq.query.check_labels(g.label_dim())?;
        let true_value = nq.query.evaluate(&g);
        let f = exact.as_ref().map(|e| e.universe.evaluate(&nq.query));
        for &model in &cfg.models {
            let smooth = match (&exact, &f) {
                (Some(e), Some(f)) => {
                    let s = smooth_sensitivity_exact(&e.universe, f, beta, model)?;
                    Some(s[e.universe.index_of(&g)?])
                }
                _ => None,
            };
            let local = match (&exact, &f) {
                (Some(e), Some(f)) => Some(local_sensitivity_exact(&e.universe, f, &g, model)?),
                _ => None,
            };
            for &k in &cfg.ks {
                let restricted_exact = match (&exact, &f) {
                    (Some(e), Some(f)) => Some(
                        restricted_sensitivity_exact(e.universe.distances(model), f, &e.universe.members(k))?.value,
                    ),
                    _ => None,
                };
                let (projected, scale) = projected_and_scale(&nq.query, &g, k, &params, model)?;
                let mean_abs_error = (0..cfg.trials)
                    .map(|t| release(projected, scale, cfg.seed.wrapping_add(t as u64)).map(|a| (a - true_value).abs()))
                    .sum::<Result<f64>>()?
                    / cfg.trials as f64;
                rows.push(GapRow {
                    family: cfg.family,
                    n: cfg.n,
                    query: nq.name.clone(),
                    model,
                    k,
                    beta,
                    true_value,
                    restricted_bound: rs_bound(&nq.query, k, model).value,
                    restricted_exact,
                    local_exact: local,
                    smooth_exact: smooth,
                    smooth_lower_bound: (is_unlabeled_triangle(&nq.query) && model == AdjacencyModel::Vertex)
                        .then(|| (-2.0 * beta).exp() * cfg.n.saturating_sub(2) as f64),
                    noise_scale: scale,
                    mean_abs_error,
                });
            }
        }
    }
    Ok(rows)
}

fn projected_and_scale(
    q: &Query,
    g: &LabeledGraph,
    k: u32,
    params: &PrivacyParams,
    model: AdjacencyModel,
) -> Result<(f64, f64)> {
    Ok(match model {
        AdjacencyModel::Edge => (q.evaluate(&project_edge(g, k).graph), edge_noise_scale(q, k, params.epsilon)),
        AdjacencyModel::Vertex => {
            let out = project_vertex_lp(g, k)?;
            (q.evaluate(&out.graph), vertex_noise_scale(q, k, params, out.d_hat)?)
        }
    })
}

pub fn write_csv<W: Write>(rows: &[GapRow], w: W) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(w);
    for r in rows {
        wtr.serialize(r)?;
    }
    wtr.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::builtin_query_set;
    use crate::query::{Profile, ProfileQuery};

    fn cfg(mode: ExperimentMode, n: usize, queries: Vec<NamedQuery>) -> ExperimentConfig {
        ExperimentConfig {
            family: GraphFamily::Star,
            n,
            family_params: FamilyParams::default(),
            ks: vec![1],
            models: vec![AdjacencyModel::Vertex],
            queries,
            epsilon: 1.0,
            delta: (-2.0f64).exp(),
            trials: 20,
            seed: 5,
            mode,
        }
    }

    #[test]
    fn exact_profile_on_star() {
        let q = NamedQuery::new(
            "neighbor_spy",
            Query::Profile(ProfileQuery::new(Profile::NeighborLabel(LabelPredicate::equals(0, 1)))),
        );
        let rows = run_gap_experiment(&cfg(ExperimentMode::Exact, 4, vec![q])).unwrap();
        let r = &rows[0];
        assert!(r.restricted_exact.unwrap() <= 3.0);
        assert!(r.local_exact.unwrap() >= 3.0);
        assert!(r.smooth_exact.unwrap() >= r.local_exact.unwrap());
    }

    #[test]
    fn bound_mode_triangle() {
        let mut c = cfg(ExperimentMode::Bound, 50, vec![NamedQuery::new("triangles", Query::triangle())]);
        c.ks = vec![5];
        let rows = run_gap_experiment(&c).unwrap();
        assert_eq!(rows[0].restricted_bound, 75.0);
        assert!((rows[0].smooth_lower_bound.unwrap() - (-0.5f64).exp() * 48.0).abs() < 1e-12);
        assert!(rows[0].restricted_exact.is_none());
    }

    #[test]
    fn constant_rows_are_zero() {
        let mut c = cfg(ExperimentMode::Exact, 4, vec![NamedQuery::new("constant", Query::Constant(0.0))]);
        c.models = AdjacencyModel::ALL.to_vec();
        for r in run_gap_experiment(&c).unwrap() {
            assert_eq!(r.restricted_bound, 0.0);
            assert_eq!(r.restricted_exact, Some(0.0));
            assert_eq!(r.local_exact, Some(0.0));
            assert_eq!(r.smooth_exact, Some(0.0));
            assert_eq!(r.noise_scale, 0.0);
            assert_eq!(r.mean_abs_error, 0.0);
        }
    }

    #[test]
    fn exact_mode_caps_n() {
        let c = cfg(ExperimentMode::Exact, 5, builtin_query_set());
        assert!(matches!(run_gap_experiment(&c), Err(Error::UniverseTooLarge(_))));
    }

    #[test]
    fn csv_is_deterministic() {
        let c = cfg(ExperimentMode::Exact, 4, builtin_query_set());
        let mut a = Vec::new();
        let mut b = Vec::new();
        write_csv(&run_gap_experiment(&c).unwrap(), &mut a).unwrap();
        write_csv(&run_gap_experiment(&c).unwrap(), &mut b).unwrap();
        assert_eq!(a, b);
        assert!(String::from_utf8(a).unwrap().starts_with("family,n,query,model,k,"));
    }
}
