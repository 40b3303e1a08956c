//! Noisy answers calibrated to restricted sensitivity.
//!
//! * Edge model: `f(μ_edge(G)) + Lap(3·RS_f(H_k)/ε)`; pure `ε`-DP on every
//!   input because the canonical projection is 3-smooth.
//! * Vertex model: `f(μ_LP(G)) + Lap(2S/ε)` with `S` the smooth upper bound
//!   built from `RS_f(H_2k)` and the 4-smooth estimator `d̂`, at
//!   `β = ε / (2 ln(1/δ))`; `(ε, δ)`-DP on every input.
//!
//! Sensitivities are always the analytic bounds, never data-dependent exact
//! values. Answers expose only the noisy value and public parameters; the
//! projected value and `d̂` are reachable only from tests and the `audit`
//! feature.

mod budget;
mod laplace;

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{AdjacencyModel, LabeledGraph};
use crate::projection::{project_edge, project_vertex_lp};
use crate::query::Query;
use crate::sensitivity::{rs_bound, smooth_upper_bound, SmoothBoundParams};

pub use budget::{compose, BudgetLedger, LedgerEntry, LedgerState, PrivacyBudget};
pub use laplace::{laplace_from_uniform, laplace_sample};

/// Smoothness constant of the LP distance estimator.
pub const ESTIMATOR_SMOOTHNESS: f64 = 4.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PrivacyParams {
    pub epsilon: f64,
    pub delta: f64,
    pub seed: u64,
}

impl PrivacyParams {
    pub fn new(epsilon: f64, delta: f64, seed: u64) -> Result<Self> {
        let p = PrivacyParams { epsilon, delta, seed };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        if !(self.epsilon > 0.0 && self.epsilon.is_finite()) {
            return Err(Error::InvalidParameter(format!("epsilon must be positive, got {}", self.epsilon)));
        }
        if !(0.0..1.0).contains(&self.delta) {
            return Err(Error::InvalidParameter(format!("delta must lie in [0, 1), got {}", self.delta)));
        }
        Ok(())
    }

    /// Smoothing rate `β = ε / (2 ln(1/δ))`; requires `0 < δ < 1`.
    pub fn beta(&self) -> Result<f64> {
        self.validate()?;
        if self.delta <= 0.0 {
            return Err(Error::InvalidParameter(
                "the vertex mechanism needs delta > 0: beta = epsilon / (2 ln(1/delta)) is undefined at delta = 0"
                    .into(),
            ));
        }
        Ok(self.epsilon / (2.0 * (1.0 / self.delta).ln()))
    }

    pub fn cost(&self) -> PrivacyBudget {
        PrivacyBudget { epsilon: self.epsilon, delta: self.delta }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MechanismKind {
    Edge,
    Vertex,
}

impl From<AdjacencyModel> for MechanismKind {
    fn from(m: AdjacencyModel) -> Self {
        match m {
            AdjacencyModel::Edge => MechanismKind::Edge,
            AdjacencyModel::Vertex => MechanismKind::Vertex,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MechanismAnswer {
    pub noisy_value: f64,
    /// Zero only for zero-sensitivity queries, which are released exactly.
    pub noise_scale: f64,
    pub mechanism: MechanismKind,
    true_projected_value: f64,
    d_hat: Option<f64>,
}

impl MechanismAnswer {
    #[cfg(any(test, feature = "audit"))]
    pub fn true_projected_value(&self) -> f64 {
        self.true_projected_value
    }

    #[cfg(any(test, feature = "audit"))]
    pub fn d_hat(&self) -> Option<f64> {
        self.d_hat
    }
}

pub(crate) fn release(value: f64, scale: f64, seed: u64) -> Result<f64> {
    if scale == 0.0 {
        return Ok(value);
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    Ok(value + laplace_sample(scale, &mut rng)?)
}

/// `3·RS_f(H_k)/ε`.
pub fn edge_noise_scale(q: &Query, k: u32, epsilon: f64) -> f64 {
    3.0 * rs_bound(q, k, AdjacencyModel::Edge).value / epsilon
}

/// `2·S/ε` with `S` the smooth upper bound at distance estimate `d_hat`.
pub fn vertex_noise_scale(q: &Query, k: u32, params: &PrivacyParams, d_hat: f64) -> Result<f64> {
    let beta = params.beta()?;
    let rs = rs_bound(q, 2 * k, AdjacencyModel::Vertex).value;
    let s = smooth_upper_bound(&SmoothBoundParams { beta, c: ESTIMATOR_SMOOTHNESS, rs, d_hat })?;
    Ok(2.0 * s / params.epsilon)
}

pub fn answer_edge_dp(q: &Query, g: &LabeledGraph, k: u32, params: &PrivacyParams) -> Result<MechanismAnswer> {
    params.validate()?;
    q.check_labels(g.label_dim())?;
    let projected = project_edge(g, k);
    let value = q.evaluate(&projected.graph);
    let scale = edge_noise_scale(q, k, params.epsilon);
    Ok(MechanismAnswer {
        noisy_value: release(value, scale, params.seed)?,
        noise_scale: scale,
        mechanism: MechanismKind::Edge,
        true_projected_value: value,
        d_hat: None,
    })
}

pub fn answer_vertex_dp(q: &Query, g: &LabeledGraph, k: u32, params: &PrivacyParams) -> Result<MechanismAnswer> {
    params.beta()?;
    q.check_labels(g.label_dim())?;
    let projected = project_vertex_lp(g, k)?;
    let value = q.evaluate(&projected.graph);
    let scale = vertex_noise_scale(q, k, params, projected.d_hat)?;
    Ok(MechanismAnswer {
        noisy_value: release(value, scale, params.seed)?,
        noise_scale: scale,
        mechanism: MechanismKind::Vertex,
        true_projected_value: value,
        d_hat: Some(projected.d_hat),
    })
}

pub fn answer(
    q: &Query,
    g: &LabeledGraph,
    k: u32,
    params: &PrivacyParams,
    model: AdjacencyModel,
) -> Result<MechanismAnswer> {
    match model {
        AdjacencyModel::Edge => answer_edge_dp(q, g, k, params),
        AdjacencyModel::Vertex => answer_vertex_dp(q, g, k, params),
    }
}

/// Radius `r` with `P(|Lap(b)| ≤ r) = 2/3`, i.e. `b·ln 3`, at the scale the
/// mechanism uses on members of `H_k` (where `d̂ = 0`).
pub fn utility_radius(q: &Query, k: u32, params: &PrivacyParams, model: AdjacencyModel) -> Result<f64> {
    let scale = match model {
        AdjacencyModel::Edge => {
            params.validate()?;
            edge_noise_scale(q, k, params.epsilon)
        }
        AdjacencyModel::Vertex => vertex_noise_scale(q, k, params, 0.0)?,
    };
    Ok(scale * 3f64.ln())
}

/// Public record of a released answer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnswerRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub query_id: Option<String>,
    pub mechanism: MechanismKind,
    pub epsilon: f64,
    pub delta: f64,
    pub k: u32,
    pub noisy_value: f64,
    /// Always present for the edge mechanism. For the vertex mechanism the
    /// scale depends on `d̂`, so it is included only on explicit request.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub noise_scale: Option<f64>,
    pub seed: u64,
}

impl AnswerRecord {
    pub fn new(
        answer: &MechanismAnswer,
        params: &PrivacyParams,
        k: u32,
        query_id: Option<String>,
        emit_scale: bool,
    ) -> Self {
        let noise_scale = match answer.mechanism {
            MechanismKind::Edge => Some(answer.noise_scale),
            MechanismKind::Vertex => emit_scale.then_some(answer.noise_scale),
        };
        AnswerRecord {
            query_id,
            mechanism: answer.mechanism,
            epsilon: params.epsilon,
            delta: params.delta,
            k,
            noisy_value: answer.noisy_value,
            noise_scale,
            seed: params.seed,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::query::{LabelPredicate, Profile};

    fn spy_profile() -> Query {
        Query::profile(Profile::NeighborLabel(LabelPredicate::equals(0, 1)))
    }

    #[test]
    fn beta_from_delta() {
        let p = PrivacyParams::new(1.0, (-2.0f64).exp(), 0).unwrap();
        assert!((p.beta().unwrap() - 0.25).abs() < 1e-12);
        let err = PrivacyParams::new(1.0, 0.0, 0).unwrap().beta().unwrap_err();
        assert!(err.to_string().contains("beta"));
        assert!(PrivacyParams::new(0.0, 0.1, 0).is_err());
        assert!(PrivacyParams::new(1.0, 1.0, 0).is_err());
    }

    #[test]
    fn edge_scale_for_profile() {
        let p = PrivacyParams::new(1.0, 0.0, 3).unwrap();
        let a = answer_edge_dp(&spy_profile(), &cycle(5), 2, &p).unwrap();
        assert_eq!(a.noise_scale, 9.0);
        let p = PrivacyParams::new(0.5, 0.0, 3).unwrap();
        assert_eq!(answer_edge_dp(&spy_profile(), &cycle(5), 2, &p).unwrap().noise_scale, 18.0);
    }

    #[test]
    fn members_keep_their_value() {
        let g = cycle(6);
        let q = Query::edge_count();
        let p = PrivacyParams::new(1.0, 0.01, 1).unwrap();
        assert_eq!(answer_edge_dp(&q, &g, 2, &p).unwrap().true_projected_value(), 6.0);
        let a = answer_vertex_dp(&q, &g, 2, &p).unwrap();
        assert_eq!(a.true_projected_value(), 6.0);
        assert_eq!(a.d_hat(), Some(0.0));
    }

    #[test]
    fn vertex_scale_at_zero_distance() {
        let p = PrivacyParams::new(1.0, (-2.0f64).exp(), 0).unwrap();
        let a = answer_vertex_dp(&spy_profile(), &cycle(5), 2, &p).unwrap();
        let s = (0..200).map(|d| (-(0.25 / 4.0) * d as f64).exp() * (2.0 * d as f64 + 5.0) * 9.0).fold(0.0, f64::max);
        assert!((a.noise_scale - 2.0 * s).abs() < 1e-9);
    }

    #[test]
    fn deterministic_under_seed() {
        let p = PrivacyParams::new(0.7, 1e-3, 42).unwrap();
        let g = star(6);
        for model in AdjacencyModel::ALL {
            let a = answer(&Query::triangle(), &g, 2, &p, model).unwrap();
            let b = answer(&Query::triangle(), &g, 2, &p, model).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn constant_query_is_exact() {
        let p = PrivacyParams::new(1.0, 0.1, 9).unwrap();
        for model in AdjacencyModel::ALL {
            let a = answer(&Query::Constant(4.0), &star(5), 1, &p, model).unwrap();
            assert_eq!(a.noisy_value, 4.0);
            assert_eq!(a.noise_scale, 0.0);
            assert_eq!(utility_radius(&Query::Constant(4.0), 1, &p, model).unwrap(), 0.0);
        }
    }

    #[test]
    fn utility_radius_values() {
        let p = PrivacyParams::new(1.0, 0.0, 0).unwrap();
        let r = utility_radius(&spy_profile(), 2, &p, AdjacencyModel::Edge).unwrap();
        assert!((r - 9.0 * 3f64.ln()).abs() < 1e-12);
        let p2 = PrivacyParams::new(2.0, 0.0, 0).unwrap();
        let r2 = utility_radius(&spy_profile(), 2, &p2, AdjacencyModel::Edge).unwrap();
        assert!((r2 - r / 2.0).abs() < 1e-12);
    }

    #[test]
    fn record_hides_vertex_scale_by_default() {
        let p = PrivacyParams::new(1.0, 0.1, 9).unwrap();
        let a = answer_vertex_dp(&Query::triangle(), &star(5), 1, &p).unwrap();
        let hidden = serde_json::to_value(AnswerRecord::new(&a, &p, 1, None, false)).unwrap();
        assert!(hidden.get("noise_scale").is_none());
        let shown = AnswerRecord::new(&a, &p, 1, Some("t".into()), true);
        assert_eq!(shown.noise_scale, Some(a.noise_scale));
        let e = answer_edge_dp(&Query::triangle(), &star(5), 1, &p).unwrap();
        assert_eq!(AnswerRecord::new(&e, &p, 1, None, false).noise_scale, Some(3.0 * 3.0));
    }
}
