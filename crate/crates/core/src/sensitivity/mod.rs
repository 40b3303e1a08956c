//! Sensitivity bounds: analytic restricted-sensitivity bounds over `H_k`, the
//! smooth upper bound driven by a distance estimate, and exact computations
//! over an explicitly enumerated universe of datasets.

mod bounds;
mod construct;
mod smooth;

use serde::{Deserialize, Serialize};

pub use bounds::{rs_bound, rs_bound_local_profile, rs_bound_subgraph};
pub use construct::{construct_f_h, max_lipschitz_ratio, restricted_sensitivity_exact, DistanceMatrix};
pub use smooth::{g_envelope, smooth_upper_bound, SmoothBoundParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SensitivityKind {
    RestrictedBound,
    RestrictedExact,
    LocalExact,
    GlobalExact,
    SmoothExact,
    SmoothUpper,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SensitivityReport {
    pub value: f64,
    pub kind: SensitivityKind,
    pub provenance: String,
}

impl SensitivityReport {
    pub fn new(value: f64, kind: SensitivityKind, provenance: impl Into<String>) -> Self {
        debug_assert!(value >= 0.0);
        SensitivityReport { value, kind, provenance: provenance.into() }
    }
}
