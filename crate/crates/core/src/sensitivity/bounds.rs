use crate::graph::AdjacencyModel;
use crate::query::{Query, QueryClass};

use super::{SensitivityKind, SensitivityReport};

/// A local profile changes at the modified vertex and at its (at most `k`)
/// neighbors on either side: `k + 1` per edge step, `2k + 1` per vertex step.
pub fn rs_bound_local_profile(k: u32, model: AdjacencyModel) -> SensitivityReport {
    let k = k as f64;
    let (value, why) = match model {
        AdjacencyModel::Edge => {
            (k + 1.0, "k + 1: both endpoints of the toggled edge, or one relabeled vertex and its k neighbors")
        }
        AdjacencyModel::Vertex => (2.0 * k + 1.0, "2k + 1: the rewired vertex plus its neighbors before and after"),
    };
    SensitivityReport::new(value, SensitivityKind::RestrictedBound, format!("analytic local-profile bound {why}"))
}

/// Every changed copy of a `t`-vertex connected pattern contains the changed
/// vertex or edge; in `H_k` there are at most `t·k^{t−1}` of them.
pub fn rs_bound_subgraph(t: usize, k: u32) -> SensitivityReport {
    let value = t as f64 * (k as f64).powi(t as i32 - 1);
    SensitivityReport::new(
        value,
        SensitivityKind::RestrictedBound,
        format!("analytic subgraph bound t·k^(t-1) with t = {t}, k = {k}"),
    )
}

pub fn rs_bound(q: &Query, k: u32, model: AdjacencyModel) -> SensitivityReport {
    match q.class() {
        QueryClass::Subgraph { t } => rs_bound_subgraph(t, k),
        QueryClass::Profile => rs_bound_local_profile(k, model),
        QueryClass::Constant => SensitivityReport::new(0.0, SensitivityKind::RestrictedBound, "constant query"),
    }
}
