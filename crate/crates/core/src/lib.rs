//! Differentially private query answering for labeled graphs, with noise
//! calibrated to the restricted sensitivity of a query over the class of
//! bounded-degree graphs `H_k`.
//!
//! The crate is organised around the pipeline a query goes through:
//!
//! * [`graph`] holds the labeled-graph model, the two adjacency notions and
//!   the exact distances they induce.
//! * [`projection`] maps arbitrary graphs into (a superset of) `H_k`: the
//!   canonical edge projection, the LP-rounding vertex projection with its
//!   distance estimator, and the greedy vertex-deletion projection.
//! * [`query`] defines subgraph-counting and local-profile queries.
//! * [`sensitivity`] computes analytic restricted-sensitivity bounds, the
//!   smooth upper bound used by the vertex mechanism, and the exhaustive
//!   construction of a globally Lipschitz extension `f_H`.
//! * [`mechanism`] releases noisy answers and tracks the privacy budget.
//! * [`oracle`] enumerates every labeled graph on up to four vertices and
//!   checks all of the above by brute force.
//!
//! [`generate`] and [`experiment`] provide synthetic graph families and the
//! restricted-versus-smooth sensitivity comparison used by the CLI.

pub mod error;
pub mod experiment;
pub mod generate;
pub mod graph;
pub mod mechanism;
pub mod oracle;
pub mod projection;
pub mod query;
pub mod sensitivity;

pub use error::{Error, Result};
pub use graph::{AdjacencyModel, Hypothesis, LabeledGraph};
pub use mechanism::{MechanismAnswer, MechanismKind, PrivacyParams};
pub use projection::{LpSolution, ProjectionOutcome};
pub use query::{LabelPredicate, Profile, ProfileQuery, Query, SubgraphQuery};
pub use sensitivity::{SensitivityKind, SensitivityReport, SmoothBoundParams};
