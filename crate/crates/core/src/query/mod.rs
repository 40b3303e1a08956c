//! Queries over labeled graphs: induced-subgraph counts with per-position
//! label predicates, and sums of radius-one local profiles.

mod profile;
mod spec;
mod subgraph;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

pub use profile::{builtin_profiles, evaluate_profile_query, BuiltinProfile, LocalView, Profile, ProfileQuery};
pub use spec::{PredicateSpec, ProfileSpec, QuerySpec};
pub use subgraph::{count_subgraphs, SubgraphQuery, MAX_PATTERN_SIZE};

/// Membership test on one coordinate of a label vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelPredicate {
    Any,
    In { dim: usize, values: Vec<u32> },
}

impl LabelPredicate {
    pub fn equals(dim: usize, value: u32) -> Self {
        LabelPredicate::In { dim, values: vec![value] }
    }

    pub fn matches(&self, label: &[u32]) -> bool {
        match self {
            LabelPredicate::Any => true,
            LabelPredicate::In { dim, values } => label.get(*dim).is_some_and(|x| values.contains(x)),
        }
    }

    pub(crate) fn check_dim(&self, label_dim: usize) -> Result<()> {
        match self {
            LabelPredicate::In { dim, .. } if *dim >= label_dim => {
                Err(Error::InvalidQuery(format!("predicate reads label dimension {dim} but labels have {label_dim}")))
            }
            _ => Ok(()),
        }
    }
}

/// Sensitivity-relevant shape of a query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum QueryClass {
    Subgraph { t: usize },
    Profile,
    Constant,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Query {
    Subgraph(SubgraphQuery),
    Profile(ProfileQuery),
    /// Data-independent answer; useful as a zero-sensitivity baseline.
    Constant(f64),
}

impl Query {
    pub fn evaluate(&self, g: &LabeledGraph) -> f64 {
        match self {
            Query::Subgraph(q) => count_subgraphs(q, g) as f64,
            Query::Profile(q) => evaluate_profile_query(q, g),
            Query::Constant(c) => *c,
        }
    }

    pub fn class(&self) -> QueryClass {
        match self {
            Query::Subgraph(q) => QueryClass::Subgraph { t: q.t() },
            Query::Profile(_) => QueryClass::Profile,
            Query::Constant(_) => QueryClass::Constant,
        }
    }

    /// Rejects predicates that read label dimensions `g` does not have.
    pub fn check_labels(&self, label_dim: usize) -> Result<()> {
        match self {
            Query::Subgraph(q) => q.predicates().iter().try_for_each(|p| p.check_dim(label_dim)),
            Query::Profile(q) => q.profile.check_dims(label_dim),
            Query::Constant(_) => Ok(()),
        }
    }

    pub fn triangle() -> Self {
        Query::Subgraph(SubgraphQuery::triangle())
    }

    pub fn edge_count() -> Self {
        Query::Subgraph(SubgraphQuery::edge())
    }

    pub fn profile(p: Profile) -> Self {
        Query::Profile(ProfileQuery::new(p))
    }
}
