//! JSON query specifications.
//!
//! ```json
//! {"type": "subgraph", "pattern_edges": [[0,1],[1,2],[0,2]],
//!  "predicates": [{"dim": 0, "in": [1]}, "any", "any"]}
//! {"type": "profile", "profile": "neighbor_label", "params": {"dim": 0, "in": [1]}}
//! {"type": "profile", "profile": {"mean": ["clustering", "local_bridge"]}}
//! {"type": "constant", "value": 0}
//! ```
//!
//! Every form accepts an optional `"id"` used in answer records.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{LabelPredicate, Profile, ProfileQuery, Query, SubgraphQuery};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PredicateSpec {
    Keyword(String),
    In {
        dim: usize,
        #[serde(rename = "in")]
        values: Vec<u32>,
    },
}

impl PredicateSpec {
    pub fn to_predicate(&self) -> Result<LabelPredicate> {
        match self {
            PredicateSpec::Keyword(k) if k == "any" => Ok(LabelPredicate::Any),
            PredicateSpec::Keyword(k) => {
                Err(Error::InvalidQuery(format!("unknown predicate {k:?}, expected \"any\" or {{\"dim\", \"in\"}}")))
            }
            PredicateSpec::In { dim, values } => Ok(LabelPredicate::In { dim: *dim, values: values.clone() }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ProfileSpec {
    Name(String),
    Named {
        name: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        params: Option<PredicateSpec>,
    },
    Min {
        min: Vec<ProfileSpec>,
    },
    Max {
        max: Vec<ProfileSpec>,
    },
    Mean {
        mean: Vec<ProfileSpec>,
    },
    Not {
        not: Box<ProfileSpec>,
    },
}

impl ProfileSpec {
    fn to_profile(&self, params: Option<&PredicateSpec>) -> Result<Profile> {
        let list = |ps: &[ProfileSpec]| -> Result<Vec<Profile>> {
            if ps.is_empty() {
                return Err(Error::InvalidQuery("empty profile composition".into()));
            }
            ps.iter().map(|p| p.to_profile(None)).collect()
        };
        match self {
            ProfileSpec::Name(name) => Profile::builtin(name, params.map(PredicateSpec::to_predicate).transpose()?),
            ProfileSpec::Named { name, params } => {
                Profile::builtin(name, params.as_ref().map(PredicateSpec::to_predicate).transpose()?)
            }
            ProfileSpec::Min { min } => Ok(Profile::Min(list(min)?)),
            ProfileSpec::Max { max } => Ok(Profile::Max(list(max)?)),
            ProfileSpec::Mean { mean } => Ok(Profile::Mean(list(mean)?)),
            ProfileSpec::Not { not } => Ok(Profile::Complement(Box::new(not.to_profile(None)?))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum QuerySpec {
    Subgraph {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        id: Option<String>,
        #[serde(default)]
        pattern_edges: Vec<[usize; 2]>,
        predicates: Vec<PredicateSpec>,
    },
    Profile {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        id: Option<String>,
        profile: ProfileSpec,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        params: Option<PredicateSpec>,
    },
    Constant {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        id: Option<String>,
        value: f64,
    },
}

impl QuerySpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidQuery(format!("bad query spec: {e}")))
    }

    pub fn id(&self) -> Option<&str> {
        match self {
            QuerySpec::Subgraph { id, .. } | QuerySpec::Profile { id, .. } | QuerySpec::Constant { id, .. } => {
                id.as_deref()
            }
        }
    }

    pub fn to_query(&self) -> Result<Query> {
        match self {
            QuerySpec::Subgraph { pattern_edges, predicates, .. } => {
                let preds = predicates.iter().map(PredicateSpec::to_predicate).collect::<Result<Vec<_>>>()?;
                let edges: Vec<(usize, usize)> = pattern_edges.iter().map(|&[u, v]| (u, v)).collect();
                Ok(Query::Subgraph(SubgraphQuery::new(&edges, preds)?))
            }
            QuerySpec::Profile { profile, params, .. } => {
                if params.is_some() && !matches!(profile, ProfileSpec::Name(_)) {
                    return Err(Error::InvalidQuery("top-level params only apply to a profile given by name".into()));
                }
                Ok(Query::Profile(ProfileQuery::new(profile.to_profile(params.as_ref())?)))
            }
            QuerySpec::Constant { value, .. } => {
                if !value.is_finite() {
                    return Err(Error::InvalidQuery("constant must be finite".into()));
                }
                Ok(Query::Constant(*value))
            }
        }
    }
}
