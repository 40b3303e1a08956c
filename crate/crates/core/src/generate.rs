//! Synthetic graph families. All randomness comes from a ChaCha20 stream
//! seeded with the caller's seed, so output is a pure function of the
//! arguments.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphFamily {
    /// Center 0 joined to every other vertex.
    Star,
    Complete,
    /// Parts `0..left` and `left..n`.
    CompleteBipartite,
    Cycle,
    /// Each pair independently with probability `p`.
    UniformRandom,
    /// Each new vertex attaches to `attach` distinct earlier vertices chosen
    /// proportionally to degree.
    PreferentialAttachment,
}

impl GraphFamily {
    pub const ALL: [GraphFamily; 6] = [
        GraphFamily::Star,
        GraphFamily::Complete,
        GraphFamily::CompleteBipartite,
        GraphFamily::Cycle,
        GraphFamily::UniformRandom,
        GraphFamily::PreferentialAttachment,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphFamily::Star => "star",
            GraphFamily::Complete => "complete",
            GraphFamily::CompleteBipartite => "complete_bipartite",
            GraphFamily::Cycle => "cycle",
            GraphFamily::UniformRandom => "uniform_random",
            GraphFamily::PreferentialAttachment => "preferential_attachment",
        }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for GraphFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GraphFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown graph family {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FamilyParams {
    /// Edge probability for `uniform_random`.
    pub p: f64,
    /// Edges per new vertex for `preferential_attachment`.
    pub attach: usize,
    /// Left part size for `complete_bipartite`; `None` means `n / 2`.
    pub left: Option<usize>,
    /// Probability that a vertex gets label 1 (labels are one 0/1 coordinate).
    pub label_p: f64,
}

impl Default for FamilyParams {
    fn default() -> Self {
        FamilyParams { p: 0.1, attach: 2, left: None, label_p: 0.0 }
    }
}

pub fn generate(family: GraphFamily, n: usize, params: &FamilyParams, seed: u64) -> Result<LabeledGraph> {
    let bad = |msg: String| Err(Error::InvalidParameter(msg));
    if !(0.0..=1.0).contains(&params.label_p) {
        return bad(format!("label_p must lie in [0, 1], got {}", params.label_p));
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let edges: Vec<(usize, usize)> = match family {
        GraphFamily::Star => {
            if n == 0 {
                return bad("star needs at least one vertex".into());
            }
            (1..n).map(|v| (0, v)).collect()
        }
        GraphFamily::Complete => (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
        GraphFamily::CompleteBipartite => {
            let left = params.left.unwrap_or(n / 2);
            if left > n {
                return bad(format!("left part {left} exceeds n = {n}"));
            }
            (0..left).flat_map(|u| (left..n).map(move |v| (u, v))).collect()
        }
        GraphFamily::Cycle => {
            if n < 3 {
                return bad(format!("cycle needs n ≥ 3, got {n}"));
            }
            (0..n).map(|v| (v.min((v + 1) % n), v.max((v + 1) % n))).collect()
        }
        GraphFamily::UniformRandom => {
            if !(0.0..=1.0).contains(&params.p) {
                return bad(format!("p must lie in [0, 1], got {}", params.p));
            }
            let mut e = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(params.p) {
                        e.push((u, v));
                    }
                }
            }
            e
        }
        GraphFamily::PreferentialAttachment => preferential_attachment(n, params.attach, &mut rng)?,
    };
    let labels = (0..n).map(|_| vec![rng.gen_bool(params.label_p) as u32]).collect();
    LabeledGraph::new(n, edges, labels)
}

fn preferential_attachment(n: usize, attach: usize, rng: &mut ChaCha20Rng) -> Result<Vec<(usize, usize)>> {
    if attach == 0 || attach >= n {
        return Err(Error::InvalidParameter(format!(
            "preferential attachment needs 1 ≤ attach < n, got attach = {attach}, n = {n}"
        )));
    }
    // Seed clique on attach + 1 vertices; `ends` lists every edge endpoint,
    // so a uniform pick from it is a degree-proportional pick.
    let mut edges: Vec<(usize, usize)> = (0..=attach).flat_map(|u| (u + 1..=attach).map(move |v| (u, v))).collect();
    let mut ends: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    for v in attach + 1..n {
        let mut targets: Vec<usize> = Vec::with_capacity(attach);
        while targets.len() < attach {
            let t = ends[rng.gen_range(0..ends.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        targets.sort_unstable();
        for t in targets {
            edges.push((t, v));
            ends.push(t);
            ends.push(v);
        }
    }
    Ok(edges)
}
