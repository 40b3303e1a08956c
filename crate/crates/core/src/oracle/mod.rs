//! Brute-force ground truth over every labeled graph on a few vertices.
//!
//! A universe fixes `n ≤ 4` vertices and a single label coordinate with at
//! most two values. Dataset `i` has edge mask `i / alphabet^n` and label code
//! `i % alphabet^n`; bit `p` of the edge mask is the `p`-th pair in
//! lexicographic order, and vertex `v`'s label is digit `v` of the label code.

mod exact;
mod verify;

use crate::error::{Error, Result};
use crate::graph::{AdjacencyModel, LabeledGraph};
use crate::query::Query;
use crate::sensitivity::DistanceMatrix;

pub use exact::{
    global_sensitivity_exact, local_sensitivities, local_sensitivity_exact, smooth_dominance, smooth_sensitivity_exact,
    DominanceSummary,
};
pub use verify::{builtin_query_set, verify_bounds, CheckResult, NamedQuery, VerifyConfig, VerifyReport};

pub const MAX_UNIVERSE_N: usize = 4;
pub const MAX_ALPHABET: u32 = 2;

pub struct Universe {
    n: usize,
    alphabet: u32,
    pairs: Vec<(usize, usize)>,
    datasets: Vec<LabeledGraph>,
    edge_dist: DistanceMatrix,
    vertex_dist: DistanceMatrix,
    edge_nbrs: Vec<Vec<u32>>,
    vertex_nbrs: Vec<Vec<u32>>,
}

impl std::fmt::Debug for Universe {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Universe")
            .field("n", &self.n)
            .field("alphabet", &self.alphabet)
            .field("datasets", &self.datasets.len())
            .finish()
    }
}

/// Minimum vertex cover size of every graph on `n` vertices, indexed by edge
/// mask, by scanning vertex subsets in order of size.
fn vertex_cover_table(n: usize, pairs: &[(usize, usize)]) -> Vec<u8> {
    let mut subsets: Vec<u32> = (0..1u32 << n).collect();
    subsets.sort_by_key(|s| s.count_ones());
    (0..1u32 << pairs.len())
        .map(|mask| {
            let covered = |s: u32| {
                pairs.iter().enumerate().all(|(p, &(u, v))| mask >> p & 1 == 0 || s >> u & 1 == 1 || s >> v & 1 == 1)
            };
            subsets.iter().find(|&&s| covered(s)).expect("all vertices cover").count_ones() as u8
        })
        .collect()
}

pub fn enumerate_universe(n: usize, alphabet: u32) -> Result<Universe> {
    if n == 0 || n > MAX_UNIVERSE_N || alphabet == 0 || alphabet > MAX_ALPHABET {
        return Err(Error::UniverseTooLarge(format!(
            "need 1 ≤ n ≤ {MAX_UNIVERSE_N} and 1 ≤ alphabet ≤ {MAX_ALPHABET}, got n = {n}, alphabet = {alphabet}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let label_codes = (alphabet as usize).pow(n as u32);
    let size = (1usize << pairs.len()) * label_codes;

    let decode = |i: usize| -> (u32, Vec<u32>) {
        let mask = (i / label_codes) as u32;
        let mut code = i % label_codes;
        let labels = (0..n)
            .map(|_| {
                let l = (code % alphabet as usize) as u32;
                code /= alphabet as usize;
                l
            })
            .collect();
        (mask, labels)
    };
    let decoded: Vec<(u32, Vec<u32>)> = (0..size).map(decode).collect();
    let datasets: Vec<LabeledGraph> = decoded
        .iter()
        .map(|(mask, labels)| {
            let edges = pairs.iter().enumerate().filter(|(p, _)| mask >> p & 1 == 1).map(|(_, &e)| e);
            LabeledGraph::new(n, edges, labels.iter().map(|&l| vec![l]).collect()).expect("valid enumeration")
        })
        .collect();

    let vc = vertex_cover_table(n, &pairs);
    let touches: Vec<u32> = (0..n)
        .map(|v| pairs.iter().enumerate().filter(|(_, &(a, b))| a == v || b == v).fold(0, |m, (p, _)| m | 1 << p))
        .collect();
    let diff_vertices = |a: &[u32], b: &[u32]| -> u32 { (0..n).filter(|&v| a[v] != b[v]).fold(0, |m, v| m | 1 << v) };
    let edge_dist = DistanceMatrix::from_fn(size, |i, j| {
        let (mi, li) = &decoded[i];
        let (mj, lj) = &decoded[j];
        ((mi ^ mj).count_ones() + diff_vertices(li, lj).count_ones()) as u16
    });
    let vertex_dist = DistanceMatrix::from_fn(size, |i, j| {
        let (mi, li) = &decoded[i];
        let (mj, lj) = &decoded[j];
        let u = diff_vertices(li, lj);
        let mut diff = mi ^ mj;
        for v in (0..n).filter(|&v| u >> v & 1 == 1) {
            diff &= !touches[v];
        }
        (u.count_ones() + vc[diff as usize] as u32) as u16
    });

    let index = |mask: u32, labels: &[u32]| -> u32 {
        let code = labels.iter().rev().fold(0usize, |c, &l| c * alphabet as usize + l as usize);
        (mask as usize * label_codes + code) as u32
    };
    let mut edge_nbrs = Vec::with_capacity(size);
    let mut vertex_nbrs = Vec::with_capacity(size);
    for (i, (mask, labels)) in decoded.iter().enumerate() {
        let mut e: Vec<u32> = (0..pairs.len()).map(|p| index(mask ^ 1 << p, labels)).collect();
        let mut vtx = Vec::new();
        for v in 0..n {
            for value in 0..alphabet {
                let mut relabeled = labels.clone();
                relabeled[v] = value;
                if value != labels[v] {
                    e.push(index(*mask, &relabeled));
                }
                let others: Vec<usize> = (0..n).filter(|&u| u != v).collect();
                for subset in 0..1u32 << others.len() {
                    let mut m = mask & !touches[v];
                    for (b, &u) in others.iter().enumerate() {
                        if subset >> b & 1 == 1 {
                            let p = pairs.iter().position(|&pr| pr == (u.min(v), u.max(v))).expect("pair");
                            m |= 1 << p;
                        }
                    }
                    let j = index(m, &relabeled);
                    if j as usize != i {
                        vtx.push(j);
                    }
                }
            }
        }
        e.sort_unstable();
        vtx.sort_unstable();
        vtx.dedup();
        edge_nbrs.push(e);
        vertex_nbrs.push(vtx);
    }

    Ok(Universe { n, alphabet, pairs, datasets, edge_dist, vertex_dist, edge_nbrs, vertex_nbrs })
}

impl Universe {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.datasets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.datasets.is_empty()
    }

    pub fn datasets(&self) -> &[LabeledGraph] {
        &self.datasets
    }

    pub fn dataset(&self, i: usize) -> &LabeledGraph {
        &self.datasets[i]
    }

    pub fn distances(&self, model: AdjacencyModel) -> &DistanceMatrix {
        match model {
            AdjacencyModel::Edge => &self.edge_dist,
            AdjacencyModel::Vertex => &self.vertex_dist,
        }
    }

    pub fn distance(&self, model: AdjacencyModel, i: usize, j: usize) -> usize {
        self.distances(model).get(i, j) as usize
    }

    /// Indices of the datasets one step away from dataset `i`.
    pub fn neighbors(&self, model: AdjacencyModel, i: usize) -> &[u32] {
        match model {
            AdjacencyModel::Edge => &self.edge_nbrs[i],
            AdjacencyModel::Vertex => &self.vertex_nbrs[i],
        }
    }

    pub fn index_of(&self, g: &LabeledGraph) -> Result<usize> {
        if g.n() != self.n || g.label_dim() != 1 {
            return Err(Error::NotInUniverse);
        }
        let mut mask = 0usize;
        for (p, &(u, v)) in self.pairs.iter().enumerate() {
            if g.has_edge(u, v) {
                mask |= 1 << p;
            }
        }
        let mut code = 0usize;
        for v in (0..self.n).rev() {
            let l = g.label(v)[0];
            if l >= self.alphabet {
                return Err(Error::NotInUniverse);
            }
            code = code * self.alphabet as usize + l as usize;
        }
        Ok(mask * (self.alphabet as usize).pow(self.n as u32) + code)
    }

    pub fn evaluate(&self, q: &Query) -> Vec<f64> {
        self.datasets.iter().map(|g| q.evaluate(g)).collect()
    }

    /// Membership flags for `H_k`.
    pub fn members(&self, k: u32) -> Vec<bool> {
        self.datasets.iter().map(|g| g.max_degree() <= k as usize).collect()
    }
}
