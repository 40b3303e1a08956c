#![allow(dead_code)]

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rsdp::LabeledGraph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

pub fn from_mask(n: usize, mask: &[bool], labels: Vec<Vec<u32>>) -> LabeledGraph {
    let edges: Vec<_> = pairs(n).into_iter().zip(mask).filter(|(_, &b)| b).map(|(e, _)| e).collect();
    LabeledGraph::new(n, edges, labels).unwrap()
}

/// G(n, p) with one binary label coordinate.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> LabeledGraph {
    let mask: Vec<bool> = pairs(n).iter().map(|_| rng.gen_bool(p)).collect();
    let labels = (0..n).map(|_| vec![rng.gen_range(0..2)]).collect();
    from_mask(n, &mask, labels)
}

/// Flips one pair or one label.
pub fn edge_neighbor<R: Rng>(rng: &mut R, g: &LabeledGraph) -> LabeledGraph {
    let n = g.n();
    if n >= 2 && rng.gen_bool(0.8) {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        toggle(g, &[(u, v)])
    } else {
        let v = rng.gen_range(0..n);
        let mut labels = g.labels().to_vec();
        labels[v][0] ^= 1;
        g.with_labels(labels).unwrap()
    }
}

/// Rewires a random subset of one vertex's pairs and possibly its label.
pub fn vertex_neighbor<R: Rng>(rng: &mut R, g: &LabeledGraph) -> LabeledGraph {
    let n = g.n();
    let v = rng.gen_range(0..n);
    let flips: Vec<_> = (0..n).filter(|&u| u != v && rng.gen_bool(0.5)).map(|u| (u, v)).collect();
    let h = toggle(g, &flips);
    if rng.gen_bool(0.3) {
        let mut labels = h.labels().to_vec();
        labels[v][0] ^= 1;
        h.with_labels(labels).unwrap()
    } else {
        h
    }
}

pub fn toggle(g: &LabeledGraph, flips: &[(usize, usize)]) -> LabeledGraph {
    let mut edges = g.edge_set();
    for &(u, v) in flips {
        let e = (u.min(v), u.max(v));
        if !edges.remove(&e) {
            edges.insert(e);
        }
    }
    LabeledGraph::new(g.n(), edges, g.labels().to_vec()).unwrap()
}

/// Labeled graphs on `min_n..=max_n` vertices with edge probability drawn
/// per case.
pub fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = LabeledGraph> {
    (min_n..=max_n, 0.05f64..0.9).prop_flat_map(|(n, p)| {
        let m = n * (n.max(1) - 1) / 2;
        (prop::collection::vec(prop::bool::weighted(p), m), prop::collection::vec(0u32..2, n))
            .prop_map(move |(mask, labels)| from_mask(n, &mask, labels.into_iter().map(|l| vec![l]).collect()))
    })
}

/// Minimum number of vertices whose incident edges must all be deleted for
/// the rest to have maximum degree `k`. Rewiring a vertex can only do worse
/// than deleting its edges, so this is the vertex-model distance to `H_k`.
pub fn vertex_distance_to_hk(g: &LabeledGraph, k: u32) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|s| {
            (0..n).all(|u| s >> u & 1 == 1 || g.neighbors(u).iter().filter(|&&w| s >> w & 1 == 0).count() <= k as usize)
        })
        .map(u32::count_ones)
        .min()
        .unwrap() as usize
}
