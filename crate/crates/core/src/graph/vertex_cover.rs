//! Exact minimum vertex cover for small graphs by branch and bound.
//!
//! Vertices are compacted into a `u128` bitmask, which bounds the instance at
//! 64 edges. Reductions applied at every node: degree-one vertices force
//! their neighbor, and an edge `uv` with `N[u] ⊆ N[v]` forces `v`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

use super::DEFAULT_VERTEX_COVER_CAP;

const MAX_CAP: usize = 64;

/// Minimum vertex cover of the graph spanned by `edges`, capped at
/// [`DEFAULT_VERTEX_COVER_CAP`] edges.
pub fn min_vertex_cover(edges: &[(usize, usize)]) -> Result<Vec<usize>> {
    min_vertex_cover_with_cap(edges, DEFAULT_VERTEX_COVER_CAP)
}

pub fn min_vertex_cover_with_cap(edges: &[(usize, usize)], cap: usize) -> Result<Vec<usize>> {
    if edges.len() > cap.min(MAX_CAP) {
        return Err(Error::VertexCoverCap { edges: edges.len(), cap: cap.min(MAX_CAP) });
    }
    let mut ids: BTreeMap<usize, usize> = BTreeMap::new();
    for &(u, v) in edges {
        let next = ids.len();
        ids.entry(u).or_insert(next);
        let next = ids.len();
        ids.entry(v).or_insert(next);
    }
    let original: Vec<usize> = {
        let mut o = vec![0; ids.len()];
        for (&orig, &local) in &ids {
            o[local] = orig;
        }
        o
    };
    let mut adj = vec![0u128; ids.len()];
    for &(u, v) in edges {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let (a, b) = (ids[&u], ids[&v]);
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }

    // Every vertex is a (trivial) cover.
    let mut best = Best { size: adj.len(), set: adj.iter().enumerate().fold(0u128, |m, (i, _)| m | (1 << i)) };
    search(adj, 0, &mut best);

    let mut cover: Vec<usize> = (0..original.len()).filter(|&i| best.set >> i & 1 == 1).map(|i| original[i]).collect();
    cover.sort_unstable();
    Ok(cover)
}

struct Best {
    size: usize,
    set: u128,
}

fn take(adj: &mut [u128], v: usize, chosen: &mut u128) {
    *chosen |= 1 << v;
    let mut ns = adj[v];
    while ns != 0 {
        let u = ns.trailing_zeros() as usize;
        ns &= ns - 1;
        adj[u] &= !(1 << v);
    }
    adj[v] = 0;
}

/// Applies forced moves until none remain.
fn reduce(adj: &mut [u128], chosen: &mut u128) {
    loop {
        let mut changed = false;
        for u in 0..adj.len() {
            let nu = adj[u];
            if nu == 0 {
                continue;
            }
            if nu.count_ones() == 1 {
                let w = nu.trailing_zeros() as usize;
                take(adj, w, chosen);
                changed = true;
                continue;
            }
            // N[u] ⊆ N[v] for some neighbor v: some optimal cover contains v.
            let mut ns = nu;
            while ns != 0 {
                let v = ns.trailing_zeros() as usize;
                ns &= ns - 1;
                if nu & !(1 << v) & !adj[v] == 0 {
                    take(adj, v, chosen);
                    changed = true;
                    break;
                }
            }
        }
        if !changed {
            return;
        }
    }
}

/// Size of a greedy maximal matching, a lower bound on any cover.
fn matching_bound(adj: &[u128]) -> usize {
    let mut used = 0u128;
    let mut size = 0;
    for (u, &nu) in adj.iter().enumerate() {
        if used >> u & 1 == 1 {
            continue;
        }
        let free = nu & !used;
        if free != 0 {
            let v = free.trailing_zeros() as usize;
            used |= (1 << u) | (1 << v);
            size += 1;
        }
    }
    size
}

fn search(mut adj: Vec<u128>, mut chosen: u128, best: &mut Best) {
    reduce(&mut adj, &mut chosen);
    let count = chosen.count_ones() as usize;
    let Some(v) = (0..adj.len()).filter(|&i| adj[i] != 0).max_by_key(|&i| (adj[i].count_ones(), std::cmp::Reverse(i)))
    else {
        if count < best.size {
            best.size = count;
            best.set = chosen;
        }
        return;
    };
    if count + matching_bound(&adj) >= best.size {
        return;
    }

    let mut with_v = adj.clone();
    let mut chosen_v = chosen;
    take(&mut with_v, v, &mut chosen_v);
    search(with_v, chosen_v, best);

    let mut ns = adj[v];
    while ns != 0 {
        let u = ns.trailing_zeros() as usize;
        ns &= ns - 1;
        take(&mut adj, u, &mut chosen);
    }
    search(adj, chosen, best);
}
