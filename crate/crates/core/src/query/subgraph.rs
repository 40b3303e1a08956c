//! Induced-subgraph counting.
//!
//! A vertex set `S` counts once if some bijection from pattern positions to
//! `S` makes `G[S]` equal the pattern (non-edges included) and satisfies every
//! position's predicate. Patterns are connected, so only connected induced
//! subsets are visited; they are enumerated without repetition by ESU
//! (each subset is grown from its smallest vertex through exclusive
//! neighborhoods).

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

use super::LabelPredicate;

pub const MAX_PATTERN_SIZE: usize = 5;

#[derive(Debug, Clone, PartialEq)]
pub struct SubgraphQuery {
    /// Bit `j` of `pattern[i]` is set iff positions `i` and `j` are adjacent.
    pattern: Vec<u8>,
    edges: Vec<(usize, usize)>,
    predicates: Vec<LabelPredicate>,
}

impl SubgraphQuery {
    pub fn new(edges: &[(usize, usize)], predicates: Vec<LabelPredicate>) -> Result<Self> {
        let t = predicates.len();
        if t == 0 {
            return Err(Error::InvalidQuery("pattern needs at least one vertex".into()));
        }
        if t > MAX_PATTERN_SIZE {
            return Err(Error::InvalidQuery(format!("pattern has {t} vertices, at most {MAX_PATTERN_SIZE} supported")));
        }
        let mut pattern = vec![0u8; t];
        let mut canon = Vec::new();
        for &(u, v) in edges {
            if u >= t || v >= t {
                return Err(Error::InvalidQuery(format!("pattern edge ({u}, {v}) outside {t} positions")));
            }
            if u == v {
                return Err(Error::InvalidQuery(format!("pattern self-loop at {u}")));
            }
            if pattern[u] >> v & 1 == 1 {
                return Err(Error::InvalidQuery(format!("duplicate pattern edge ({u}, {v})")));
            }
            pattern[u] |= 1 << v;
            pattern[v] |= 1 << u;
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        let mut reached = 1u8;
        loop {
            let next = (0..t).filter(|&i| reached >> i & 1 == 1).fold(reached, |acc, i| acc | pattern[i]);
            if next == reached {
                break;
            }
            reached = next;
        }
        if reached.count_ones() as usize != t {
            return Err(Error::InvalidQuery("pattern must be connected".into()));
        }
        Ok(SubgraphQuery { pattern, edges: canon, predicates })
    }

    /// Unconstrained pattern over `t` positions.
    pub fn unlabeled(edges: &[(usize, usize)], t: usize) -> Result<Self> {
        Self::new(edges, vec![LabelPredicate::Any; t])
    }

    pub fn triangle() -> Self {
        Self::unlabeled(&[(0, 1), (1, 2), (0, 2)], 3).expect("valid pattern")
    }

    pub fn edge() -> Self {
        Self::unlabeled(&[(0, 1)], 2).expect("valid pattern")
    }

    pub fn t(&self) -> usize {
        self.predicates.len()
    }

    pub fn pattern_edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn predicates(&self) -> &[LabelPredicate] {
        &self.predicates
    }

    /// Whether the sorted vertex set `set` is counted in `g`.
    pub fn matches_set(&self, g: &LabeledGraph, set: &[usize]) -> bool {
        let t = self.t();
        debug_assert_eq!(set.len(), t);
        let mut perm: Vec<usize> = (0..t).collect();
        // Heap's algorithm over position -> set index assignments.
        let mut c = vec![0usize; t];
        if self.assignment_ok(g, set, &perm) {
            return true;
        }
        let mut i = 0;
        while i < t {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                if self.assignment_ok(g, set, &perm) {
                    return true;
                }
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        false
    }

    fn assignment_ok(&self, g: &LabeledGraph, set: &[usize], perm: &[usize]) -> bool {
        let t = self.t();
        for i in 0..t {
            if !self.predicates[i].matches(g.label(set[perm[i]])) {
                return false;
            }
        }
        for i in 0..t {
            for j in i + 1..t {
                let want = self.pattern[i] >> j & 1 == 1;
                if g.has_edge(set[perm[i]], set[perm[j]]) != want {
                    return false;
                }
            }
        }
        true
    }
}

pub fn count_subgraphs(q: &SubgraphQuery, g: &LabeledGraph) -> u64 {
    let t = q.t();
    let mut count = 0u64;
    let mut visit = |set: &[usize]| {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        if q.matches_set(g, &sorted) {
            count += 1;
        }
    };
    for v in 0..g.n() {
        let ext: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| u > v).collect();
        let mut sub = vec![v];
        extend(g, t, &mut sub, ext, v, &mut visit);
    }
    count
}

fn extend(
    g: &LabeledGraph,
    t: usize,
    sub: &mut Vec<usize>,
    mut ext: Vec<usize>,
    root: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    if sub.len() == t {
        visit(sub);
        return;
    }
    while let Some(w) = ext.pop() {
        let mut next = ext.clone();
        for &u in g.neighbors(w) {
            if u > root && !sub.contains(&u) && sub.iter().all(|&s| !g.has_edge(u, s)) && !next.contains(&u) {
                next.push(u);
            }
        }
        sub.push(w);
        extend(g, t, sub, next, root, visit);
        sub.pop();
    }
}
