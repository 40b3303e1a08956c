mod common;

use proptest::prelude::*;
use rsdp::query::{count_subgraphs, evaluate_profile_query, LocalView, ProfileQuery};
use rsdp::{LabelPredicate, LabeledGraph, Profile, SubgraphQuery};

use common::*;

const PATTERNS: &[(&[(usize, usize)], usize)] = &[
    (&[], 1),
    (&[(0, 1)], 2),
    (&[(0, 1), (1, 2)], 3),
    (&[(0, 1), (1, 2), (0, 2)], 3),
    (&[(0, 1), (0, 2), (0, 3)], 4),
    (&[(0, 1), (1, 2), (2, 3)], 4),
    (&[(0, 1), (1, 2), (2, 3), (3, 0)], 4),
    (&[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)], 4),
    (&[(0, 1), (1, 2), (2, 3), (3, 4)], 5),
    (&[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)], 5),
];

fn combinations(n: usize, t: usize) -> Vec<Vec<usize>> {
    if t == 0 {
        return vec![vec![]];
    }
    if n < t {
        return vec![];
    }
    let mut out = combinations(n - 1, t);
    for mut c in combinations(n - 1, t - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Subsets `S` with some bijection from pattern positions onto `S` that
/// induces exactly the pattern and satisfies every position's predicate.
fn naive_count(edges: &[(usize, usize)], t: usize, preds: &[LabelPredicate], g: &LabeledGraph) -> u64 {
    let want = |i: usize, j: usize| edges.contains(&(i, j)) || edges.contains(&(j, i));
    combinations(g.n(), t)
        .into_iter()
        .filter(|s| {
            permutations(s).iter().any(|img| {
                (0..t).all(|i| preds[i].matches(g.label(img[i])))
                    && (0..t).all(|i| (i + 1..t).all(|j| g.has_edge(img[i], img[j]) == want(i, j)))
            })
        })
        .count() as u64
}

fn arb_predicate() -> impl Strategy<Value = LabelPredicate> {
    prop_oneof![Just(LabelPredicate::Any), (0u32..2).prop_map(|v| LabelPredicate::equals(0, v))]
}

fn arb_pattern() -> impl Strategy<Value = (usize, Vec<LabelPredicate>)> {
    (0..PATTERNS.len()).prop_flat_map(|i| (Just(i), prop::collection::vec(arb_predicate(), PATTERNS[i].1)))
}

fn binomial(n: usize, t: usize) -> u64 {
    if n < t {
        return 0;
    }
    (0..t).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

fn spy() -> LabelPredicate {
    LabelPredicate::equals(0, 1)
}

fn all_profiles() -> Vec<Profile> {
    vec![
        Profile::NeighborLabel(spy()),
        Profile::SelfLabel(spy()),
        Profile::Clustering,
        Profile::LocalBridge,
        Profile::TwoBetweenness,
        Profile::Mean(vec![Profile::Clustering, Profile::NeighborLabel(spy())]),
        Profile::Min(vec![Profile::LocalBridge, Profile::TwoBetweenness]),
        Profile::Complement(Box::new(Profile::Clustering)),
    ]
}

#[test]
fn profile_examples() {
    let k4 = LabeledGraph::unlabeled(4, pairs(4)).unwrap();
    assert_eq!(Profile::Clustering.evaluate(&LocalView::new(&k4, 0)), 1.0);
    let star = LabeledGraph::unlabeled(5, (1..5).map(|v| (0, v))).unwrap();
    assert_eq!(Profile::LocalBridge.evaluate(&LocalView::new(&star, 0)), 1.0);
    let p3 = LabeledGraph::unlabeled(3, [(0, 1), (1, 2)]).unwrap();
    assert_eq!(Profile::Clustering.evaluate(&LocalView::new(&p3, 1)), 0.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn counting_matches_naive_oracle(g in arb_graph(0, 7), (i, preds) in arb_pattern()) {
        let (edges, t) = PATTERNS[i];
        let q = SubgraphQuery::new(edges, preds.clone()).unwrap();
        prop_assert_eq!(count_subgraphs(&q, &g), naive_count(edges, t, &preds, &g));
    }

    #[test]
    fn relabelled_pattern_counts_the_same(
        g in arb_graph(0, 7),
        (i, preds) in arb_pattern(),
        perm in Just((0..5).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let (edges, t) = PATTERNS[i];
        // Send position p to σ(p), where σ is `perm` compressed onto 0..t.
        let order: Vec<usize> = perm.into_iter().filter(|&p| p < t).collect();
        let sigma: Vec<usize> = {
            let mut s = vec![0; t];
            for (p, &img) in order.iter().enumerate() {
                s[p] = img;
            }
            s
        };
        let moved: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (sigma[a], sigma[b])).collect();
        let mut moved_preds = vec![LabelPredicate::Any; t];
        for p in 0..t {
            moved_preds[sigma[p]] = preds[p].clone();
        }
        let a = SubgraphQuery::new(edges, preds).unwrap();
        let b = SubgraphQuery::new(&moved, moved_preds).unwrap();
        prop_assert_eq!(count_subgraphs(&a, &g), count_subgraphs(&b, &g));
    }

    #[test]
    fn counts_are_bounded(g in arb_graph(0, 9), (i, preds) in arb_pattern(), k in 1u32..=3) {
        let (edges, t) = PATTERNS[i];
        let q = SubgraphQuery::new(edges, preds).unwrap();
        let c = count_subgraphs(&q, &g);
        prop_assert!(c <= binomial(g.n(), t));
        let member = rsdp::projection::project_edge(&g, k).graph;
        prop_assert!(count_subgraphs(&q, &member) <= g.n() as u64 * (k as u64).pow(t as u32 - 1));
    }

    #[test]
    fn profiles_are_bounded(g in arb_graph(1, 9)) {
        for p in all_profiles() {
            for v in 0..g.n() {
                let x = p.evaluate(&LocalView::new(&g, v));
                prop_assert!((0.0..=1.0).contains(&x));
            }
            let total = evaluate_profile_query(&ProfileQuery::new(p), &g);
            prop_assert!(total >= 0.0 && total <= g.n() as f64);
        }
    }

    #[test]
    fn profiles_are_local(g in arb_graph(3, 9), v in 0usize..9, pick in any::<prop::sample::Index>()) {
        let v = v % g.n();
        let far: Vec<usize> = (0..g.n()).filter(|&x| x != v && !g.has_edge(v, x)).collect();
        let far_pairs: Vec<(usize, usize)> =
            far.iter().flat_map(|&a| far.iter().filter(move |&&b| b > a).map(move |&b| (a, b))).collect();
        prop_assume!(!far_pairs.is_empty());
        let (a, b) = far_pairs[pick.index(far_pairs.len())];
        let h = toggle(&g, &[(a, b)]);
        let mut labels = h.labels().to_vec();
        labels[a][0] ^= 1;
        let h = h.with_labels(labels).unwrap();
        for p in all_profiles() {
            prop_assert_eq!(p.evaluate(&LocalView::new(&g, v)), p.evaluate(&LocalView::new(&h, v)));
        }
    }
}
