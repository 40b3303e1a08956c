mod common;

use proptest::prelude::*;
use rsdp::oracle::{builtin_query_set, enumerate_universe};
use rsdp::query::Query;
use rsdp::sensitivity::{
    construct_f_h, g_envelope, max_lipschitz_ratio, restricted_sensitivity_exact, rs_bound, smooth_upper_bound,
    SmoothBoundParams,
};
use rsdp::{AdjacencyModel, LabelPredicate, Profile};

/// Scans every integer candidate up to well past the peak of the decaying
/// term.
fn brute_force_bound(p: &SmoothBoundParams) -> f64 {
    let start = p.d_hat.ceil() as u64;
    let stop = start + (40.0 * p.c / p.beta) as u64 + 100;
    (start..=stop)
        .map(|d| {
            let d = d as f64;
            (-(p.beta / p.c) * (d - p.d_hat)).exp() * (2.0 * d + p.c + 1.0)
        })
        .fold(0.0, f64::max)
        * p.rs
}

fn params(beta: f64, c: f64, rs: f64, d_hat: f64) -> SmoothBoundParams {
    SmoothBoundParams { beta, c, rs, d_hat }
}

#[test]
fn construction_on_three_vertices() {
    let u = enumerate_universe(3, 2).unwrap();
    assert_eq!(u.len(), 64);
    let dist = u.distances(AdjacencyModel::Edge);
    let f = u.evaluate(&Query::edge_count());
    let members = u.members(1);
    let rs = restricted_sensitivity_exact(dist, &f, &members).unwrap().value;
    assert_eq!(rs, 1.0);
    let f_h = construct_f_h(dist, &f, &members).unwrap();
    for i in 0..u.len() {
        if members[i] {
            assert_eq!(f_h[i], f[i]);
        }
    }
    assert!((max_lipschitz_ratio(dist, &f_h) - rs).abs() <= 1e-9);
}

#[test]
fn spy_neighbor_restricted_sensitivity() {
    let u = enumerate_universe(3, 2).unwrap();
    let q = Query::profile(Profile::NeighborLabel(LabelPredicate::equals(0, 1)));
    let f = u.evaluate(&q);
    let rs = restricted_sensitivity_exact(u.distances(AdjacencyModel::Vertex), &f, &u.members(1)).unwrap();
    assert!(rs.value <= 3.0);
    assert_eq!(
        restricted_sensitivity_exact(u.distances(AdjacencyModel::Vertex), &vec![2.0; 64], &u.members(1)).unwrap().value,
        0.0
    );
}

#[test]
fn construction_is_lipschitz_for_every_builtin_query() {
    let u = enumerate_universe(3, 2).unwrap();
    for nq in builtin_query_set() {
        let f = u.evaluate(&nq.query);
        for model in AdjacencyModel::ALL {
            let dist = u.distances(model);
            for k in 0..=2 {
                let members = u.members(k);
                let rs = restricted_sensitivity_exact(dist, &f, &members).unwrap().value;
                assert!(rs <= rs_bound(&nq.query, k, model).value + 1e-9, "{} {model:?} k={k}", nq.name);
                let f_h = construct_f_h(dist, &f, &members).unwrap();
                let ratio = max_lipschitz_ratio(dist, &f_h);
                assert!(ratio <= rs + 1e-9, "{} {model:?} k={k}: {ratio} > {rs}", nq.name);
                assert!((0..u.len()).filter(|&i| members[i]).all(|i| f_h[i] == f[i]));
            }
        }
    }
}

#[test]
fn integer_candidates_make_a_sawtooth_past_the_peak() {
    // Crossing an integer drops the candidate at ⌈d̂⌉, so S can decrease.
    let (beta, c) = (2.95, 1.0);
    let a = smooth_upper_bound(&params(beta, c, 1.0, 23.7)).unwrap();
    let b = smooth_upper_bound(&params(beta, c, 1.0, 25.5)).unwrap();
    assert!(b < a);
    assert!(a <= beta.exp() * b);
}

#[test]
fn envelope_regimes() {
    // x = β/c at the switch point 2/(c+1): both branches give c + 1.
    let c = 3.0;
    let beta = c * 2.0 / (c + 1.0);
    assert!((g_envelope(beta, c).unwrap() - (c + 1.0)).abs() < 1e-12);
    assert_eq!(g_envelope(10.0, 4.0).unwrap(), 5.0);
    assert!(g_envelope(0.0, 4.0).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn matches_candidate_scan(beta in 0.02f64..3.0, c in 0.5f64..6.0, rs in 0.0f64..20.0, d_hat in 0.0f64..60.0) {
        let p = params(beta, c, rs, d_hat);
        let s = smooth_upper_bound(&p).unwrap();
        let want = brute_force_bound(&p);
        prop_assert!((s - want).abs() <= 1e-9 * want.max(1.0), "{s} vs {want}");
    }

    #[test]
    fn smooth_in_the_estimate(beta in 0.02f64..3.0, c in 1.0f64..5.0, rs in 0.1f64..10.0, d_hat in 0.0f64..40.0) {
        let s = smooth_upper_bound(&params(beta, c, rs, d_hat)).unwrap();
        let steps = 40;
        for i in 0..=steps {
            let other = (d_hat - c + 2.0 * c * i as f64 / steps as f64).max(0.0);
            let s2 = smooth_upper_bound(&params(beta, c, rs, other)).unwrap();
            prop_assert!(s <= beta.exp() * s2 * (1.0 + 1e-12), "S({d_hat}) = {s}, S({other}) = {s2}");
        }
    }

    #[test]
    fn below_envelope(beta in 0.01f64..5.0, c in 0.5f64..8.0, rs in 0.0f64..10.0, d_hat in 0.0f64..80.0) {
        let s = smooth_upper_bound(&params(beta, c, rs, d_hat)).unwrap();
        let env = ((beta / c) * d_hat).exp() * g_envelope(beta, c).unwrap() * rs;
        prop_assert!(s <= env * (1.0 + 1e-12) + 1e-12);
    }

    #[test]
    fn nondecreasing_up_to_the_peak(beta in 0.02f64..1.0, c in 1.0f64..5.0, u in 0.0f64..1.0, v in 0.0f64..1.0) {
        // Below the peak x₀ the best integer candidate stays fixed, so only
        // the e^{(β/c)d̂} factor moves.
        let peak = c / beta - (c + 1.0) / 2.0;
        prop_assume!(peak >= 1.0);
        let top = peak.floor() - 1.0;
        let (lo, hi) = (u.min(v) * top.max(0.0), u.max(v) * top.max(0.0));
        let a = smooth_upper_bound(&params(beta, c, 1.0, lo)).unwrap();
        let b = smooth_upper_bound(&params(beta, c, 1.0, hi)).unwrap();
        prop_assert!(b >= a * (1.0 - 1e-12));
    }

    #[test]
    fn nondecreasing_between_integers(beta in 0.02f64..3.0, c in 1.0f64..5.0, m in 0u32..40, u in 0.0f64..1.0, v in 0.0f64..1.0) {
        let (lo, hi) = (m as f64 + 0.01 + 0.98 * u.min(v), m as f64 + 0.01 + 0.98 * u.max(v));
        let a = smooth_upper_bound(&params(beta, c, 1.0, lo)).unwrap();
        let b = smooth_upper_bound(&params(beta, c, 1.0, hi)).unwrap();
        prop_assert!(b >= a * (1.0 - 1e-12));
    }
}
