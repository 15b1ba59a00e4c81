//! Randomized invariants over seeded connected graphs.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use locdom::certify::{code_vector, is_distance_k_dominating, is_distance_k_resolving, LandmarkSet};
use locdom::families::random_connected_graph;
use locdom::graph::Graph;
use locdom::metric::TruncatedMetric;

prop_compose! {
    fn arb_graph()(n in 2usize..10, p in 0.15f64..0.9, seed in any::<u64>()) -> Graph {
        random_connected_graph(n, p, &mut ChaCha8Rng::seed_from_u64(seed))
    }
}

proptest! {
    #[test]
    fn truncated_metric_is_symmetric_and_nested(g in arb_graph(), k in 1usize..5) {
        let coarse = TruncatedMetric::new(&g, k);
        for kp in 1..=k {
            let fine = TruncatedMetric::new(&g, kp);
            for u in 0..g.n() {
                for v in 0..g.n() {
                    prop_assert_eq!(coarse.d_k(u, v), coarse.d_k(v, u));
                    // a lower truncation is the pointwise min with k'+1
                    prop_assert_eq!(fine.d_k(u, v), coarse.d_k(u, v).min(kp + 1));
                }
            }
        }
    }

    #[test]
    fn predicates_are_superset_monotone(g in arb_graph(), k in 1usize..4, mask in any::<u32>(), extra in any::<u32>()) {
        let metric = TruncatedMetric::new(&g, k);
        let small = LandmarkSet::new((0..g.n()).filter(|v| mask >> v & 1 == 1));
        let big = LandmarkSet::new((0..g.n()).filter(|v| (mask | extra) >> v & 1 == 1));
        if is_distance_k_dominating(&metric, &small) {
            prop_assert!(is_distance_k_dominating(&metric, &big));
        }
        if is_distance_k_resolving(&metric, &small) {
            prop_assert!(is_distance_k_resolving(&metric, &big));
        }
    }

    #[test]
    fn edge_deletion_never_shrinks_distances(g in arb_graph(), k in 1usize..4, pick in any::<u64>()) {
        prop_assume!(g.edge_count() > 0);
        let &(u, v) = &g.edges()[(pick % g.edge_count() as u64) as usize];
        let h = g.delete_edge(u, v).unwrap();
        let before = TruncatedMetric::new(&g, k);
        let after = TruncatedMetric::new(&h, k);
        for x in 0..g.n() {
            for y in 0..g.n() {
                prop_assert!(after.d_k(x, y) >= before.d_k(x, y));
            }
        }
    }

    #[test]
    fn resolving_set_leaves_at_most_one_far_vertex(g in arb_graph(), k in 1usize..4, mask in any::<u32>()) {
        let metric = TruncatedMetric::new(&g, k);
        let s = LandmarkSet::new((0..g.n()).filter(|v| mask >> v & 1 == 1));
        prop_assume!(is_distance_k_resolving(&metric, &s));
        let far = (0..g.n())
            .filter(|&v| code_vector(&metric, &s, v).is_all_truncated(k))
            .count();
        prop_assert!(far <= 1);
    }
}
