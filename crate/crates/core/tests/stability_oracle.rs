mod common;

use common::{brute_chromatic, random_graphs};
use escrit_core::canon::enumerate_labeled_graphs;
use escrit_core::stability::{
    chromatic_number, edge_stability_exhaustive, edge_stability_number, frustration_at_most_two,
    Frustration, StabilityLimits,
};

#[test]
fn chromatic_number_matches_brute_force() {
    for n in 0..=5 {
        for g in enumerate_labeled_graphs(n).unwrap() {
            assert_eq!(chromatic_number(&g), Ok(brute_chromatic(&g)), "{g:?}");
        }
    }
    for g in random_graphs(11, 200, &[6, 7], 0.5) {
        assert_eq!(chromatic_number(&g), Ok(brute_chromatic(&g)), "{g:?}");
    }
}

#[test]
fn routes_agree_up_to_five_vertices() {
    let limits = StabilityLimits::default();
    for n in 0..=5 {
        for g in enumerate_labeled_graphs(n).unwrap() {
            let fast = edge_stability_number(&g);
            match chromatic_number(&g).unwrap() {
                // The reference route has no closed form for bipartite graphs.
                2 => assert_eq!(fast.unwrap().es, g.m()),
                _ => assert_eq!(fast, edge_stability_exhaustive(&g, &limits), "{g:?}"),
            }
        }
    }
}

#[test]
fn frustration_witness_is_a_deletion_set() {
    for g in random_graphs(5, 500, &[7, 8, 9], 0.35) {
        match frustration_at_most_two(&g) {
            Frustration::Zero => assert!(g.is_bipartite()),
            Frustration::One(e) => assert!(g.without_edge(e).is_bipartite()),
            Frustration::Two(e, f) => {
                assert!(e < f);
                assert!(g.without_edges(&[e, f]).is_bipartite());
            }
            Frustration::MoreThanTwo => {}
        }
    }
}
