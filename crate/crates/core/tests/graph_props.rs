mod common;

use common::{arb_graph, brute_cut_vertices};
use escrit_core::cycles::{enumerate_cycles, DEFAULT_CYCLE_LIMIT};
use escrit_core::{
    blocks_and_cut_vertices, ear_decomposition, is_nonseparable, parse_graph6, to_graph6, Edge,
    Graph, Parity, Subgraph,
};
use proptest::prelude::*;

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(0, 32)) {
        let s = to_graph6(&g);
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edge_list_json_round_trip(g in arb_graph(0, 12)) {
        let json = serde_json::to_string(&g).unwrap();
        let back: Graph = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn bipartition_or_odd_cycle_is_a_certificate(g in arb_graph(1, 12)) {
        match g.bipartition_or_odd_cycle() {
            Parity::Bipartite(b) => prop_assert!(b.is_proper_for(&g)),
            Parity::OddCycle(c) => {
                prop_assert!(c.is_odd());
                prop_assert!(c.is_cycle_of(&g));
            }
        }
    }

    #[test]
    fn cut_vertices_match_brute_force(g in arb_graph(1, 10)) {
        let s = blocks_and_cut_vertices(&g);
        prop_assert_eq!(&s.cut_vertices, &brute_cut_vertices(&g));
        // Blocks partition the edge set.
        let mut all: Vec<Edge> = s.blocks.iter().flatten().copied().collect();
        all.sort();
        prop_assert_eq!(all, g.edges().to_vec());
    }

    #[test]
    fn ears_rebuild_the_graph(g in arb_graph(3, 9)) {
        prop_assume!(is_nonseparable(&g) && g.m() >= 3);
        let cycles = enumerate_cycles(&g, DEFAULT_CYCLE_LIMIT).unwrap().cycles;
        let seed = Subgraph::from_edges(cycles[0].edges());
        prop_assume!(seed.edges().len() < g.m());
        let ears = ear_decomposition(&g, &seed).unwrap();
        let mut host = seed.clone();
        for ear in &ears {
            prop_assert!(ear.is_open_ear_of(&g, &host));
            host.absorb(ear);
        }
        prop_assert_eq!(host.edges(), g.edges());
        prop_assert_eq!(host.vertices().len(), g.n());
        // Whitney: a 2-connected graph has m - n + 1 - 1 ears over a cycle.
        prop_assert_eq!(ears.len(), g.m() - g.n());
    }
}

#[test]
fn graph6_identity_on_every_labelled_graph_up_to_six() {
    for n in 0..=6 {
        for g in escrit_core::enumerate_labeled_graphs(n).unwrap() {
            let s = to_graph6(&g);
            let back = parse_graph6(&s).unwrap();
            assert_eq!(to_graph6(&back), s);
            assert_eq!(back, g);
        }
    }
}
