mod common;

use common::{brute_cycles, random_graphs};
use escrit_core::canon::enumerate_labeled_graphs;
use escrit_core::cycles::{
    all_odd_cycles_share_edge, count_odd_cycles, edge_on_odd_cycle, enumerate_cycles,
    pairwise_intersection_property, Cycle, DEFAULT_CYCLE_LIMIT,
};
use escrit_core::{Edge, Graph};

fn sorted_cycles(g: &Graph) -> Vec<Vec<Edge>> {
    let mut c: Vec<Vec<Edge>> = enumerate_cycles(g, DEFAULT_CYCLE_LIMIT)
        .unwrap()
        .cycles
        .iter()
        .map(Cycle::sorted_edges)
        .collect();
    c.sort();
    c
}

fn brute_odd(g: &Graph) -> Vec<Vec<Edge>> {
    brute_cycles(g)
        .into_iter()
        .filter(|c| c.len() % 2 == 1)
        .collect()
}

fn check(g: &Graph) {
    let brute = brute_cycles(g);
    assert_eq!(sorted_cycles(g), brute, "{g:?}");
    let odd = brute_odd(g);
    let census = count_odd_cycles(g, 5);
    assert_eq!(census.count, odd.len().min(5));
    assert_eq!(census.saturated, odd.len() >= 5);

    let vertex_sets: Vec<Vec<usize>> = odd
        .iter()
        .map(|c| {
            let mut v: Vec<usize> = c.iter().flat_map(|e| [e.u(), e.v()]).collect();
            v.sort();
            v.dedup();
            v
        })
        .collect();
    let pairwise = (0..odd.len()).all(|i| {
        (i + 1..odd.len()).all(|j| {
            vertex_sets[i]
                .iter()
                .filter(|v| vertex_sets[j].contains(v))
                .count()
                > 1
        })
    });
    assert_eq!(
        pairwise_intersection_property(g, DEFAULT_CYCLE_LIMIT),
        Ok(pairwise)
    );

    let share = g.edges().iter().any(|e| odd.iter().all(|c| c.contains(e)));
    assert_eq!(
        all_odd_cycles_share_edge(g, DEFAULT_CYCLE_LIMIT),
        Ok(share || odd.is_empty())
    );

    for &e in g.edges() {
        let on = odd.iter().any(|c| c.contains(&e));
        assert_eq!(edge_on_odd_cycle(g, e), Ok(on));
    }
}

#[test]
fn every_graph_up_to_five_vertices() {
    for n in 0..=5 {
        for g in enumerate_labeled_graphs(n).unwrap() {
            check(&g);
        }
    }
}

#[test]
fn random_graphs_up_to_eight_vertices() {
    for g in random_graphs(7, 300, &[6, 7, 8], 0.3) {
        if g.m() <= 16 {
            check(&g);
        }
    }
}

#[test]
fn enumeration_is_deterministic_and_canonical() {
    let g = common::random_graphs(3, 1, &[7], 0.6).remove(0);
    let a = enumerate_cycles(&g, DEFAULT_CYCLE_LIMIT).unwrap();
    let b = enumerate_cycles(&g, DEFAULT_CYCLE_LIMIT).unwrap();
    assert_eq!(a, b);
    for c in &a.cycles {
        assert_eq!(
            Cycle::from_vertices(c.vertices().to_vec()).as_ref(),
            Some(c)
        );
        assert!(c.is_cycle_of(&g));
    }
}
