#![allow(dead_code)]

use escrit_core::canon::graph_from_mask;
use escrit_core::Graph;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Graphs on `lo..=hi` vertices with an arbitrary edge set.
pub fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, edges).unwrap()
        })
    })
}

/// Seeded G(n, p) graphs with `n` drawn from `sizes`.
pub fn random_graphs(seed: u64, count: usize, sizes: &[usize], p: f64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = sizes[rng.random_range(0..sizes.len())];
            let mut mask = 0u64;
            for k in 0..n * (n - 1) / 2 {
                if rng.random_bool(p) {
                    mask |= 1 << k;
                }
            }
            graph_from_mask(n, mask)
        })
        .collect()
}

/// Brute-force cut vertices: deleting them adds a component.
pub fn brute_cut_vertices(g: &Graph) -> Vec<usize> {
    let base = g.components().len();
    (0..g.n())
        .filter(|&v| {
            let keep: Vec<usize> = (0..g.n()).filter(|&u| u != v).collect();
            let mut idx = vec![usize::MAX; g.n()];
            for (i, &u) in keep.iter().enumerate() {
                idx[u] = i;
            }
            let pairs = g
                .edges()
                .iter()
                .filter(|e| !e.contains(v))
                .map(|e| (idx[e.u()], idx[e.v()]));
            let h = Graph::from_edge_list(keep.len(), pairs).unwrap();
            h.components().len() > base
        })
        .collect()
}

/// Every simple cycle as a sorted edge list, by brute force over edge
/// subsets: connected, all degrees 2.
pub fn brute_cycles(g: &Graph) -> Vec<Vec<escrit_core::Edge>> {
    let m = g.m();
    let mut out = Vec::new();
    for mask in 1u64..1 << m {
        let edges: Vec<_> = (0..m)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| g.edges()[i])
            .collect();
        if edges.len() < 3 {
            continue;
        }
        let mut deg = vec![0; g.n()];
        for e in &edges {
            deg[e.u()] += 1;
            deg[e.v()] += 1;
        }
        if deg.iter().any(|&d| d != 0 && d != 2) {
            continue;
        }
        let h = Graph::from_edge_list(g.n(), edges.iter().map(|e| (e.u(), e.v()))).unwrap();
        let nontrivial = h.components().iter().filter(|c| c.len() > 1).count();
        if nontrivial == 1 {
            out.push(edges);
        }
    }
    out.sort();
    out
}

/// Brute-force chromatic number by trying every colouring.
pub fn brute_chromatic(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    (1..=n)
        .find(|&k| {
            let total = (k as u64).pow(n as u32);
            (0..total).any(|mut code| {
                let mut col = vec![0; n];
                for c in col.iter_mut() {
                    *c = code % k as u64;
                    code /= k as u64;
                }
                g.edges().iter().all(|e| col[e.u()] != col[e.v()])
            })
        })
        .unwrap()
}
