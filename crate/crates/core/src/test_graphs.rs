//! Small named graphs shared by the unit tests.

use alloc::vec::Vec;

use crate::graph::Graph;

pub fn cycle_graph(n: usize) -> Graph {
    Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn path_graph(edges: usize) -> Graph {
    Graph::from_edge_list(edges + 1, (0..edges).map(|i| (i, i + 1))).unwrap()
}

pub fn complete_graph(n: usize) -> Graph {
    let pairs: Vec<_> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    Graph::from_edge_list(n, pairs).unwrap()
}

/// C3 + C3 on vertices {0,1,2} and {3,4,5}.
pub fn disjoint_triangles() -> Graph {
    Graph::from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap()
}

/// Two triangles sharing vertex 0.
pub fn bowtie() -> Graph {
    Graph::from_edge_list(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap()
}

/// Hubs 0 and 1 joined by internally disjoint paths of the given lengths.
pub fn theta(lengths: &[usize]) -> Graph {
    let mut pairs = Vec::new();
    let mut next = 2;
    for &len in lengths {
        let mut prev = 0;
        for _ in 1..len {
            pairs.push((prev, next));
            prev = next;
            next += 1;
        }
        pairs.push((prev, 1));
    }
    Graph::from_edge_list(next, pairs).unwrap()
}
