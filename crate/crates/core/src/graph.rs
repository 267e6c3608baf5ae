//! Simple undirected graphs on dense vertex labels `0..n`.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cycles::Cycle;

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "(usize, usize)", from = "(usize, usize)")]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    #[inline]
    pub fn u(self) -> usize {
        self.0
    }

    #[inline]
    pub fn v(self) -> usize {
        self.1
    }

    #[inline]
    pub fn contains(self, x: usize) -> bool {
        self.0 == x || self.1 == x
    }

    /// The endpoint opposite to `x`. `x` must be an endpoint.
    #[inline]
    pub fn other(self, x: usize) -> usize {
        if self.0 == x {
            self.1
        } else {
            self.0
        }
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

impl From<Edge> for (usize, usize) {
    fn from(e: Edge) -> Self {
        (e.0, e.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
}

/// A simple undirected graph.
///
/// Edges are kept sorted and deduplicated, and adjacency lists are sorted,
/// so every traversal in this crate visits vertices and edges in ascending
/// order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = GraphError;

    fn try_from(raw: RawGraph) -> Result<Self, Self::Error> {
        Graph::from_edge_list(raw.n, raw.edges.into_iter().map(|e| (e.0, e.1)))
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph {
            n: g.n,
            edges: g.edges,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, [", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("])")
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from vertex pairs. Duplicate pairs (in either
    /// orientation) collapse to one edge.
    pub fn from_edge_list<I>(n: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut edges = Vec::new();
        for (a, b) in pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop { vertex: a });
            }
            edges.push(Edge::new(a, b));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_sorted_edges(n, edges))
    }

    /// `edges` must be sorted, unique, loop-free and in range.
    pub(crate) fn from_sorted_edges(n: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut adj = vec![Vec::new(); n];
        // Pushing in sorted edge order leaves every list sorted: for a fixed
        // vertex x, neighbours below x arrive as (w, x) ordered by w, before
        // any (x, w) with w > x.
        for e in &edges {
            adj[e.0].push(e.1);
            adj[e.1].push(e.0);
        }
        Graph { n, edges, adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Position of `e` in the sorted edge list.
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(Vec::is_empty)
    }

    /// The spanning subgraph obtained by deleting `removed`. Pairs that are
    /// not edges are ignored.
    pub fn without_edges(&self, removed: &[Edge]) -> Graph {
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|e| !removed.contains(e))
            .collect();
        Self::from_sorted_edges(self.n, edges)
    }

    pub fn without_edge(&self, e: Edge) -> Graph {
        self.without_edges(&[e])
    }

    /// Relabels vertex `v` to `perm[v]`. `perm` must be a permutation of
    /// `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| Edge::new(perm[e.0], perm[e.1]))
            .collect();
        edges.sort_unstable();
        Self::from_sorted_edges(self.n, edges)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Connected in the usual sense; the graph on zero vertices is not.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// Number of edges on a shortest `u`–`v` path, `None` if unreachable.
    pub fn shortest_distance(&self, u: usize, v: usize) -> Option<usize> {
        assert!(u < self.n && v < self.n, "vertex out of range");
        if u == v {
            return Some(0);
        }
        let mut dist = vec![usize::MAX; self.n];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for &w in &self.adj[x] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[x] + 1;
                    if w == v {
                        return Some(dist[w]);
                    }
                    queue.push_back(w);
                }
            }
        }
        None
    }

    pub fn is_bipartite(&self) -> bool {
        two_color(self, &[]).is_ok()
    }

    /// A proper 2-colouring, or a simple odd cycle proving none exists.
    pub fn bipartition_or_odd_cycle(&self) -> Parity {
        match two_color(self, &[]) {
            Ok(side) => Parity::Bipartite(Bipartition { side }),
            Err(cycle) => Parity::OddCycle(Cycle::from_closed_walk(cycle)),
        }
    }
}

/// A 2-sided vertex assignment; every edge joins side 0 to side 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub side: Vec<u8>,
}

impl Bipartition {
    pub fn is_proper_for(&self, g: &Graph) -> bool {
        self.side.len() == g.n() && g.edges().iter().all(|e| self.side[e.0] != self.side[e.1])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parity {
    Bipartite(Bipartition),
    OddCycle(Cycle),
}

/// BFS 2-colouring of `g` minus `removed`.
///
/// On failure returns the vertices of a simple odd cycle in traversal order:
/// the conflicting same-level edge closed through the two tree paths up to
/// their lowest common ancestor.
pub(crate) fn two_color(g: &Graph, removed: &[Edge]) -> Result<Vec<u8>, Vec<usize>> {
    const UNSEEN: usize = usize::MAX;
    let n = g.n;
    let mut depth = vec![UNSEEN; n];
    let mut parent = vec![UNSEEN; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if depth[s] != UNSEEN {
            continue;
        }
        depth[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &w in &g.adj[v] {
                if !removed.is_empty() && removed.contains(&Edge::new(v, w)) {
                    continue;
                }
                if depth[w] == UNSEEN {
                    depth[w] = depth[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if depth[w] == depth[v] {
                    return Err(close_odd_cycle(&parent, v, w));
                }
            }
        }
    }
    Ok(depth.into_iter().map(|d| (d & 1) as u8).collect())
}

fn close_odd_cycle(parent: &[usize], a: usize, b: usize) -> Vec<usize> {
    let mut left = vec![a];
    let mut right = vec![b];
    let (mut x, mut y) = (a, b);
    while x != y {
        x = parent[x];
        y = parent[y];
        left.push(x);
        right.push(y);
    }
    // left ends at the common ancestor; right repeats it.
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_graphs::*;

    #[test]
    fn edge_list_construction() {
        let t = Graph::from_edge_list(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(t.m(), 3);
        assert_eq!(t, cycle_graph(3));

        let k2 = Graph::from_edge_list(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(k2.m(), 1);
        assert_eq!(k2.edges(), &[Edge::new(0, 1)]);

        assert_eq!(
            Graph::from_edge_list(1, [(0, 0)]),
            Err(GraphError::SelfLoop { vertex: 0 })
        );
        assert_eq!(
            Graph::from_edge_list(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn adjacency_lists_are_sorted() {
        let g = Graph::from_edge_list(5, [(4, 0), (2, 0), (3, 1), (0, 1), (3, 2)]).unwrap();
        for v in 0..g.n() {
            assert!(g.neighbors(v).windows(2).all(|w| w[0] < w[1]));
        }
        assert_eq!(g.neighbors(0), &[1, 2, 4]);
    }

    #[test]
    fn bipartition_of_even_cycle() {
        match cycle_graph(4).bipartition_or_odd_cycle() {
            Parity::Bipartite(b) => assert_eq!(b.side, vec![0, 1, 0, 1]),
            Parity::OddCycle(c) => panic!("C4 reported odd cycle {c:?}"),
        }
    }

    #[test]
    fn odd_cycle_witnesses() {
        let c5 = cycle_graph(5);
        match c5.bipartition_or_odd_cycle() {
            Parity::OddCycle(c) => {
                assert_eq!(c.len(), 5);
                assert!(c.is_cycle_of(&c5));
            }
            Parity::Bipartite(_) => panic!("C5 is not bipartite"),
        }
        let k4 = complete_graph(4);
        match k4.bipartition_or_odd_cycle() {
            Parity::OddCycle(c) => {
                assert_eq!(c.len(), 3);
                assert!(c.is_cycle_of(&k4));
            }
            Parity::Bipartite(_) => panic!("K4 is not bipartite"),
        }
    }

    #[test]
    fn distances() {
        let c6 = cycle_graph(6);
        assert_eq!(c6.shortest_distance(0, 3), Some(3));
        assert_eq!(c6.shortest_distance(4, 4), Some(0));
        let two = disjoint_triangles();
        assert_eq!(two.shortest_distance(0, 4), None);
        assert_eq!(two.shortest_distance(0, 2), Some(1));
    }

    #[test]
    fn components_and_isolated() {
        let mut pairs = vec![(0, 1)];
        pairs.push((2, 3));
        let g = Graph::from_edge_list(5, pairs).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2, 3], vec![4]]);
        assert!(g.has_isolated_vertex());
        assert!(!g.is_connected());
        assert!(!Graph::empty(0).is_connected());
        assert!(Graph::empty(1).is_connected());
    }

    #[test]
    fn deletion_and_relabel() {
        let c4 = cycle_graph(4);
        let p = c4.without_edge(Edge::new(0, 3));
        assert_eq!(p.m(), 3);
        assert!(!p.has_edge(0, 3));
        let r = c4.relabel(&[0, 2, 1, 3]);
        assert!(r.has_edge(0, 2) && r.has_edge(2, 1) && r.has_edge(1, 3) && r.has_edge(3, 0));
    }

    #[test]
    fn json_shape() {
        let g = cycle_graph(3);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"n":3,"edges":[[0,1],[0,2],[1,2]]}"#);
        let back: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[1,1]]}"#).is_err());
    }
}
