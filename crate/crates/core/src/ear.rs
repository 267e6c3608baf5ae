//! Open ears and ear decompositions of nonseparable graphs.
//!
//! An ear of a subgraph `F` of `G` is a path of `G` with at least one edge
//! whose endpoints lie in `F` and whose internal vertices do not. It is open
//! when the endpoints differ. Every nontrivial proper subgraph of a
//! nonseparable graph has an open ear, so starting from a nonseparable seed
//! the whole graph can be grown ear by ear.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::blocks::is_nonseparable;
use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EarError {
    #[error("subgraph vertex {vertex} is outside the graph")]
    VertexOutOfRange { vertex: usize },
    #[error("subgraph edge {edge} is not an edge of the graph")]
    ForeignEdge { edge: Edge },
    #[error("subgraph edge {edge} has an endpoint outside the subgraph's vertex set")]
    DanglingEdge { edge: Edge },
    #[error("subgraph has no edges")]
    TrivialSubgraph,
    #[error("subgraph is the whole graph")]
    NotProper,
    #[error("graph is separable")]
    SeparableGraph,
    #[error("seed subgraph is separable")]
    SeparableSeed,
}

/// A subgraph given by a vertex set and an edge set, both sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subgraph {
    vertices: Vec<usize>,
    edges: Vec<Edge>,
}

impl Subgraph {
    /// The subgraph spanned by `edges`: its vertices are their endpoints.
    pub fn from_edges<I: IntoIterator<Item = Edge>>(edges: I) -> Subgraph {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        let mut vertices: Vec<usize> = edges.iter().flat_map(|e| [e.u(), e.v()]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        Subgraph { vertices, edges }
    }

    pub fn new(mut vertices: Vec<usize>, edges: Vec<Edge>) -> Result<Subgraph, EarError> {
        vertices.sort_unstable();
        vertices.dedup();
        let sub = Subgraph::from_edges(edges);
        if let Some(&edge) = sub.edges.iter().find(|e| {
            vertices.binary_search(&e.u()).is_err() || vertices.binary_search(&e.v()).is_err()
        }) {
            return Err(EarError::DanglingEdge { edge });
        }
        Ok(Subgraph {
            vertices,
            edges: sub.edges,
        })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Adds the vertices and edges of `ear`.
    pub fn absorb(&mut self, ear: &Ear) {
        for &v in &ear.path {
            if let Err(pos) = self.vertices.binary_search(&v) {
                self.vertices.insert(pos, v);
            }
        }
        for e in ear.edges() {
            if let Err(pos) = self.edges.binary_search(&e) {
                self.edges.insert(pos, e);
            }
        }
    }

    fn check_within(&self, g: &Graph) -> Result<(), EarError> {
        if let Some(&vertex) = self.vertices.iter().find(|&&v| v >= g.n()) {
            return Err(EarError::VertexOutOfRange { vertex });
        }
        if let Some(&edge) = self.edges.iter().find(|&&e| !g.contains_edge(e)) {
            return Err(EarError::ForeignEdge { edge });
        }
        Ok(())
    }

    /// The subgraph as a standalone graph, relabelled to `0..|V|` in
    /// ascending vertex order.
    pub fn to_graph(&self) -> Graph {
        let index = |v: usize| {
            self.vertices
                .binary_search(&v)
                .expect("edge endpoint in vertex set")
        };
        Graph::from_edge_list(
            self.vertices.len(),
            self.edges.iter().map(|e| (index(e.u()), index(e.v()))),
        )
        .expect("relabelled subgraph is simple")
    }
}

/// A path `p0, ..., pm` with `m >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ear {
    pub path: Vec<usize>,
}

impl Ear {
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.path.windows(2).map(|w| Edge::new(w[0], w[1]))
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.path.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Checks the open-ear conditions against `host` inside `g`.
    pub fn is_open_ear_of(&self, g: &Graph, host: &Subgraph) -> bool {
        let p = &self.path;
        if p.len() < 2 {
            return false;
        }
        let (first, last) = (p[0], p[p.len() - 1]);
        first != last
            && host.contains_vertex(first)
            && host.contains_vertex(last)
            && p[1..p.len() - 1].iter().all(|&v| !host.contains_vertex(v))
            && self
                .edges()
                .all(|e| g.contains_edge(e) && !host.contains_edge(e))
            && {
                let mut vs = p.clone();
                vs.sort_unstable();
                vs.windows(2).all(|w| w[0] != w[1])
            }
    }
}

/// An open ear of `host` in `g`.
///
/// A missing edge with both ends in the host is preferred. Otherwise the
/// smallest edge `xy` leaving the host is extended by a shortest path from
/// `y` back to the host that avoids `x`; nonseparability guarantees one.
pub fn find_open_ear(g: &Graph, host: &Subgraph) -> Result<Ear, EarError> {
    host.check_within(g)?;
    if host.edges.is_empty() {
        return Err(EarError::TrivialSubgraph);
    }
    if host.edges.len() == g.m() && host.vertices.len() == g.n() {
        return Err(EarError::NotProper);
    }
    if !is_nonseparable(g) {
        return Err(EarError::SeparableGraph);
    }
    Ok(open_ear_unchecked(g, host))
}

fn open_ear_unchecked(g: &Graph, host: &Subgraph) -> Ear {
    let in_host: Vec<bool> = (0..g.n()).map(|v| host.contains_vertex(v)).collect();

    if let Some(&chord) = g
        .edges()
        .iter()
        .find(|&&e| in_host[e.u()] && in_host[e.v()] && !host.contains_edge(e))
    {
        return Ear {
            path: vec![chord.u(), chord.v()],
        };
    }

    let leaving = g
        .edges()
        .iter()
        .find(|e| in_host[e.u()] != in_host[e.v()])
        .expect("a proper subgraph of a connected graph has a leaving edge");
    let (x, y) = if in_host[leaving.u()] {
        (leaving.u(), leaving.v())
    } else {
        (leaving.v(), leaving.u())
    };

    // BFS from y through non-host vertices, stopping at the first host
    // vertex other than x.
    const UNSEEN: usize = usize::MAX;
    let mut parent = vec![UNSEEN; g.n()];
    parent[y] = y;
    let mut queue = VecDeque::from([y]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if w == x || parent[w] != UNSEEN {
                continue;
            }
            parent[w] = v;
            if in_host[w] {
                let mut back = vec![w];
                let mut cur = w;
                while cur != y {
                    cur = parent[cur];
                    back.push(cur);
                }
                back.push(x);
                back.reverse();
                return Ear { path: back };
            }
            queue.push_back(w);
        }
    }
    unreachable!("nonseparable graph: y reaches the host avoiding x")
}

/// Ears `Q1, ..., Ql` whose edge sets partition `E(g) \ E(seed)`, each an
/// open ear of the seed plus the previous ears.
pub fn ear_decomposition(g: &Graph, seed: &Subgraph) -> Result<Vec<Ear>, EarError> {
    seed.check_within(g)?;
    if seed.edges.is_empty() {
        return Err(EarError::TrivialSubgraph);
    }
    if !is_nonseparable(&seed.to_graph()) {
        return Err(EarError::SeparableSeed);
    }
    if !is_nonseparable(g) {
        return Err(EarError::SeparableGraph);
    }
    let mut current = seed.clone();
    let mut ears = Vec::new();
    while current.edges.len() < g.m() || current.vertices.len() < g.n() {
        let ear = open_ear_unchecked(g, &current);
        current.absorb(&ear);
        ears.push(ear);
    }
    Ok(ears)
}
