//! Canonical labelling and labelled graph enumeration.
//!
//! The canonical form of a graph is the lexicographically least graph6
//! string over all vertex orders. Strings of equal `n` share their size
//! prefix and pack the upper triangle column by column, so the least string
//! is the least bit vector `(0,1), (0,2), (1,2), (0,3), ...`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{Edge, Graph};
use crate::graph6::to_graph6;

/// Largest `n` accepted by [`canonical_form`]; 45 bits fit a `u64`.
pub const MAX_CANON_VERTICES: usize = 10;
/// Default bound of [`enumerate_labeled_graphs`].
pub const DEFAULT_ENUMERATION_VERTICES: usize = 7;
/// Hard bound of [`enumerate_labeled_graphs_with`].
pub const MAX_ENUMERATION_VERTICES: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("graph has {n} vertices; at most {max} are supported")]
    TooManyVertices { n: usize, max: usize },
}

/// Vertex order realising the canonical form: `order[i]` is the vertex
/// placed at position `i`.
pub fn canonical_order(g: &Graph) -> Result<Vec<usize>, CanonError> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(CanonError::TooManyVertices {
            n,
            max: MAX_CANON_VERTICES,
        });
    }
    let mut adj = vec![0u16; n];
    for e in g.edges() {
        adj[e.u()] |= 1 << e.v();
        adj[e.v()] |= 1 << e.u();
    }
    let mut search = Search {
        n,
        adj,
        total_bits: n * n.saturating_sub(1) / 2,
        best: None,
        order: Vec::with_capacity(n),
    };
    search.descend(0, 0, 0);
    Ok(search.best.map(|(_, o)| o).unwrap_or_default())
}

pub fn canonical_form(g: &Graph) -> Result<String, CanonError> {
    Ok(to_graph6(&canonical_graph(g)?))
}

/// `g` relabelled into its canonical order.
pub fn canonical_graph(g: &Graph) -> Result<Graph, CanonError> {
    let order = canonical_order(g)?;
    let mut perm = vec![0; g.n()];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    Ok(g.relabel(&perm))
}

struct Search {
    n: usize,
    adj: Vec<u16>,
    total_bits: usize,
    best: Option<(u64, Vec<usize>)>,
    order: Vec<usize>,
}

impl Search {
    /// Column bits of `v` against the placed vertices, first placed first.
    fn column(&self, v: usize) -> u64 {
        self.order
            .iter()
            .fold(0, |acc, &u| (acc << 1) | u64::from(self.adj[v] >> u & 1))
    }

    fn descend(&mut self, used: u16, prefix: u64, prefix_len: usize) {
        let depth = self.order.len();
        if depth == self.n {
            if self.best.as_ref().is_none_or(|(b, _)| prefix < *b) {
                self.best = Some((prefix, self.order.clone()));
            }
            return;
        }
        // Only vertices with the least column can start the least completion.
        let free = (0..self.n).filter(|&v| used >> v & 1 == 0);
        let min_col = free
            .clone()
            .map(|v| self.column(v))
            .min()
            .expect("free vertex");
        let mut kept: Vec<usize> = Vec::new();
        for v in free.filter(|&v| self.column(v) == min_col) {
            // Swapping twins fixes every placed vertex, so one twin suffices.
            let twin = kept
                .iter()
                .any(|&u| self.adj[u] & !(1 << v) == self.adj[v] & !(1 << u));
            if !twin {
                kept.push(v);
            }
        }
        let next = (prefix << depth) | min_col;
        let next_len = prefix_len + depth;
        if let Some((b, _)) = &self.best {
            if next > b >> (self.total_bits - next_len) {
                return;
            }
        }
        for v in kept {
            self.order.push(v);
            self.descend(used | 1 << v, next, next_len);
            self.order.pop();
        }
    }
}

/// Number of vertex pairs, i.e. bits in a labelled graph mask.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Vertex pairs in sorted order. Bit `k` of a mask selects pair `k`.
pub fn sorted_pairs(n: usize) -> Vec<Edge> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| Edge::new(u, v)))
        .collect()
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges = sorted_pairs(n)
        .into_iter()
        .enumerate()
        .filter(|&(k, _)| mask >> k & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_sorted_edges(n, edges)
}

/// All labelled graphs on `n` vertices in edge-bitmask order.
#[derive(Clone, Debug)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<Edge>,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    /// The masks in `start..end`, clipped to the valid range.
    pub fn masks(n: usize, start: u64, end: u64) -> Result<Self, CanonError> {
        if n > MAX_ENUMERATION_VERTICES {
            return Err(CanonError::TooManyVertices {
                n,
                max: MAX_ENUMERATION_VERTICES,
            });
        }
        let total = mask_count(n);
        Ok(LabeledGraphs {
            n,
            pairs: sorted_pairs(n),
            next: start.min(total),
            end: end.min(total),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// `2^(n(n-1)/2)`.
pub fn mask_count(n: usize) -> u64 {
    1u64 << pair_count(n)
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let edges = self
            .pairs
            .iter()
            .enumerate()
            .filter(|&(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Some(Graph::from_sorted_edges(self.n, edges))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = usize::try_from(self.end - self.next).ok();
        (left.unwrap_or(usize::MAX), left)
    }
}

pub fn enumerate_labeled_graphs(n: usize) -> Result<LabeledGraphs, CanonError> {
    enumerate_labeled_graphs_with(n, DEFAULT_ENUMERATION_VERTICES)
}

/// As [`enumerate_labeled_graphs`] with a caller-chosen bound, itself
/// capped at [`MAX_ENUMERATION_VERTICES`].
pub fn enumerate_labeled_graphs_with(n: usize, bound: usize) -> Result<LabeledGraphs, CanonError> {
    let max = bound.min(MAX_ENUMERATION_VERTICES);
    if n > max {
        return Err(CanonError::TooManyVertices { n, max });
    }
    LabeledGraphs::masks(n, 0, u64::MAX)
}
