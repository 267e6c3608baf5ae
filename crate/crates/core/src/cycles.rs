//! Simple cycle enumeration and odd-cycle predicates.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::blocks::blocks_and_cut_vertices;
use crate::graph::{Edge, Graph};

/// Default cap on the number of cycles an enumeration may visit.
pub const DEFAULT_CYCLE_LIMIT: usize = 1_000_000;

/// Default odd-cycle census threshold (the "at least five odd cycles" scope).
pub const DEFAULT_ODD_CYCLE_CAP: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("cycle enumeration truncated after {limit} cycles; result indeterminate")]
    Truncated { limit: usize },
    #[error("cycle limit must be at least 1")]
    ZeroLimit,
    #[error("{edge} is not an edge of the graph")]
    NotAnEdge { edge: Edge },
}

/// A simple cycle in canonical form: it starts at its smallest vertex and is
/// oriented so that the second vertex is smaller than the last. This is the
/// lexicographically least of its rotations and reflections.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    /// Canonicalizes a vertex sequence. Returns `None` unless it has at
    /// least three vertices, all distinct.
    pub fn from_vertices(mut vertices: Vec<usize>) -> Option<Cycle> {
        if vertices.len() < 3 {
            return None;
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(Self::canonical(&mut vertices))
    }

    pub(crate) fn from_closed_walk(mut vertices: Vec<usize>) -> Cycle {
        Self::canonical(&mut vertices)
    }

    fn canonical(vertices: &mut Vec<usize>) -> Cycle {
        let start = vertices
            .iter()
            .enumerate()
            .min_by_key(|(_, &v)| v)
            .map(|(i, _)| i)
            .unwrap_or(0);
        vertices.rotate_left(start);
        let len = vertices.len();
        if len > 2 && vertices[1] > vertices[len - 1] {
            vertices[1..].reverse();
        }
        Cycle {
            vertices: core::mem::take(vertices),
        }
    }

    #[inline]
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of edges (equal to the number of vertices).
    #[inline]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// Always false; cycles have at least three vertices.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    #[inline]
    pub fn is_odd(&self) -> bool {
        self.vertices.len() % 2 == 1
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let len = self.vertices.len();
        (0..len).map(move |i| Edge::new(self.vertices[i], self.vertices[(i + 1) % len]))
    }

    pub fn sorted_edges(&self) -> Vec<Edge> {
        let mut e: Vec<Edge> = self.edges().collect();
        e.sort_unstable();
        e
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges().any(|f| f == e)
    }

    /// True if every consecutive pair (cyclically) is an edge of `g`.
    pub fn is_cycle_of(&self, g: &Graph) -> bool {
        self.len() >= 3
            && self.vertices.iter().all(|&v| v < g.n())
            && self.edges().all(|e| g.contains_edge(e))
    }
}

impl Serialize for Cycle {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Cycle", 2)?;
        s.serialize_field("vertices", &self.vertices)?;
        s.serialize_field("odd", &self.is_odd())?;
        s.end()
    }
}

/// Visits every simple cycle once, as a vertex path starting at its
/// smallest vertex with `path[1] < path[last]`.
///
/// Roots are taken in increasing order; from each root the search only
/// uses larger vertices and explores neighbours in sorted order.
pub(crate) fn visit_cycles<F>(g: &Graph, mut f: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = g.n();
    let mut on_path = vec![false; n];
    let mut path: Vec<usize> = Vec::with_capacity(n);
    let mut cursor: Vec<usize> = Vec::with_capacity(n);
    for root in 0..n {
        if g.degree(root) < 2 {
            continue;
        }
        path.push(root);
        cursor.push(0);
        on_path[root] = true;
        while let Some(&top) = path.last() {
            let depth = path.len() - 1;
            let nbrs = g.neighbors(top);
            if cursor[depth] == nbrs.len() {
                on_path[top] = false;
                path.pop();
                cursor.pop();
                continue;
            }
            let w = nbrs[cursor[depth]];
            cursor[depth] += 1;
            if w == root {
                if path.len() >= 3 && path[1] < top {
                    f(&path)?;
                }
            } else if w > root && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                cursor.push(0);
            }
        }
    }
    ControlFlow::Continue(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleEnumeration {
    pub cycles: Vec<Cycle>,
    /// More cycles exist beyond the ones returned.
    pub truncated: bool,
}

/// All simple cycles of `g` in canonical form, stopping after `limit`.
pub fn enumerate_cycles(g: &Graph, limit: usize) -> Result<CycleEnumeration, CycleError> {
    if limit == 0 {
        return Err(CycleError::ZeroLimit);
    }
    let mut cycles = Vec::new();
    let mut truncated = false;
    let _ = visit_cycles(g, |p| {
        if cycles.len() == limit {
            truncated = true;
            return ControlFlow::Break(());
        }
        cycles.push(Cycle {
            vertices: p.to_vec(),
        });
        ControlFlow::Continue(())
    });
    Ok(CycleEnumeration { cycles, truncated })
}

/// Odd-cycle count saturating at `cap`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct OddCycleCensus {
    pub count: usize,
    pub cap: usize,
    /// At least `cap` odd cycles exist.
    pub saturated: bool,
}

impl OddCycleCensus {
    pub fn at_least(&self, k: usize) -> bool {
        self.count >= k
    }
}

pub fn count_odd_cycles(g: &Graph, cap: usize) -> OddCycleCensus {
    let mut count = 0;
    if cap > 0 {
        let _ = visit_cycles(g, |p| {
            if p.len() % 2 == 1 {
                count += 1;
                if count == cap {
                    return ControlFlow::Break(());
                }
            }
            ControlFlow::Continue(())
        });
    }
    OddCycleCensus {
        count,
        cap,
        saturated: count == cap,
    }
}

/// Visits odd cycles only, counting every cycle against `limit`.
fn visit_odd_cycles<F>(g: &Graph, limit: usize, mut f: F) -> Result<ControlFlow<()>, CycleError>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if limit == 0 {
        return Err(CycleError::ZeroLimit);
    }
    let mut seen = 0usize;
    let mut truncated = false;
    let flow = visit_cycles(g, |p| {
        if seen == limit {
            truncated = true;
            return ControlFlow::Break(());
        }
        seen += 1;
        if p.len() % 2 == 1 {
            f(p)
        } else {
            ControlFlow::Continue(())
        }
    });
    if truncated {
        Err(CycleError::Truncated { limit })
    } else {
        Ok(flow)
    }
}

/// Whether every two distinct odd cycles share at least two vertices.
///
/// A counterexample found before the limit is reached is a definite
/// `false`; otherwise truncation makes the answer indeterminate.
pub fn pairwise_intersection_property(g: &Graph, limit: usize) -> Result<bool, CycleError> {
    let mut seen: Vec<Vec<usize>> = Vec::new();
    let mut holds = true;
    let outcome = visit_odd_cycles(g, limit, |p| {
        let mut vs = p.to_vec();
        vs.sort_unstable();
        if seen.iter().any(|other| shared_count(other, &vs) < 2) {
            holds = false;
            return ControlFlow::Break(());
        }
        seen.push(vs);
        ControlFlow::Continue(())
    });
    match outcome {
        Ok(_) => Ok(holds),
        Err(e) if holds => Err(e),
        Err(_) => Ok(false),
    }
}

fn shared_count(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

/// Whether some edge lies on every odd cycle. Vacuously true for bipartite
/// graphs.
pub fn all_odd_cycles_share_edge(g: &Graph, limit: usize) -> Result<bool, CycleError> {
    let mut common: Option<Vec<Edge>> = None;
    let outcome = visit_odd_cycles(g, limit, |p| {
        let len = p.len();
        let edges = (0..len).map(|i| Edge::new(p[i], p[(i + 1) % len]));
        match common.as_mut() {
            None => {
                let mut e: Vec<Edge> = edges.collect();
                e.sort_unstable();
                common = Some(e);
            }
            Some(c) => {
                let mut e: Vec<Edge> = edges.collect();
                e.sort_unstable();
                c.retain(|x| e.binary_search(x).is_ok());
            }
        }
        if common.as_ref().is_some_and(Vec::is_empty) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    let shared = common.as_ref().is_none_or(|c| !c.is_empty());
    match outcome {
        Ok(_) => Ok(shared),
        Err(e) if shared => Err(e),
        Err(_) => Ok(false),
    }
}

/// Whether `e` lies on some odd cycle of `g`.
///
/// Every cycle through `e` stays inside the block containing `e`, and in a
/// 2-connected non-bipartite graph every edge lies on an odd cycle, so the
/// answer is whether that block is non-bipartite.
pub fn edge_on_odd_cycle(g: &Graph, e: Edge) -> Result<bool, CycleError> {
    if !g.contains_edge(e) {
        return Err(CycleError::NotAnEdge { edge: e });
    }
    let structure = blocks_and_cut_vertices(g);
    let block = structure
        .blocks
        .into_iter()
        .find(|b| b.binary_search(&e).is_ok())
        .expect("every edge lies in a block");
    Ok(!Graph::from_sorted_edges(g.n(), block).is_bipartite())
}
