//! Exact chromatic number and chromatic edge-stability.
//!
//! `es(G)` is the least number of edges whose deletion lowers `χ(G)`. For
//! `χ = 2` every edge has to go, so `es = m`. For `χ = 3` it equals the
//! bipartite edge frustration, which [`frustration_at_most_two`] decides for
//! values up to two with bipartiteness tests alone. Everything else is
//! settled by subset search over edge sets in lexicographic order.

use alloc::vec;
use alloc::vec::Vec;

use serde::Serialize;
use thiserror::Error;

use crate::combinations::find_subset;
use crate::graph::{two_color, Edge, Graph};

pub const DEFAULT_MAX_VERTICES: usize = 16;
pub const DEFAULT_MAX_ES: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StabilityLimits {
    /// Largest vertex count the exact colouring search accepts.
    pub max_vertices: usize,
    /// Largest deletion set size explored by subset search.
    pub max_es: usize,
}

impl Default for StabilityLimits {
    fn default() -> Self {
        StabilityLimits {
            max_vertices: DEFAULT_MAX_VERTICES,
            max_es: DEFAULT_MAX_ES,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StabilityError {
    #[error("graph has {n} vertices; exact colouring is limited to {bound}")]
    TooManyVertices { n: usize, bound: usize },
    #[error("no edge set of size at most {bound} lowers the chromatic number")]
    SearchBoundExceeded { bound: usize },
    #[error("chromatic number {chi} cannot be lowered by deleting edges")]
    Unreducible { chi: usize },
    #[error("{edge} is not an edge of the graph")]
    NotAnEdge { edge: Edge },
}

/// Backtracking `k`-colouring. Returns a proper colouring with colours in
/// `0..k` if one exists.
pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    // Highest degree first; ties by label.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(g.degree(v)), v));

    const NONE: usize = usize::MAX;
    let mut color = vec![NONE; n];
    if extend_coloring(g, k, &order, 0, 0, &mut color) {
        Some(color)
    } else {
        None
    }
}

fn extend_coloring(
    g: &Graph,
    k: usize,
    order: &[usize],
    at: usize,
    used: usize,
    color: &mut [usize],
) -> bool {
    let Some(&v) = order.get(at) else {
        return true;
    };
    // Colours are interchangeable, so a fresh colour is only tried once.
    let limit = (used + 1).min(k);
    for c in 0..limit {
        if g.neighbors(v).iter().any(|&w| color[w] == c) {
            continue;
        }
        color[v] = c;
        if extend_coloring(g, k, order, at + 1, used.max(c + 1), color) {
            return true;
        }
    }
    color[v] = usize::MAX;
    false
}

pub fn chromatic_number(g: &Graph) -> Result<usize, StabilityError> {
    chromatic_number_with(g, &StabilityLimits::default())
}

/// Exact `χ`: the edgeless and bipartite cases are decided directly, then
/// `k = 3, 4, ...` are tried with the backtracking colourer.
pub fn chromatic_number_with(g: &Graph, limits: &StabilityLimits) -> Result<usize, StabilityError> {
    if g.n() > limits.max_vertices {
        return Err(StabilityError::TooManyVertices {
            n: g.n(),
            bound: limits.max_vertices,
        });
    }
    Ok(chromatic_unbounded(g))
}

fn chromatic_unbounded(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    if g.m() == 0 {
        return 1;
    }
    if g.is_bipartite() {
        return 2;
    }
    (3..=g.n())
        .find(|&k| is_k_colorable(g, k).is_some())
        .expect("n colours always suffice")
}

/// `χ`, `es` and a lexicographically least minimum deletion set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub chi: usize,
    pub es: usize,
    pub witness: Vec<Edge>,
}

pub fn edge_stability_number(g: &Graph) -> Result<StabilityReport, StabilityError> {
    edge_stability_number_with(g, &StabilityLimits::default())
}

pub fn edge_stability_number_with(
    g: &Graph,
    limits: &StabilityLimits,
) -> Result<StabilityReport, StabilityError> {
    let chi = chromatic_number_with(g, limits)?;
    match chi {
        0 | 1 => Err(StabilityError::Unreducible { chi }),
        2 => Ok(StabilityReport {
            chi,
            es: g.m(),
            witness: g.edges().to_vec(),
        }),
        3 => {
            let witness = match frustration_at_most_two(g) {
                Frustration::Zero => unreachable!("chi = 3 graphs are not bipartite"),
                Frustration::One(e) => vec![e],
                Frustration::Two(e, f) => vec![e, f],
                Frustration::MoreThanTwo => {
                    subset_search(g, 3..=limits.max_es, |h| h.is_bipartite()).ok_or(
                        StabilityError::SearchBoundExceeded {
                            bound: limits.max_es,
                        },
                    )?
                }
            };
            Ok(StabilityReport {
                chi,
                es: witness.len(),
                witness,
            })
        }
        _ => {
            let witness = subset_search(g, 1..=limits.max_es, |h| {
                is_k_colorable(h, chi - 1).is_some()
            })
            .ok_or(StabilityError::SearchBoundExceeded {
                bound: limits.max_es,
            })?;
            Ok(StabilityReport {
                chi,
                es: witness.len(),
                witness,
            })
        }
    }
}

/// Reference route: no closed forms and no fast path. Deletion sets are
/// tried by size, then lexicographically, and each candidate is judged by
/// recomputing `χ` with the colourer.
pub fn edge_stability_exhaustive(
    g: &Graph,
    limits: &StabilityLimits,
) -> Result<StabilityReport, StabilityError> {
    let chi = chromatic_number_with(g, limits)?;
    if chi <= 1 {
        return Err(StabilityError::Unreducible { chi });
    }
    let witness = subset_search(g, 1..=limits.max_es.min(g.m()), |h| {
        is_k_colorable(h, chi - 1).is_some()
    })
    .ok_or(StabilityError::SearchBoundExceeded {
        bound: limits.max_es,
    })?;
    Ok(StabilityReport {
        chi,
        es: witness.len(),
        witness,
    })
}

fn subset_search<F>(
    g: &Graph,
    sizes: core::ops::RangeInclusive<usize>,
    mut lowered: F,
) -> Option<Vec<Edge>>
where
    F: FnMut(&Graph) -> bool,
{
    let edges = g.edges();
    let mut removed = Vec::new();
    for size in sizes {
        let hit = find_subset(edges.len(), size, |idx| {
            removed.clear();
            removed.extend(idx.iter().map(|&i| edges[i]));
            lowered(&g.without_edges(&removed))
        });
        if hit.is_some() {
            return Some(removed);
        }
    }
    None
}

/// Bipartite edge frustration, resolved exactly up to two.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Frustration {
    Zero,
    /// The least edge whose deletion leaves a bipartite graph.
    One(Edge),
    /// The lexicographically least such pair.
    Two(Edge, Edge),
    MoreThanTwo,
}

impl Frustration {
    /// The frustration value if it is at most two.
    pub fn value(self) -> Option<usize> {
        match self {
            Frustration::Zero => Some(0),
            Frustration::One(_) => Some(1),
            Frustration::Two(..) => Some(2),
            Frustration::MoreThanTwo => None,
        }
    }
}

/// Decides frustration 0, 1 or 2 with bipartiteness tests.
///
/// Any deletion set that makes the graph bipartite meets every odd cycle.
/// So single deletions are only tried on one fixed odd cycle `C`. For a
/// pair `{e, f}`, one member lies on `C`, and once `e ∈ C` is deleted the
/// partner must lie on a fixed odd cycle of `G - e`. Both scans therefore
/// see every valid set, and the reported witness is the least one.
pub fn frustration_at_most_two(g: &Graph) -> Frustration {
    let cycle = match two_color(g, &[]) {
        Ok(_) => return Frustration::Zero,
        Err(c) => c,
    };
    let on_cycle = cycle_edges(&cycle);

    if let Some(&e) = on_cycle.iter().find(|&&e| two_color(g, &[e]).is_ok()) {
        return Frustration::One(e);
    }

    let mut best: Option<(Edge, Edge)> = None;
    for &e in &on_cycle {
        let inner = match two_color(g, &[e]) {
            Ok(_) => unreachable!("frustration is above one"),
            Err(c) => c,
        };
        for f in cycle_edges(&inner) {
            if two_color(g, &[e, f]).is_ok() {
                let pair = if e < f { (e, f) } else { (f, e) };
                if best.is_none_or(|b| pair < b) {
                    best = Some(pair);
                }
            }
        }
    }
    match best {
        Some((e, f)) => Frustration::Two(e, f),
        None => Frustration::MoreThanTwo,
    }
}

/// Edges of a cycle given as a vertex sequence, sorted.
pub(crate) fn cycle_edges(cycle: &[usize]) -> Vec<Edge> {
    let len = cycle.len();
    let mut edges: Vec<Edge> = (0..len)
        .map(|i| Edge::new(cycle[i], cycle[(i + 1) % len]))
        .collect();
    edges.sort_unstable();
    edges
}

/// Edges `f` whose deletion together with `anchor` lowers `χ` by exactly
/// one. For `χ = 3` these are the partners that leave a bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoRemovalSet {
    pub anchor: Edge,
    pub partners: Vec<Edge>,
}

pub fn co_removal_set(g: &Graph, anchor: Edge) -> Result<CoRemovalSet, StabilityError> {
    co_removal_set_with(g, anchor, &StabilityLimits::default())
}

pub fn co_removal_set_with(
    g: &Graph,
    anchor: Edge,
    limits: &StabilityLimits,
) -> Result<CoRemovalSet, StabilityError> {
    if !g.contains_edge(anchor) {
        return Err(StabilityError::NotAnEdge { edge: anchor });
    }
    let chi = chromatic_number_with(g, limits)?;
    let partners = g
        .edges()
        .iter()
        .copied()
        .filter(|&f| f != anchor && chromatic_unbounded(&g.without_edges(&[anchor, f])) + 1 == chi)
        .collect();
    Ok(CoRemovalSet { anchor, partners })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_graphs::*;

    fn e(a: usize, b: usize) -> Edge {
        Edge::new(a, b)
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&complete_graph(4)), Ok(4));
        assert_eq!(chromatic_number(&cycle_graph(5)), Ok(3));
        assert_eq!(chromatic_number(&cycle_graph(6)), Ok(2));
        assert_eq!(chromatic_number(&Graph::empty(3)), Ok(1));
        assert_eq!(chromatic_number(&Graph::empty(0)), Ok(0));
        assert_eq!(
            chromatic_number(&Graph::empty(17)),
            Err(StabilityError::TooManyVertices { n: 17, bound: 16 })
        );
    }

    #[test]
    fn k_colorability() {
        let c5 = cycle_graph(5);
        assert!(is_k_colorable(&c5, 2).is_none());
        let col = is_k_colorable(&c5, 3).unwrap();
        assert!(c5.edges().iter().all(|x| col[x.u()] != col[x.v()]));
        assert!(col.iter().all(|&c| c < 3));
        assert!(is_k_colorable(&Graph::empty(4), 1).is_some());
        assert!(is_k_colorable(&Graph::empty(4), 0).is_none());
    }

    #[test]
    fn stability_of_small_graphs() {
        let c5 = edge_stability_number(&cycle_graph(5)).unwrap();
        assert_eq!((c5.chi, c5.es), (3, 1));
        assert_eq!(c5.witness, vec![e(0, 1)]);

        let two = edge_stability_number(&disjoint_triangles()).unwrap();
        assert_eq!((two.chi, two.es), (3, 2));
        assert_eq!(two.witness, vec![e(0, 1), e(3, 4)]);

        let k4 = edge_stability_number(&complete_graph(4)).unwrap();
        assert_eq!((k4.chi, k4.es), (4, 1));
        assert_eq!(k4.witness, vec![e(0, 1)]);

        let c6 = edge_stability_number(&cycle_graph(6)).unwrap();
        assert_eq!((c6.chi, c6.es), (2, 6));

        assert_eq!(
            edge_stability_number(&Graph::empty(3)),
            Err(StabilityError::Unreducible { chi: 1 })
        );
    }

    #[test]
    fn frustration_beyond_two() {
        // Three disjoint triangles: chi 3, frustration 3.
        let g = Graph::from_edge_list(
            9,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (6, 7),
                (7, 8),
                (6, 8),
            ],
        )
        .unwrap();
        assert_eq!(frustration_at_most_two(&g), Frustration::MoreThanTwo);
        let r = edge_stability_number(&g).unwrap();
        assert_eq!(r.es, 3);
        assert_eq!(r.witness, vec![e(0, 1), e(3, 4), e(6, 7)]);

        let tight = StabilityLimits {
            max_es: 2,
            ..StabilityLimits::default()
        };
        assert_eq!(
            edge_stability_number_with(&g, &tight),
            Err(StabilityError::SearchBoundExceeded { bound: 2 })
        );
    }

    #[test]
    fn k4_single_deletions_by_brute_force() {
        // Every single deletion from K4 leaves K4 - e, which is 3-colourable.
        let k4 = complete_graph(4);
        for &x in k4.edges() {
            assert_eq!(chromatic_number(&k4.without_edge(x)), Ok(3));
        }
        let r = edge_stability_exhaustive(&k4, &StabilityLimits::default()).unwrap();
        assert_eq!((r.chi, r.es), (4, 1));
    }

    #[test]
    fn co_removal_sets() {
        let two = disjoint_triangles();
        let s = co_removal_set(&two, e(0, 1)).unwrap();
        assert_eq!(s.partners, vec![e(3, 4), e(3, 5), e(4, 5)]);

        let c5 = cycle_graph(5);
        let s = co_removal_set(&c5, e(0, 1)).unwrap();
        assert_eq!(s.partners.len(), 4);

        let c4 = cycle_graph(4);
        assert!(co_removal_set(&c4, e(0, 1)).unwrap().partners.is_empty());

        assert_eq!(
            co_removal_set(&c4, e(0, 2)),
            Err(StabilityError::NotAnEdge { edge: e(0, 2) })
        );
    }

    #[test]
    fn fast_path_picks_least_witness_off_the_fixed_cycle() {
        // The fast witness must equal the oracle's least pair.
        let g = bowtie().relabel(&[4, 3, 2, 1, 0]);
        match frustration_at_most_two(&g) {
            Frustration::Two(a, b) => {
                let oracle = edge_stability_exhaustive(&g, &StabilityLimits::default()).unwrap();
                assert_eq!(vec![a, b], oracle.witness);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
