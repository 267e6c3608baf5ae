//! Edge-stability criticality and (k, l)-criticality.
//!
//! `es(G - e)` is always measured against `χ(G - e)`, the deleted graph's
//! own chromatic number. Deleting an edge from `C5`, for example, leaves a
//! path with `χ = 2` and `es = 4`, so `C5` is not edge-stability critical.

use alloc::string::String;
use alloc::vec::Vec;

use serde::Serialize;
use thiserror::Error;

use crate::blocks::is_nonseparable;
use crate::cycles::{
    all_odd_cycles_share_edge, count_odd_cycles, pairwise_intersection_property, CycleError,
    OddCycleCensus, DEFAULT_CYCLE_LIMIT, DEFAULT_ODD_CYCLE_CAP,
};
use crate::graph::{two_color, Edge, Graph};
use crate::stability::{
    chromatic_number_with, co_removal_set_with, cycle_edges, edge_stability_number_with,
    StabilityError, StabilityLimits, StabilityReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriticalityError {
    #[error("graph has no edges")]
    NoEdges,
    #[error(transparent)]
    Stability(#[from] StabilityError),
    #[error(transparent)]
    Cycles(#[from] CycleError),
}

/// `es` of `g`, or `None` when no deletion can lower `χ` (edgeless graphs).
fn es_or_unbounded(g: &Graph, limits: &StabilityLimits) -> Result<Option<usize>, StabilityError> {
    match edge_stability_number_with(g, limits) {
        Ok(r) => Ok(Some(r.es)),
        Err(StabilityError::Unreducible { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn is_edge_stability_critical(g: &Graph) -> Result<bool, CriticalityError> {
    is_edge_stability_critical_with(g, &StabilityLimits::default())
}

/// `es(G - e) < es(G)` for every edge `e`.
pub fn is_edge_stability_critical_with(
    g: &Graph,
    limits: &StabilityLimits,
) -> Result<bool, CriticalityError> {
    if g.m() == 0 {
        return Err(CriticalityError::NoEdges);
    }
    let Some(es) = es_or_unbounded(g, limits)? else {
        return Ok(false);
    };
    for &e in g.edges() {
        match es_or_unbounded(&g.without_edge(e), limits)? {
            Some(after) if after < es => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

pub fn is_k_l_critical(g: &Graph, k: usize, l: usize) -> Result<bool, CriticalityError> {
    is_k_l_critical_with(g, k, l, &StabilityLimits::default())
}

/// (k, l)-criticality.
///
/// For `l = 2` this uses the characterization "`χ(G) = k`, and for every
/// edge `e`, `χ(G - e) = k` and some `f` has `χ(G - {e, f}) = k - 1`". For
/// `k = 3` both chromatic tests reduce to bipartiteness, and the partner `f`
/// is only sought on one odd cycle of `G - e`. Other `l` go through the
/// definition.
pub fn is_k_l_critical_with(
    g: &Graph,
    k: usize,
    l: usize,
    limits: &StabilityLimits,
) -> Result<bool, CriticalityError> {
    if g.m() == 0 {
        return Err(CriticalityError::NoEdges);
    }
    if l != 2 || k < 2 {
        return is_k_l_critical_by_definition(g, k, l, limits);
    }
    if chromatic_number_with(g, limits)? != k {
        return Ok(false);
    }
    if k == 3 {
        return Ok(g.edges().iter().all(|&e| has_bipartizing_partner(g, e)));
    }
    for &e in g.edges() {
        let without = g.without_edge(e);
        if chromatic_number_with(&without, limits)? != k {
            return Ok(false);
        }
        let found = without
            .edges()
            .iter()
            .any(|&f| chromatic_number_with(&without.without_edge(f), limits) == Ok(k - 1));
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For `χ(G) = 3`: `G - e` is not bipartite and some `f` makes
/// `G - {e, f}` bipartite. Any such `f` lies on every odd cycle of `G - e`.
fn has_bipartizing_partner(g: &Graph, e: Edge) -> bool {
    let cycle = match two_color(g, &[e]) {
        Ok(_) => return false,
        Err(c) => c,
    };
    // g has an odd cycle besides e's, so G - {e, f} keeps an edge and
    // bipartite means χ = 2 exactly.
    cycle_edges(&cycle)
        .into_iter()
        .any(|f| two_color(g, &[e, f]).is_ok())
}

/// (k, l)-criticality straight from the definition: `χ = k`, `es = l` and
/// `es(G - e) < l` for every edge.
pub fn is_k_l_critical_by_definition(
    g: &Graph,
    k: usize,
    l: usize,
    limits: &StabilityLimits,
) -> Result<bool, CriticalityError> {
    if g.m() == 0 {
        return Err(CriticalityError::NoEdges);
    }
    if chromatic_number_with(g, limits)? != k {
        return Ok(false);
    }
    if es_or_unbounded(g, limits)? != Some(l) {
        return Ok(false);
    }
    is_edge_stability_critical_with(g, limits)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReportOptions {
    pub cap: usize,
    pub cycle_limit: usize,
    pub limits: StabilityLimits,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            cap: DEFAULT_ODD_CYCLE_CAP,
            cycle_limit: DEFAULT_CYCLE_LIMIT,
            limits: StabilityLimits::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeEffect {
    pub edge: Edge,
    pub chi_after: usize,
    /// `es(G - e)`; `None` when `G - e` is edgeless.
    pub es_after: Option<usize>,
    /// Least partner `f` with `χ(G - {e, f}) = χ(G) - 1`, reported when
    /// `χ(G) = 3`.
    pub partner: Option<Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalityReport {
    pub n: usize,
    pub m: usize,
    pub chi: usize,
    pub es: usize,
    pub witness: Vec<Edge>,
    pub is_edge_stability_critical: bool,
    /// `(χ, es)` when the graph is edge-stability critical.
    pub k_l: Option<(usize, usize)>,
    pub odd_cycle_census: OddCycleCensus,
    pub nonseparable: bool,
    /// `None` when cycle enumeration hit its limit.
    pub odd_cycles_pairwise_intersect: Option<bool>,
    pub per_edge: Vec<EdgeEffect>,
    /// Structural facts that every (3,2)-critical graph with at least three
    /// odd cycles satisfies, found broken here. Always empty unless
    /// something is wrong.
    pub internal_violations: Vec<String>,
}

pub fn criticality_report(g: &Graph) -> Result<CriticalityReport, CriticalityError> {
    criticality_report_with(g, &ReportOptions::default())
}

pub fn criticality_report_with(
    g: &Graph,
    opts: &ReportOptions,
) -> Result<CriticalityReport, CriticalityError> {
    if g.m() == 0 {
        return Err(CriticalityError::NoEdges);
    }
    let StabilityReport { chi, es, witness } = edge_stability_number_with(g, &opts.limits)?;

    let mut per_edge = Vec::with_capacity(g.m());
    let mut critical = true;
    for &e in g.edges() {
        let without = g.without_edge(e);
        let chi_after = chromatic_number_with(&without, &opts.limits)?;
        let es_after = es_or_unbounded(&without, &opts.limits)?;
        if es_after.is_none_or(|a| a >= es) {
            critical = false;
        }
        let partner = if chi == 3 {
            co_removal_set_with(g, e, &opts.limits)?
                .partners
                .first()
                .copied()
        } else {
            None
        };
        per_edge.push(EdgeEffect {
            edge: e,
            chi_after,
            es_after,
            partner,
        });
    }

    let census = count_odd_cycles(g, opts.cap);
    let nonseparable = is_nonseparable(g);
    let pairwise = match pairwise_intersection_property(g, opts.cycle_limit) {
        Ok(b) => Some(b),
        Err(CycleError::Truncated { .. }) => None,
        Err(e) => return Err(e.into()),
    };

    let mut internal_violations = Vec::new();
    if critical && chi == 3 && es == 2 && count_odd_cycles(g, 3).at_least(3) {
        if pairwise == Some(false) {
            internal_violations.push(String::from(
                "two odd cycles of a (3,2)-critical graph meet in fewer than two vertices",
            ));
        }
        if !g.has_isolated_vertex() && !nonseparable {
            internal_violations.push(String::from("(3,2)-critical graph is separable"));
        }
        for &e in g.edges() {
            if all_odd_cycles_share_edge(&g.without_edge(e), opts.cycle_limit) == Ok(false) {
                internal_violations
                    .push(alloc::format!("odd cycles of G - {e} share no common edge"));
            }
        }
    }

    Ok(CriticalityReport {
        n: g.n(),
        m: g.m(),
        chi,
        es,
        witness,
        is_edge_stability_critical: critical,
        k_l: critical.then_some((chi, es)),
        odd_cycle_census: census,
        nonseparable,
        odd_cycles_pairwise_intersect: pairwise,
        per_edge,
        internal_violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_graphs::*;

    #[test]
    fn c5_is_not_critical_under_the_literal_reading() {
        // es(C5) = 1, but C5 - e is a path with chi 2 and es 4.
        assert_eq!(is_edge_stability_critical(&cycle_graph(5)), Ok(false));
        let path = cycle_graph(5).without_edge(Edge::new(0, 1));
        assert_eq!(
            crate::stability::edge_stability_number(&path).unwrap().es,
            4
        );
    }

    #[test]
    fn small_verdicts() {
        assert_eq!(is_edge_stability_critical(&disjoint_triangles()), Ok(true));
        // Bipartite: es = m, so every deletion lowers es.
        assert_eq!(is_edge_stability_critical(&cycle_graph(6)), Ok(true));
        assert_eq!(is_k_l_critical(&bowtie(), 3, 2), Ok(true));
        assert_eq!(is_k_l_critical(&complete_graph(4), 3, 2), Ok(false));
        assert_eq!(is_k_l_critical(&theta(&[1, 2, 2, 3]), 3, 2), Ok(true));
        assert_eq!(is_k_l_critical(&cycle_graph(5), 3, 2), Ok(false));
        assert_eq!(
            is_k_l_critical(&Graph::empty(3), 3, 2),
            Err(CriticalityError::NoEdges)
        );
    }

    #[test]
    fn k4_is_not_critical() {
        // K4 - e keeps two triangles sharing the edge opposite e, so
        // es(K4 - e) = 1 = es(K4).
        let k4 = complete_graph(4);
        assert_eq!(is_edge_stability_critical(&k4), Ok(false));
        let lim = StabilityLimits::default();
        assert_eq!(is_k_l_critical_by_definition(&k4, 4, 1, &lim), Ok(false));
    }

    #[test]
    fn routes_agree_on_named_graphs() {
        let lim = StabilityLimits::default();
        for g in [
            bowtie(),
            disjoint_triangles(),
            theta(&[1, 2, 2, 3]),
            theta(&[1, 2, 2]),
            cycle_graph(5),
            cycle_graph(7),
            complete_graph(4),
        ] {
            assert_eq!(
                is_k_l_critical_with(&g, 3, 2, &lim),
                is_k_l_critical_by_definition(&g, 3, 2, &lim),
                "{g:?}"
            );
        }
    }

    #[test]
    fn report_for_c5() {
        let r = criticality_report(&cycle_graph(5)).unwrap();
        assert!(!r.is_edge_stability_critical);
        assert_eq!(r.k_l, None);
        assert_eq!(r.odd_cycle_census.count, 1);
        assert!(r.per_edge.iter().all(|p| p.es_after == Some(4)));
        assert!(r.internal_violations.is_empty());
    }

    #[test]
    fn report_for_bowtie() {
        let r = criticality_report(&bowtie()).unwrap();
        assert!(r.is_edge_stability_critical);
        assert_eq!(r.k_l, Some((3, 2)));
        assert!(!r.nonseparable);
        assert_eq!(r.odd_cycles_pairwise_intersect, Some(false));
        // Two odd cycles only, so the separability is expected.
        assert!(r.internal_violations.is_empty());
        assert!(r.per_edge.iter().all(|p| p.partner.is_some()));
    }

    #[test]
    fn report_needs_edges() {
        assert_eq!(
            criticality_report(&Graph::empty(2)),
            Err(CriticalityError::NoEdges)
        );
    }
}
