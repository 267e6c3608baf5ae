//! The characterized families of (3,2)-critical graphs.
//!
//! * **A**: two disjoint odd cycles.
//! * **B**: two odd cycles sharing one vertex.
//! * **C**: two hubs joined by four internally disjoint paths, exactly two of
//!   them odd and at most one of length one.
//! * **D**: subdivisions of `K4` whose odd branches are all six branches, an
//!   odd triangle, or two vertex-disjoint branches.
//! * **E**: necklaces. `k >= 2` even cycles glued in a ring, cycle `i`
//!   meeting its neighbours at hubs `x_i`, `y_i`, with the hub distances
//!   summing to an odd number.
//! * **E'**: necklaces in which some beads are paths (never two in a row),
//!   with at least two even cycles. They are not critical; they appear as
//!   intermediate graphs when a critical graph is grown by ears.
//!
//! Recognition is purely structural (degree profiles and hub-to-hub arcs).
//! It never computes `χ` or `es`, so it is independent evidence against the
//! criticality oracle.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::blocks::blocks_and_cut_vertices;
use crate::graph::{Edge, Graph};

/// Branch order of `K4` subdivisions: pairs of branch vertices `0..4`.
pub const K4_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FamilyTag {
    A,
    B,
    C,
    D,
    E,
    #[serde(rename = "E'")]
    EPrime,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyTag::A => "A",
            FamilyTag::B => "B",
            FamilyTag::C => "C",
            FamilyTag::D => "D",
            FamilyTag::E => "E",
            FamilyTag::EPrime => "E'",
        })
    }
}

/// Which odd-branch pattern a `K4` subdivision follows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DCase {
    /// All six branches odd (and not all of length one).
    #[serde(rename = "i")]
    AllOdd,
    /// Exactly three odd branches, forming a triangle.
    #[serde(rename = "ii")]
    OddTriangle,
    /// Exactly two odd branches, vertex-disjoint.
    #[serde(rename = "iii")]
    OddMatching,
}

impl fmt::Display for DCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DCase::AllOdd => "i",
            DCase::OddTriangle => "ii",
            DCase::OddMatching => "iii",
        })
    }
}

/// An even cycle of a necklace with its two hubs `hub_distance` apart.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NecklaceCycle {
    pub length: usize,
    pub hub_distance: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum NecklacePart {
    Cycle { length: usize, hub_distance: usize },
    Path { length: usize },
}

impl NecklacePart {
    /// Distance between the part's two hubs.
    pub fn hub_distance(&self) -> usize {
        match *self {
            NecklacePart::Cycle { hub_distance, .. } => hub_distance,
            NecklacePart::Path { length } => length,
        }
    }

    pub fn is_path(&self) -> bool {
        matches!(self, NecklacePart::Path { .. })
    }
}

/// Parameters that rebuild one member of a family.
///
/// Lengths count edges. For A and B the two entries are the odd cycle
/// lengths `2k+1` and `2l+1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum FamilySpec {
    A {
        cycles: [usize; 2],
    },
    B {
        cycles: [usize; 2],
    },
    C {
        paths: [usize; 4],
    },
    D {
        case: DCase,
        branches: [usize; 6],
    },
    E {
        cycles: Vec<NecklaceCycle>,
    },
    #[serde(rename = "E'")]
    EPrime {
        parts: Vec<NecklacePart>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecViolation {
    #[error("cycle {index} has length {length}; an odd length of at least 3 is required")]
    OddCycleLength { index: usize, length: usize },
    #[error("path {index} has length 0")]
    EmptyPath { index: usize },
    #[error("exactly two of the four paths must be odd, found {count}")]
    OddPathCount { count: usize },
    #[error("at most one path may have length one, found {count}")]
    RepeatedUnitPath { count: usize },
    #[error("all branches have length one, which is K4 itself")]
    UnsubdividedK4,
    #[error("odd branches {odd:?} are neither all six, a triangle, nor two disjoint branches")]
    BranchParity { odd: Vec<(usize, usize)> },
    #[error("declared case {declared} but the branch parities give case {actual}")]
    CaseMismatch { declared: DCase, actual: DCase },
    #[error("a necklace needs at least {min} parts, found {count}")]
    TooFewParts { count: usize, min: usize },
    #[error("cycle {index} has length {length}; an even length of at least 4 is required")]
    EvenCycleLength { index: usize, length: usize },
    #[error("hub distance {distance} in cycle {index} must lie between 1 and {max}")]
    HubDistance {
        index: usize,
        distance: usize,
        max: usize,
    },
    #[error("hub distances sum to {sum}, which is even; an odd sum is required")]
    EvenDistanceSum { sum: usize },
    #[error("at least two even cycles are required, found {count}")]
    TooFewEvenCycles { count: usize },
    #[error("at least one path is required")]
    NoPath,
    #[error("parts {first} and {second} are consecutive paths")]
    AdjacentPaths { first: usize, second: usize },
}

impl FamilySpec {
    pub fn tag(&self) -> FamilyTag {
        match self {
            FamilySpec::A { .. } => FamilyTag::A,
            FamilySpec::B { .. } => FamilyTag::B,
            FamilySpec::C { .. } => FamilyTag::C,
            FamilySpec::D { .. } => FamilyTag::D,
            FamilySpec::E { .. } => FamilyTag::E,
            FamilySpec::EPrime { .. } => FamilyTag::EPrime,
        }
    }

    /// Vertices of the built graph.
    pub fn vertex_count(&self) -> usize {
        match self {
            FamilySpec::A { cycles } => cycles[0] + cycles[1],
            FamilySpec::B { cycles } => cycles[0] + cycles[1] - 1,
            FamilySpec::C { paths } => 2 + paths.iter().map(|q| q - 1).sum::<usize>(),
            FamilySpec::D { branches, .. } => 4 + branches.iter().map(|q| q - 1).sum::<usize>(),
            FamilySpec::E { cycles } => {
                cycles.iter().map(|c| c.length).sum::<usize>() - cycles.len()
            }
            FamilySpec::EPrime { parts } => {
                parts
                    .iter()
                    .map(|p| match *p {
                        NecklacePart::Cycle { length, .. } => length,
                        NecklacePart::Path { length } => length + 1,
                    })
                    .sum::<usize>()
                    - parts.len()
            }
        }
    }

    /// The representative of the spec's symmetry class: sorted lengths for
    /// A, B and C, the least branch vector over the 24 relabellings of the
    /// `K4` for D, and the least rotation or reflection of the bead
    /// sequence for E and E'.
    pub fn normalized(&self) -> FamilySpec {
        match self {
            FamilySpec::A { cycles } => FamilySpec::A {
                cycles: sorted(*cycles),
            },
            FamilySpec::B { cycles } => FamilySpec::B {
                cycles: sorted(*cycles),
            },
            FamilySpec::C { paths } => FamilySpec::C {
                paths: sorted(*paths),
            },
            FamilySpec::D { case, branches } => FamilySpec::D {
                case: *case,
                branches: least_k4_labelling(branches),
            },
            FamilySpec::E { cycles } => FamilySpec::E {
                cycles: least_ring_rotation(cycles),
            },
            FamilySpec::EPrime { parts } => FamilySpec::EPrime {
                parts: least_ring_rotation(parts),
            },
        }
    }
}

fn sorted<const N: usize>(mut a: [usize; N]) -> [usize; N] {
    a.sort_unstable();
    a
}

fn k4_pair_index(a: usize, b: usize) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    K4_PAIRS
        .iter()
        .position(|&p| p == (a, b))
        .expect("distinct branch vertices")
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|i| (i + 1..4).all(|j| p[i] != p[j])) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

fn least_k4_labelling(branches: &[usize; 6]) -> [usize; 6] {
    permutations4()
        .into_iter()
        .map(|p| {
            let mut out = [0; 6];
            for (i, &(a, b)) in K4_PAIRS.iter().enumerate() {
                out[k4_pair_index(p[a], p[b])] = branches[i];
            }
            out
        })
        .min()
        .expect("24 labellings")
}

fn least_ring_rotation<T: Ord + Clone>(beads: &[T]) -> Vec<T> {
    let k = beads.len();
    let mut best: Option<Vec<T>> = None;
    let mut reversed = beads.to_vec();
    reversed.reverse();
    for seq in [beads.to_vec(), reversed] {
        for r in 0..k.max(1) {
            let mut cand = seq.clone();
            cand.rotate_left(r % k.max(1));
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// The case selected by the branch parities.
pub fn d_case(branches: &[usize; 6]) -> Result<DCase, SpecViolation> {
    let odd: Vec<(usize, usize)> = K4_PAIRS
        .iter()
        .zip(branches)
        .filter(|(_, &len)| len % 2 == 1)
        .map(|(&p, _)| p)
        .collect();
    let touched = |pairs: &[(usize, usize)]| {
        let mut vs: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        vs.sort_unstable();
        vs.dedup();
        vs.len()
    };
    match odd.len() {
        6 if branches.iter().all(|&l| l == 1) => Err(SpecViolation::UnsubdividedK4),
        6 => Ok(DCase::AllOdd),
        3 if touched(&odd) == 3 => Ok(DCase::OddTriangle),
        2 if touched(&odd) == 4 => Ok(DCase::OddMatching),
        _ => Err(SpecViolation::BranchParity { odd }),
    }
}

/// Checks every constraint of the spec's family and names each one broken.
pub fn validate_spec(spec: &FamilySpec) -> Result<(), Vec<SpecViolation>> {
    let mut v = Vec::new();
    match spec {
        FamilySpec::A { cycles } | FamilySpec::B { cycles } => {
            for (index, &length) in cycles.iter().enumerate() {
                if length < 3 || length % 2 == 0 {
                    v.push(SpecViolation::OddCycleLength { index, length });
                }
            }
        }
        FamilySpec::C { paths } => {
            for (index, &len) in paths.iter().enumerate() {
                if len == 0 {
                    v.push(SpecViolation::EmptyPath { index });
                }
            }
            let odd = paths.iter().filter(|&&q| q % 2 == 1).count();
            if odd != 2 {
                v.push(SpecViolation::OddPathCount { count: odd });
            }
            let units = paths.iter().filter(|&&q| q == 1).count();
            if units > 1 {
                v.push(SpecViolation::RepeatedUnitPath { count: units });
            }
        }
        FamilySpec::D { case, branches } => {
            for (index, &len) in branches.iter().enumerate() {
                if len == 0 {
                    v.push(SpecViolation::EmptyPath { index });
                }
            }
            if v.is_empty() {
                match d_case(branches) {
                    Ok(actual) if actual != *case => v.push(SpecViolation::CaseMismatch {
                        declared: *case,
                        actual,
                    }),
                    Ok(_) => {}
                    Err(e) => v.push(e),
                }
            }
        }
        FamilySpec::E { cycles } => {
            if cycles.len() < 2 {
                v.push(SpecViolation::TooFewParts {
                    count: cycles.len(),
                    min: 2,
                });
            }
            for (index, c) in cycles.iter().enumerate() {
                check_necklace_cycle(index, c.length, c.hub_distance, &mut v);
            }
            let sum: usize = cycles.iter().map(|c| c.hub_distance).sum();
            if sum.is_multiple_of(2) {
                v.push(SpecViolation::EvenDistanceSum { sum });
            }
        }
        FamilySpec::EPrime { parts } => {
            let k = parts.len();
            if k < 3 {
                v.push(SpecViolation::TooFewParts { count: k, min: 3 });
            }
            for (index, p) in parts.iter().enumerate() {
                match *p {
                    NecklacePart::Cycle {
                        length,
                        hub_distance,
                    } => check_necklace_cycle(index, length, hub_distance, &mut v),
                    NecklacePart::Path { length: 0 } => v.push(SpecViolation::EmptyPath { index }),
                    NecklacePart::Path { .. } => {}
                }
            }
            let cycles = parts.iter().filter(|p| !p.is_path()).count();
            if cycles < 2 {
                v.push(SpecViolation::TooFewEvenCycles { count: cycles });
            }
            if cycles == k {
                v.push(SpecViolation::NoPath);
            }
            for i in 0..k {
                let j = (i + 1) % k;
                if k > 1 && parts[i].is_path() && parts[j].is_path() {
                    v.push(SpecViolation::AdjacentPaths {
                        first: i,
                        second: j,
                    });
                }
            }
            let sum: usize = parts.iter().map(NecklacePart::hub_distance).sum();
            if sum.is_multiple_of(2) {
                v.push(SpecViolation::EvenDistanceSum { sum });
            }
        }
    }
    if v.is_empty() {
        Ok(())
    } else {
        Err(v)
    }
}

fn check_necklace_cycle(index: usize, length: usize, distance: usize, v: &mut Vec<SpecViolation>) {
    if length < 4 || length % 2 == 1 {
        v.push(SpecViolation::EvenCycleLength { index, length });
    }
    let max = length / 2;
    if distance == 0 || distance > max {
        v.push(SpecViolation::HubDistance {
            index,
            distance,
            max,
        });
    }
}

/// One constituent of a construction: a cycle (vertices in cyclic order) or
/// a path (vertices from end to end).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Part {
    pub vertices: Vec<usize>,
    pub closed: bool,
}

impl Part {
    pub fn edges(&self) -> Vec<Edge> {
        let vs = &self.vertices;
        let mut e: Vec<Edge> = vs.windows(2).map(|w| Edge::new(w[0], w[1])).collect();
        if self.closed {
            e.push(Edge::new(vs[vs.len() - 1], vs[0]));
        }
        e.sort_unstable();
        e
    }
}

/// A built family member with the layout of its parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Construction {
    pub graph: Graph,
    pub parts: Vec<Part>,
    /// Glued vertices: the shared vertex (B), the two hubs (C), the branch
    /// vertices (D), or the ring hubs `y_1 = x_2, ..., y_k = x_1` (E, E').
    pub hubs: Vec<usize>,
}

/// Lays parts out on consecutive labels, then glues vertices. A glued class
/// keeps its smallest label and labels are compacted in order.
struct Layout {
    next: usize,
    edges: Vec<(usize, usize)>,
    parent: Vec<usize>,
    parts: Vec<Part>,
}

impl Layout {
    fn new() -> Self {
        Layout {
            next: 0,
            edges: Vec::new(),
            parent: Vec::new(),
            parts: Vec::new(),
        }
    }

    fn fresh(&mut self, count: usize) -> Vec<usize> {
        let vs: Vec<usize> = (self.next..self.next + count).collect();
        self.parent.extend(vs.iter().copied());
        self.next += count;
        vs
    }

    fn cycle(&mut self, len: usize) -> Vec<usize> {
        let vs = self.fresh(len);
        for i in 0..len {
            self.edges.push((vs[i], vs[(i + 1) % len]));
        }
        self.parts.push(Part {
            vertices: vs.clone(),
            closed: true,
        });
        vs
    }

    fn path(&mut self, len: usize) -> Vec<usize> {
        let vs = self.fresh(len + 1);
        for w in vs.windows(2) {
            self.edges.push((w[0], w[1]));
        }
        self.parts.push(Part {
            vertices: vs.clone(),
            closed: false,
        });
        vs
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn identify(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
    }

    fn finish(mut self, hubs: &[usize]) -> Construction {
        let roots: Vec<usize> = (0..self.next).map(|v| self.find(v)).collect();
        let mut label = vec![usize::MAX; self.next];
        let mut n = 0;
        for v in 0..self.next {
            if roots[v] == v {
                label[v] = n;
                n += 1;
            }
        }
        let map = |v: usize| label[roots[v]];
        let pairs: Vec<(usize, usize)> =
            self.edges.iter().map(|&(a, b)| (map(a), map(b))).collect();
        let graph =
            Graph::from_edge_list(n, pairs.iter().copied()).expect("construction is loop-free");
        assert_eq!(
            graph.m(),
            pairs.len(),
            "construction produced parallel edges"
        );
        let parts = self
            .parts
            .iter()
            .map(|p| Part {
                vertices: p.vertices.iter().map(|&v| map(v)).collect(),
                closed: p.closed,
            })
            .collect();
        Construction {
            graph,
            parts,
            hubs: hubs.iter().map(|&v| map(v)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid family spec: {}", join_violations(.0))]
pub struct InvalidSpec(pub Vec<SpecViolation>);

fn join_violations(v: &[SpecViolation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

pub fn build_family(spec: &FamilySpec) -> Result<Graph, InvalidSpec> {
    construct(spec).map(|c| c.graph)
}

/// Builds the graph described by `spec`, keeping the part layout.
pub fn construct(spec: &FamilySpec) -> Result<Construction, InvalidSpec> {
    validate_spec(spec).map_err(InvalidSpec)?;
    let mut l = Layout::new();
    let construction = match spec {
        FamilySpec::A { cycles } => {
            l.cycle(cycles[0]);
            l.cycle(cycles[1]);
            l.finish(&[])
        }
        FamilySpec::B { cycles } => {
            let a = l.cycle(cycles[0]);
            let b = l.cycle(cycles[1]);
            l.identify(a[0], b[0]);
            l.finish(&[a[0]])
        }
        FamilySpec::C { paths } => {
            let first = l.path(paths[0]);
            let (x, y) = (first[0], first[paths[0]]);
            for &q in &paths[1..] {
                let p = l.path(q);
                l.identify(p[0], x);
                l.identify(p[q], y);
            }
            l.finish(&[x, y])
        }
        FamilySpec::D { branches, .. } => {
            let corners = l.fresh(4);
            for (&(a, b), &len) in K4_PAIRS.iter().zip(branches) {
                let p = l.path(len);
                l.identify(p[0], corners[a]);
                l.identify(p[len], corners[b]);
            }
            l.finish(&corners)
        }
        FamilySpec::E { cycles } => {
            let ends: Vec<(usize, usize)> = cycles
                .iter()
                .map(|c| {
                    let vs = l.cycle(c.length);
                    (vs[0], vs[c.hub_distance])
                })
                .collect();
            let hubs = glue_ring(&mut l, &ends);
            l.finish(&hubs)
        }
        FamilySpec::EPrime { parts } => {
            let ends: Vec<(usize, usize)> = parts
                .iter()
                .map(|p| match *p {
                    NecklacePart::Cycle {
                        length,
                        hub_distance,
                    } => {
                        let vs = l.cycle(length);
                        (vs[0], vs[hub_distance])
                    }
                    NecklacePart::Path { length } => {
                        let vs = l.path(length);
                        (vs[0], vs[length])
                    }
                })
                .collect();
            let hubs = glue_ring(&mut l, &ends);
            l.finish(&hubs)
        }
    };
    Ok(construction)
}

/// Identifies `y_i` with `x_{i+1}` and `y_k` with `x_1`; returns the `y_i`.
fn glue_ring(l: &mut Layout, ends: &[(usize, usize)]) -> Vec<usize> {
    let k = ends.len();
    for i in 0..k {
        l.identify(ends[i].1, ends[(i + 1) % k].0);
    }
    ends.iter().map(|&(_, y)| y).collect()
}

/// A maximal path between hubs whose interior avoids hubs.
#[derive(Clone, Debug)]
struct Arc {
    start: usize,
    end: usize,
    len: usize,
}

/// Every arc between hubs, each reported once. `None` if some arc closes
/// on its own start, or if arcs miss some edge (a hub-free component).
fn hub_arcs(g: &Graph, is_hub: &[bool]) -> Option<Vec<Arc>> {
    let mut arcs = Vec::new();
    let mut covered = 0;
    for h in (0..g.n()).filter(|&v| is_hub[v]) {
        for &first in g.neighbors(h) {
            let (mut prev, mut cur, mut len) = (h, first, 1);
            while !is_hub[cur] {
                let nb = g.neighbors(cur);
                if nb.len() != 2 {
                    return None;
                }
                let next = if nb[0] == prev { nb[1] } else { nb[0] };
                prev = cur;
                cur = next;
                len += 1;
            }
            if cur == h {
                return None;
            }
            // Keep the traversal whose (start, second vertex) is smaller.
            if (h, first) < (cur, prev) {
                covered += len;
                arcs.push(Arc {
                    start: h,
                    end: cur,
                    len,
                });
            }
        }
    }
    (covered == g.m()).then_some(arcs)
}

fn hubs_by_degree(g: &Graph, hub_degree: usize, other_degree: usize) -> Option<Vec<bool>> {
    (0..g.n())
        .map(|v| match g.degree(v) {
            d if d == hub_degree => Some(true),
            d if d == other_degree => Some(false),
            _ => None,
        })
        .collect()
}

pub fn recognize_a(g: &Graph) -> Option<FamilySpec> {
    if g.n() == 0 || (0..g.n()).any(|v| g.degree(v) != 2) {
        return None;
    }
    let comps = g.components();
    if comps.len() != 2 || comps.iter().any(|c| c.len() % 2 == 0) {
        return None;
    }
    Some(FamilySpec::A {
        cycles: sorted([comps[0].len(), comps[1].len()]),
    })
}

pub fn recognize_b(g: &Graph) -> Option<FamilySpec> {
    let is_hub = hubs_by_degree(g, 4, 2)?;
    if is_hub.iter().filter(|&&h| h).count() != 1 || !g.is_connected() {
        return None;
    }
    let s = blocks_and_cut_vertices(g);
    if s.cut_vertices.len() != 1 || s.blocks.len() != 2 {
        return None;
    }
    // With this degree profile each block is a cycle through the cut vertex.
    let lens = [s.blocks[0].len(), s.blocks[1].len()];
    if lens.iter().any(|l| l % 2 == 0) {
        return None;
    }
    Some(FamilySpec::B {
        cycles: sorted(lens),
    })
}

pub fn recognize_c(g: &Graph) -> Option<FamilySpec> {
    let is_hub = hubs_by_degree(g, 4, 2)?;
    if is_hub.iter().filter(|&&h| h).count() != 2 {
        return None;
    }
    let arcs = hub_arcs(g, &is_hub)?;
    if arcs.len() != 4 {
        return None;
    }
    let spec = FamilySpec::C {
        paths: sorted([arcs[0].len, arcs[1].len, arcs[2].len, arcs[3].len]),
    };
    validate_spec(&spec).ok().map(|_| spec)
}

pub fn recognize_d(g: &Graph) -> Option<FamilySpec> {
    let is_hub = hubs_by_degree(g, 3, 2)?;
    let corners: Vec<usize> = (0..g.n()).filter(|&v| is_hub[v]).collect();
    if corners.len() != 4 {
        return None;
    }
    let arcs = hub_arcs(g, &is_hub)?;
    if arcs.len() != 6 {
        return None;
    }
    let mut branches = [0usize; 6];
    for a in &arcs {
        let i = corners.binary_search(&a.start).ok()?;
        let j = corners.binary_search(&a.end).ok()?;
        let slot = k4_pair_index(i, j);
        if branches[slot] != 0 {
            return None;
        }
        branches[slot] = a.len;
    }
    let branches = least_k4_labelling(&branches);
    let case = d_case(&branches).ok()?;
    Some(FamilySpec::D { case, branches })
}

pub fn recognize_e(g: &Graph) -> Option<FamilySpec> {
    let is_hub = hubs_by_degree(g, 4, 2)?;
    let hubs: Vec<usize> = (0..g.n()).filter(|&v| is_hub[v]).collect();
    let k = hubs.len();
    if k < 2 {
        return None;
    }
    let arcs = hub_arcs(g, &is_hub)?;

    let bead = |a: usize, b: usize| {
        (a % 2 == b % 2).then(|| NecklaceCycle {
            length: a + b,
            hub_distance: a.min(b),
        })
    };

    let cycles = if k == 2 {
        let (odd, even): (Vec<&Arc>, Vec<&Arc>) = arcs.iter().partition(|a| a.len % 2 == 1);
        if odd.len() != 2 || even.len() != 2 {
            return None;
        }
        vec![
            bead(odd[0].len, odd[1].len)?,
            bead(even[0].len, even[1].len)?,
        ]
    } else {
        // Each hub must see exactly two other hubs, through two arcs each.
        let between = |a: usize, b: usize| -> Vec<usize> {
            arcs.iter()
                .filter(|x| (x.start, x.end) == (a, b) || (x.start, x.end) == (b, a))
                .map(|x| x.len)
                .collect()
        };
        let mut ring = vec![hubs[0]];
        let mut prev = usize::MAX;
        let mut cur = hubs[0];
        loop {
            let mut nbrs: Vec<usize> = arcs
                .iter()
                .filter_map(|a| {
                    if a.start == cur {
                        Some(a.end)
                    } else if a.end == cur {
                        Some(a.start)
                    } else {
                        None
                    }
                })
                .collect();
            nbrs.sort_unstable();
            nbrs.dedup();
            if nbrs.len() != 2 {
                return None;
            }
            let next = if nbrs[0] != prev { nbrs[0] } else { nbrs[1] };
            if next == hubs[0] {
                break;
            }
            if ring.contains(&next) {
                return None;
            }
            ring.push(next);
            prev = cur;
            cur = next;
        }
        if ring.len() != k {
            return None;
        }
        let mut beads = Vec::with_capacity(k);
        for i in 0..k {
            let lens = between(ring[i], ring[(i + 1) % k]);
            if lens.len() != 2 {
                return None;
            }
            beads.push(bead(lens[0], lens[1])?);
        }
        beads
    };

    let sum: usize = cycles.iter().map(|c| c.hub_distance).sum();
    if sum.is_multiple_of(2) {
        return None;
    }
    Some(FamilySpec::E {
        cycles: least_ring_rotation(&cycles),
    })
}

/// First family among A, B, C, D, E whose recognizer accepts `g`.
pub fn recognize_family(g: &Graph) -> Option<FamilySpec> {
    recognize_a(g)
        .or_else(|| recognize_b(g))
        .or_else(|| recognize_c(g))
        .or_else(|| recognize_d(g))
        .or_else(|| recognize_e(g))
}

pub fn classify(g: &Graph) -> Option<FamilyTag> {
    recognize_family(g).map(|s| s.tag())
}

/// Every family among A..E that accepts `g`. The only expected overlap is
/// C with two-bead necklaces, which are the same graphs.
pub fn matching_families(g: &Graph) -> Vec<FamilyTag> {
    type Recognizer = fn(&Graph) -> Option<FamilySpec>;
    let recognizers: [(FamilyTag, Recognizer); 5] = [
        (FamilyTag::A, recognize_a),
        (FamilyTag::B, recognize_b),
        (FamilyTag::C, recognize_c),
        (FamilyTag::D, recognize_d),
        (FamilyTag::E, recognize_e),
    ];
    recognizers
        .iter()
        .filter(|(_, r)| r(g).is_some())
        .map(|&(t, _)| t)
        .collect()
}

/// Every valid spec of family `tag` whose graph has at most `max_vertices`
/// vertices. Parameters range over the full grid, so symmetric variants of
/// one graph all appear.
pub fn enumerate_specs(tag: FamilyTag, max_vertices: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    let odd_lengths = || (3..=max_vertices).step_by(2);
    match tag {
        FamilyTag::A | FamilyTag::B => {
            for a in odd_lengths() {
                for b in odd_lengths() {
                    let spec = if tag == FamilyTag::A {
                        FamilySpec::A { cycles: [a, b] }
                    } else {
                        FamilySpec::B { cycles: [a, b] }
                    };
                    if spec.vertex_count() <= max_vertices {
                        out.push(spec);
                    }
                }
            }
        }
        FamilyTag::C => {
            let budget = max_vertices.saturating_sub(2);
            for_each_tuple::<4>(budget, &mut |paths| {
                let spec = FamilySpec::C { paths };
                if validate_spec(&spec).is_ok() {
                    out.push(spec);
                }
            });
        }
        FamilyTag::D => {
            let budget = max_vertices.saturating_sub(4);
            for_each_tuple::<6>(budget, &mut |branches| {
                if let Ok(case) = d_case(&branches) {
                    out.push(FamilySpec::D { case, branches });
                }
            });
        }
        FamilyTag::E => {
            for cycles in necklace_sequences(max_vertices, 2) {
                let spec = FamilySpec::E { cycles };
                if validate_spec(&spec).is_ok() {
                    out.push(spec);
                }
            }
        }
        FamilyTag::EPrime => {
            for parts in necklace_part_sequences(max_vertices) {
                let spec = FamilySpec::EPrime { parts };
                if validate_spec(&spec).is_ok() {
                    out.push(spec);
                }
            }
        }
    }
    out
}

/// Tuples of positive lengths whose "interior vertex" total
/// `sum(len - 1)` stays within `budget`.
fn for_each_tuple<const N: usize>(budget: usize, f: &mut dyn FnMut([usize; N])) {
    fn rec<const N: usize>(
        at: usize,
        left: usize,
        cur: &mut [usize; N],
        f: &mut dyn FnMut([usize; N]),
    ) {
        if at == N {
            f(*cur);
            return;
        }
        for extra in 0..=left {
            cur[at] = extra + 1;
            rec(at + 1, left - extra, cur, f);
        }
    }
    rec(0, budget, &mut [0; N], f);
}

fn necklace_sequences(max_vertices: usize, min_beads: usize) -> Vec<Vec<NecklaceCycle>> {
    let beads: Vec<NecklaceCycle> = (4..=max_vertices + 1)
        .step_by(2)
        .flat_map(|length| {
            (1..=length / 2).map(move |hub_distance| NecklaceCycle {
                length,
                hub_distance,
            })
        })
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        beads: &[NecklaceCycle],
        max_vertices: usize,
        min_beads: usize,
        cur: &mut Vec<NecklaceCycle>,
        out: &mut Vec<Vec<NecklaceCycle>>,
    ) {
        let used: usize = cur.iter().map(|c| c.length - 1).sum();
        if cur.len() >= min_beads {
            out.push(cur.clone());
        }
        for b in beads {
            if used + b.length - 1 <= max_vertices {
                cur.push(*b);
                rec(beads, max_vertices, min_beads, cur, out);
                cur.pop();
            }
        }
    }
    rec(&beads, max_vertices, min_beads, &mut cur, &mut out);
    out
}

fn necklace_part_sequences(max_vertices: usize) -> Vec<Vec<NecklacePart>> {
    let mut parts: Vec<NecklacePart> = (4..=max_vertices + 1)
        .step_by(2)
        .flat_map(|length| {
            (1..=length / 2).map(move |hub_distance| NecklacePart::Cycle {
                length,
                hub_distance,
            })
        })
        .collect();
    parts.extend((1..=max_vertices).map(|length| NecklacePart::Path { length }));
    // Each part adds (its vertex count - 1) vertices to the ring.
    let cost = |p: &NecklacePart| match *p {
        NecklacePart::Cycle { length, .. } => length - 1,
        NecklacePart::Path { length } => length,
    };
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        parts: &[NecklacePart],
        cost: &dyn Fn(&NecklacePart) -> usize,
        max_vertices: usize,
        cur: &mut Vec<NecklacePart>,
        out: &mut Vec<Vec<NecklacePart>>,
    ) {
        let used: usize = cur.iter().map(cost).sum();
        if cur.len() >= 3 {
            out.push(cur.clone());
        }
        for p in parts {
            if used + cost(p) <= max_vertices {
                cur.push(*p);
                rec(parts, cost, max_vertices, cur, out);
                cur.pop();
            }
        }
    }
    rec(&parts, &cost, max_vertices, &mut cur, &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed family spec `{input}`: {reason}")]
pub struct SpecParseError {
    pub input: String,
    pub reason: String,
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |xs: &[usize]| {
            xs.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            FamilySpec::A { cycles } => write!(f, "A:{}", list(cycles)),
            FamilySpec::B { cycles } => write!(f, "B:{}", list(cycles)),
            FamilySpec::C { paths } => write!(f, "C:{}", list(paths)),
            FamilySpec::D { case, branches } => write!(f, "D:{case}:{}", list(branches)),
            FamilySpec::E { cycles } => {
                let beads: Vec<String> = cycles
                    .iter()
                    .map(|c| format!("{},{}", c.length, c.hub_distance))
                    .collect();
                write!(f, "E:{}", beads.join(";"))
            }
            FamilySpec::EPrime { parts } => {
                let beads: Vec<String> = parts
                    .iter()
                    .map(|p| match *p {
                        NecklacePart::Cycle {
                            length,
                            hub_distance,
                        } => format!("{length},{hub_distance}"),
                        NecklacePart::Path { length } => format!("p{length}"),
                    })
                    .collect();
                write!(f, "E':{}", beads.join(";"))
            }
        }
    }
}

/// Compact syntax: `A:3,5`, `B:3,3`, `C:1,2,2,3`, `D:1,1,1,1,1,3` (an
/// optional case such as `D:i:...` must match the parities),
/// `E:4,1;4,1;4,1` (length,hub distance per cycle), and `E':4,1;p3;4,1`
/// (`pN` is a path of length N).
impl FromStr for FamilySpec {
    type Err = SpecParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fail = |reason: &str| SpecParseError {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let numbers = |body: &str| -> Result<Vec<usize>, SpecParseError> {
            body.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| fail("expected a comma-separated list of lengths"))
                })
                .collect()
        };
        let fixed = |body: &str, n: usize| -> Result<Vec<usize>, SpecParseError> {
            let v = numbers(body)?;
            if v.len() != n {
                return Err(fail(&format!("expected {n} lengths, found {}", v.len())));
            }
            Ok(v)
        };
        let s_trim = s.trim();
        let (tag, body) = s_trim
            .split_once(':')
            .ok_or_else(|| fail("expected `<family>:<parameters>`"))?;
        match tag.trim() {
            "A" | "B" => {
                let v = fixed(body, 2)?;
                let cycles = [v[0], v[1]];
                Ok(if tag.trim() == "A" {
                    FamilySpec::A { cycles }
                } else {
                    FamilySpec::B { cycles }
                })
            }
            "C" => {
                let v = fixed(body, 4)?;
                Ok(FamilySpec::C {
                    paths: [v[0], v[1], v[2], v[3]],
                })
            }
            "D" => {
                let (declared, lengths) = match body.split_once(':') {
                    Some((c, rest)) => (Some(c.trim()), rest),
                    None => (None, body),
                };
                let v = fixed(lengths, 6)?;
                let branches = [v[0], v[1], v[2], v[3], v[4], v[5]];
                let case = match declared {
                    Some("i") => DCase::AllOdd,
                    Some("ii") => DCase::OddTriangle,
                    Some("iii") => DCase::OddMatching,
                    Some(_) => return Err(fail("case must be i, ii or iii")),
                    None => d_case(&branches).map_err(|e| fail(&e.to_string()))?,
                };
                Ok(FamilySpec::D { case, branches })
            }
            "E" => {
                let cycles = body
                    .split(';')
                    .map(|bead| {
                        let v = fixed(bead, 2)?;
                        Ok(NecklaceCycle {
                            length: v[0],
                            hub_distance: v[1],
                        })
                    })
                    .collect::<Result<Vec<_>, SpecParseError>>()?;
                Ok(FamilySpec::E { cycles })
            }
            "E'" | "Ep" => {
                let parts = body
                    .split(';')
                    .map(|bead| {
                        let bead = bead.trim();
                        if let Some(len) = bead.strip_prefix('p') {
                            let v = fixed(len, 1)?;
                            Ok(NecklacePart::Path { length: v[0] })
                        } else {
                            let v = fixed(bead, 2)?;
                            Ok(NecklacePart::Cycle {
                                length: v[0],
                                hub_distance: v[1],
                            })
                        }
                    })
                    .collect::<Result<Vec<_>, SpecParseError>>()?;
                Ok(FamilySpec::EPrime { parts })
            }
            _ => Err(fail("family must be one of A, B, C, D, E, E'")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_graphs::*;

    fn spec(s: &str) -> FamilySpec {
        s.parse().unwrap()
    }

    #[test]
    fn validation_names_each_constraint() {
        assert_eq!(
            validate_spec(&spec("C:1,1,2,2")),
            Err(vec![SpecViolation::RepeatedUnitPath { count: 2 }])
        );
        assert_eq!(
            validate_spec(&spec("E:4,1;4,1")),
            Err(vec![SpecViolation::EvenDistanceSum { sum: 2 }])
        );
        assert_eq!(
            validate_spec(&spec("E':4,1;p1;p1;4,2")),
            Err(vec![SpecViolation::AdjacentPaths {
                first: 1,
                second: 2
            }])
        );
        assert_eq!(
            validate_spec(&FamilySpec::A { cycles: [3, 4] }),
            Err(vec![SpecViolation::OddCycleLength {
                index: 1,
                length: 4
            }])
        );
        assert_eq!(
            validate_spec(&FamilySpec::D {
                case: DCase::AllOdd,
                branches: [1; 6]
            }),
            Err(vec![SpecViolation::UnsubdividedK4])
        );
        assert!(matches!(
            validate_spec(&FamilySpec::D {
                case: DCase::OddTriangle,
                branches: [1, 2, 2, 1, 2, 1]
            }),
            Err(v) if matches!(v[0], SpecViolation::BranchParity { .. })
        ));
        assert_eq!(
            validate_spec(&FamilySpec::D {
                case: DCase::OddTriangle,
                branches: [1, 1, 1, 1, 1, 3]
            }),
            Err(vec![SpecViolation::CaseMismatch {
                declared: DCase::OddTriangle,
                actual: DCase::AllOdd
            }])
        );
        assert_eq!(
            validate_spec(&spec("E:4,3;4,2")),
            Err(vec![SpecViolation::HubDistance {
                index: 0,
                distance: 3,
                max: 2
            }])
        );
        assert_eq!(
            validate_spec(&spec("E':4,1;6,2;4,2")),
            Err(vec![SpecViolation::NoPath])
        );
    }

    #[test]
    fn small_constructions() {
        let a = build_family(&spec("A:3,3")).unwrap();
        assert_eq!((a.n(), a.m()), (6, 6));
        assert_eq!(a, disjoint_triangles());

        let e = build_family(&spec("E:4,1;4,1;4,1")).unwrap();
        assert_eq!((e.n(), e.m()), (9, 12));
        assert_eq!((0..9).filter(|&v| e.degree(v) == 4).count(), 3);

        let d = build_family(&spec("D:i:1,1,1,1,1,3")).unwrap();
        assert_eq!((d.n(), d.m()), (6, 8));
        assert_eq!(crate::stability::chromatic_number(&d), Ok(3));

        let b = build_family(&spec("B:3,3")).unwrap();
        assert_eq!(b, bowtie());

        let c = build_family(&spec("C:1,2,2,3")).unwrap();
        assert_eq!(c, theta(&[1, 2, 2, 3]));
    }

    #[test]
    fn vertex_counts_match_constructions() {
        for s in [
            "A:3,5",
            "B:5,7",
            "C:1,3,2,4",
            "D:ii:1,1,2,1,2,2",
            "E:6,3;4,2",
            "E':4,1;p2;6,2",
        ] {
            let s = spec(s);
            assert_eq!(build_family(&s).unwrap().n(), s.vertex_count(), "{s}");
        }
    }

    #[test]
    fn recognition_of_named_graphs() {
        assert_eq!(recognize_family(&bowtie()), Some(spec("B:3,3")));
        assert_eq!(recognize_family(&disjoint_triangles()), Some(spec("A:3,3")));
        assert_eq!(classify(&theta(&[1, 2, 2, 3])), Some(FamilyTag::C));
        assert_eq!(classify(&cycle_graph(5)), None);
        assert_eq!(classify(&cycle_graph(6)), None);
        assert_eq!(classify(&complete_graph(4)), None);
    }

    #[test]
    fn necklace_round_trip_normalizes() {
        let s = spec("E:6,1;4,2;4,2");
        let g = build_family(&s).unwrap();
        assert_eq!(recognize_e(&g), Some(s.normalized()));
        assert_eq!(s.normalized(), spec("E:4,2;4,2;6,1"));
    }

    #[test]
    fn two_bead_necklace_is_c() {
        let g = build_family(&spec("E:4,1;4,2")).unwrap();
        assert_eq!(classify(&g), Some(FamilyTag::C));
        assert_eq!(matching_families(&g), vec![FamilyTag::C, FamilyTag::E]);
        assert_eq!(recognize_e(&g), Some(spec("E:4,1;4,2")));
        assert_eq!(recognize_c(&g), Some(spec("C:1,2,2,3")));
    }

    #[test]
    fn d_recognition_normalizes_labelling() {
        let s = spec("D:3,1,1,1,1,1");
        let g = build_family(&s).unwrap();
        assert_eq!(recognize_d(&g), Some(spec("D:1,1,1,1,1,3")));
    }

    #[test]
    fn parse_and_display_round_trip() {
        for text in [
            "A:3,5",
            "B:3,3",
            "C:1,2,2,3",
            "D:iii:1,2,2,2,2,1",
            "E:4,1;4,1;4,1",
            "E':4,1;p3;4,1",
        ] {
            assert_eq!(spec(text).to_string(), text);
        }
        assert_eq!(spec("D:1,2,2,2,2,1"), spec("D:iii:1,2,2,2,2,1"));
        assert!("X:1".parse::<FamilySpec>().is_err());
        assert!("C:1,2".parse::<FamilySpec>().is_err());
        assert!("D:1,2,2,1,2,1".parse::<FamilySpec>().is_err());
        assert!("E:4;4".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn json_shape() {
        let s = serde_json::to_string(&spec("E:4,1;6,2")).unwrap();
        assert_eq!(
            s,
            r#"{"tag":"E","cycles":[{"length":4,"hub_distance":1},{"length":6,"hub_distance":2}]}"#
        );
        let d = serde_json::to_string(&spec("D:1,1,1,1,1,3")).unwrap();
        assert_eq!(d, r#"{"tag":"D","case":"i","branches":[1,1,1,1,1,3]}"#);
        let p = serde_json::to_string(&spec("E':4,1;p2;4,2")).unwrap();
        assert!(p.starts_with(r#"{"tag":"E'","parts":[{"kind":"cycle","#));
        let back: FamilySpec = serde_json::from_str(&p).unwrap();
        assert_eq!(back, spec("E':4,1;p2;4,2"));
    }

    #[test]
    fn grids_are_valid_and_bounded() {
        for tag in [
            FamilyTag::A,
            FamilyTag::B,
            FamilyTag::C,
            FamilyTag::D,
            FamilyTag::E,
            FamilyTag::EPrime,
        ] {
            let specs = enumerate_specs(tag, 10);
            assert!(!specs.is_empty(), "{tag}");
            for s in &specs {
                assert_eq!(s.tag(), tag);
                assert!(validate_spec(s).is_ok(), "{s}");
                assert!(s.vertex_count() <= 10, "{s}");
            }
        }
        assert_eq!(enumerate_specs(FamilyTag::A, 6), vec![spec("A:3,3")]);
        assert_eq!(enumerate_specs(FamilyTag::B, 5), vec![spec("B:3,3")]);
    }
}
