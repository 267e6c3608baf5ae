//! Chromatic edge-stability and (3,2)-critical graphs.
//!
//! The chromatic edge-stability number `es(G)` of a graph is the minimum
//! number of edges whose deletion lowers the chromatic number. A graph is
//! *edge-stability critical* when deleting any single edge strictly lowers
//! `es`, and *(k, l)-critical* when it is edge-stability critical with
//! `χ = k` and `es = l`.
//!
//! This crate provides:
//!
//! * a small simple-graph type with graph6 coding, bipartiteness with odd
//!   cycle witnesses, block decomposition and open-ear machinery
//!   ([`graph`], [`graph6`], [`blocks`], [`ear`]);
//! * cycle enumeration and odd-cycle predicates ([`cycles`]);
//! * exact chromatic number, `es` with minimum witnesses and co-removal sets
//!   ([`stability`]);
//! * criticality deciders and reports ([`criticality`]);
//! * constructors and structural recognizers for the families of
//!   (3,2)-critical graphs ([`families`]);
//! * canonical labelling, labelled graph enumeration and the per-graph
//!   logic of the exhaustive characterization scan ([`canon`], [`scan`]).
//!
//! The crate is `no_std` and only needs `alloc`. Everything that needs `std`
//! lives in the `escrit` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod blocks;
pub mod canon;
pub mod criticality;
pub mod cycles;
pub mod ear;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod scan;
pub mod stability;

mod combinations;

#[cfg(test)]
pub(crate) mod test_graphs;

pub use blocks::{blocks_and_cut_vertices, is_nonseparable, BlockStructure};
pub use canon::{canonical_form, enumerate_labeled_graphs, CanonError};
pub use criticality::{
    criticality_report, is_edge_stability_critical, is_k_l_critical, CriticalityError,
    CriticalityReport,
};
pub use cycles::{
    all_odd_cycles_share_edge, count_odd_cycles, edge_on_odd_cycle, enumerate_cycles,
    pairwise_intersection_property, Cycle, CycleEnumeration, CycleError, OddCycleCensus,
};
pub use ear::{ear_decomposition, find_open_ear, Ear, EarError, Subgraph};
pub use families::{
    build_family, classify, recognize_family, validate_spec, FamilySpec, FamilyTag, SpecViolation,
};
pub use graph::{Bipartition, Edge, Graph, GraphError, Parity};
pub use graph6::{parse_graph6, to_graph6};
pub use scan::{scan_range, theorem_scan, ScanOptions, ScanReport, ScanSource, ScanTally};
pub use stability::{
    chromatic_number, co_removal_set, edge_stability_number, is_k_colorable, CoRemovalSet,
    StabilityError, StabilityReport,
};
