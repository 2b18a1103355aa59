//! Exact connectivity and Wiener indices of fuzzy graphs.
//!
//! Grades are fixed-point [`Membership`] values and indices are exact
//! [`IndexValue`] rationals, so every equality the library reports is exact.
//! Besides the indices themselves the crate recognises fuzzy trees and saturated
//! fuzzy cycles, ships brute-force [`oracle`]s for testing, and a [`falsifier`]
//! that checks two published claims about these indices on generated instances.

pub mod catalog;
pub mod connectivity;
pub mod error;
pub mod falsifier;
pub mod format;
pub mod graph;
pub mod indices;
pub mod membership;
pub mod oracle;
pub mod replication;
pub mod structure;
pub mod value;

pub use connectivity::{classify_edge, classify_edges, strength_of_connectedness, strong_subgraph, EdgeClass, StrengthMatrix};
pub use error::{Error, Result};
pub use falsifier::{check_corollary_star, check_theorem_star, search_counterexamples, ClaimId, ClaimVerdict, SizeRange};
pub use format::{parse_graph, to_fzg};
pub use graph::{build_graph, FuzzyGraph, PathRecord, VertexId};
pub use indices::{connectivity_index, geodesic_distance, index_report, theorem_star_formula, wiener_index, DistanceMatrix, IndexReport};
pub use membership::Membership;
pub use structure::{
    graph_kind, is_fuzzy_cycle, is_fuzzy_tree, is_saturated_fuzzy_cycle, make_saturated_cycle, maximum_spanning_tree,
    random_fuzzy_tree, GraphKind, SaturatedCycleSpec, SpanningTree,
};
pub use value::IndexValue;
