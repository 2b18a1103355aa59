//! Spanning trees, graph-family recognition and instance generators.

mod generate;
mod kind;
mod mst;

pub use generate::{make_saturated_cycle, random_connected_graph, random_fuzzy_tree, SaturatedCycleSpec};
pub use kind::{graph_kind, is_fuzzy_cycle, is_saturated_fuzzy_cycle, GraphKind};
pub use mst::{is_fuzzy_tree, maximum_spanning_tree, SpanningTree};
