//! Built-in graphs: the five-vertex fuzzy tree and the alternating 4- and 6-cycles.
//!
//! The same graphs ship as `.fzg` files under `data/`; a test keeps the two in sync.

use crate::error::Result;
use crate::graph::FuzzyGraph;

/// Five vertices, all σ = 1; `ab` is the only δ-edge.
pub fn five_vertex_fuzzy_tree() -> FuzzyGraph {
    FuzzyGraph::from_records(
        &[("a", "1"), ("b", "1"), ("c", "1"), ("d", "1"), ("e", "1")],
        &[
            ("a", "b", "0.1"),
            ("b", "c", "0.3"),
            ("e", "c", "0.3"),
            ("c", "d", "0.5"),
            ("a", "e", "0.6"),
        ],
    )
    .expect("valid built-in graph")
}

/// Maximum spanning tree of [`five_vertex_fuzzy_tree`].
pub fn five_vertex_fuzzy_tree_mst() -> FuzzyGraph {
    five_vertex_fuzzy_tree()
        .remove_edge("a", "b")
        .expect("edge ab exists")
}

/// `a-b-c-d-a` with `ab = cd = kappa`, `bc = ad = eta`, σ = 1.
pub fn saturated_c4(kappa: &str, eta: &str) -> Result<FuzzyGraph> {
    FuzzyGraph::from_records(
        &[("a", "1"), ("b", "1"), ("c", "1"), ("d", "1")],
        &[("a", "b", kappa), ("b", "c", eta), ("c", "d", kappa), ("a", "d", eta)],
    )
}

/// `a-b-c-d-e-f-a` with `ab = cd = ef = kappa`, `bc = de = af = eta`, σ = 1.
pub fn saturated_c6(kappa: &str, eta: &str) -> Result<FuzzyGraph> {
    FuzzyGraph::from_records(
        &[("a", "1"), ("b", "1"), ("c", "1"), ("d", "1"), ("e", "1"), ("f", "1")],
        &[
            ("a", "b", kappa),
            ("b", "c", eta),
            ("c", "d", kappa),
            ("d", "e", eta),
            ("e", "f", kappa),
            ("a", "f", eta),
        ],
    )
}
