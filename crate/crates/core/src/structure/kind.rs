use crate::connectivity::{classify_edges, EdgeClass};
use crate::graph::FuzzyGraph;

use super::mst::is_fuzzy_tree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GraphKind {
    pub is_connected: bool,
    pub is_fuzzy_tree: bool,
    pub is_fuzzy_cycle: bool,
    pub is_saturated_fuzzy_cycle: bool,
}

pub fn graph_kind(g: &FuzzyGraph) -> GraphKind {
    let is_connected = g.is_connected();
    let is_fuzzy_tree = is_connected && matches!(is_fuzzy_tree(g), Ok(Some(_)));
    let is_fuzzy_cycle = is_fuzzy_cycle(g);
    GraphKind {
        is_connected,
        is_fuzzy_tree,
        is_fuzzy_cycle,
        is_saturated_fuzzy_cycle: is_fuzzy_cycle && saturated(g),
    }
}

fn is_crisp_cycle(g: &FuzzyGraph) -> bool {
    let n = g.vertex_count();
    n >= 3 && g.edge_count() == n && (0..n).all(|i| g.neighbors(i).len() == 2) && g.is_connected()
}

/// Crisp skeleton is one cycle through every vertex and the weakest μ occurs on at least two edges.
pub fn is_fuzzy_cycle(g: &FuzzyGraph) -> bool {
    if !is_crisp_cycle(g) {
        return false;
    }
    let weakest = g.edge_indices().map(|(_, _, mu)| mu).min().expect("cycle has edges");
    g.edge_indices().filter(|&(_, _, mu)| mu == weakest).count() >= 2
}

/// A fuzzy cycle where every vertex meets an α-strong and a β-strong edge.
pub fn is_saturated_fuzzy_cycle(g: &FuzzyGraph) -> bool {
    is_fuzzy_cycle(g) && saturated(g)
}

fn saturated(g: &FuzzyGraph) -> bool {
    let n = g.vertex_count();
    let mut has_alpha = vec![false; n];
    let mut has_beta = vec![false; n];
    for c in classify_edges(g) {
        let ends = [g.index_of(c.u.as_str()), g.index_of(c.v.as_str())];
        for i in ends.into_iter().flatten() {
            match c.class {
                EdgeClass::AlphaStrong => has_alpha[i] = true,
                EdgeClass::BetaStrong => has_beta[i] = true,
                EdgeClass::Delta => {}
            }
        }
    }
    has_alpha.iter().zip(&has_beta).all(|(&a, &b)| a && b)
}
