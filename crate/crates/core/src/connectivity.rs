//! Strength of connectedness and α/β/δ edge classification.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{FuzzyGraph, VertexId};
use crate::membership::Membership;

/// All-pairs `CONN_G(u, v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrengthMatrix {
    names: Vec<VertexId>,
    conn: Vec<Membership>,
}

impl StrengthMatrix {
    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    /// `None` for unknown names or `u == v`.
    pub fn get(&self, u: &str, v: &str) -> Option<Membership> {
        let i = self.position(u)?;
        let j = self.position(v)?;
        (i != j).then(|| self.at(i, j))
    }

    pub fn at(&self, i: usize, j: usize) -> Membership {
        self.conn[i * self.names.len() + j]
    }

    /// Unordered pairs `(u, v, conn)` with `u < v`.
    pub fn pairs(&self) -> impl Iterator<Item = (&VertexId, &VertexId, Membership)> + '_ {
        let n = self.names.len();
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (&self.names[i], &self.names[j], self.at(i, j))))
    }

    fn position(&self, name: &str) -> Option<usize> {
        self.names.binary_search_by(|id| id.as_str().cmp(name)).ok()
    }
}

/// Max-min closure over all intermediate vertices (widest-path Floyd–Warshall).
/// Pairs in different components get 0.
pub fn strength_of_connectedness(g: &FuzzyGraph) -> StrengthMatrix {
    let n = g.vertex_count();
    let mut s = vec![Membership::ZERO; n * n];
    for (i, j, mu) in g.edge_indices() {
        s[i * n + j] = mu;
        s[j * n + i] = mu;
    }
    for k in 0..n {
        for i in 0..n {
            let ik = s[i * n + k];
            if i == k || ik.is_zero() {
                continue;
            }
            for j in 0..n {
                if j == i || j == k {
                    continue;
                }
                let through = ik.min(s[k * n + j]);
                if through > s[i * n + j] {
                    s[i * n + j] = through;
                }
            }
        }
    }
    StrengthMatrix {
        names: g.vertices().map(|(id, _)| id.clone()).collect(),
        conn: s,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeClass {
    /// μ(uv) exceeds the strength of every other u–v path.
    AlphaStrong,
    /// μ(uv) ties the strongest other u–v path.
    BetaStrong,
    /// Some other u–v path is strictly stronger.
    Delta,
}

impl EdgeClass {
    pub fn is_strong(self) -> bool {
        !matches!(self, EdgeClass::Delta)
    }

    pub fn name(self) -> &'static str {
        match self {
            EdgeClass::AlphaStrong => "alpha",
            EdgeClass::BetaStrong => "beta",
            EdgeClass::Delta => "delta",
        }
    }

    fn from_comparison(mu: Membership, residual: Membership) -> Self {
        match mu.cmp(&residual) {
            std::cmp::Ordering::Greater => EdgeClass::AlphaStrong,
            std::cmp::Ordering::Equal => EdgeClass::BetaStrong,
            std::cmp::Ordering::Less => EdgeClass::Delta,
        }
    }
}

impl fmt::Display for EdgeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One classified edge, with `residual = CONN_{G-uv}(u, v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeClassification {
    pub u: VertexId,
    pub v: VertexId,
    pub mu: Membership,
    pub class: EdgeClass,
    pub residual: Membership,
}

pub fn classify_edge(g: &FuzzyGraph, u: &str, v: &str) -> Result<EdgeClass> {
    let no_edge = || Error::NoSuchEdge(u.to_string(), v.to_string());
    let i = g.index_of(u).ok_or_else(no_edge)?;
    let j = g.index_of(v).ok_or_else(no_edge)?;
    let mu = g.mu_at(i, j).ok_or_else(no_edge)?;
    Ok(EdgeClass::from_comparison(mu, residual_strength(g, i, j)))
}

fn residual_strength(g: &FuzzyGraph, i: usize, j: usize) -> Membership {
    let without = g.remove_edge_at(i, j).expect("edge exists");
    strength_of_connectedness(&without).at(i, j)
}

/// Classify every edge, in edge order. Edges are evaluated in parallel.
pub fn classify_edges(g: &FuzzyGraph) -> Vec<EdgeClassification> {
    let edges: Vec<_> = g.edge_indices().collect();
    edges
        .par_iter()
        .map(|&(i, j, mu)| {
            let residual = residual_strength(g, i, j);
            EdgeClassification {
                u: g.vertex(i).clone(),
                v: g.vertex(j).clone(),
                mu,
                class: EdgeClass::from_comparison(mu, residual),
                residual,
            }
        })
        .collect()
}

/// Same vertices, only α- and β-strong edges.
pub fn strong_subgraph(g: &FuzzyGraph) -> FuzzyGraph {
    let classes = classify_edges(g);
    let mut strong = classes.iter().map(|c| c.class.is_strong());
    // classify_edges preserves edge order
    g.retain_edges(|_, _, _| strong.next().expect("one class per edge"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn m(s: &str) -> Membership {
        s.parse().unwrap()
    }

    #[test]
    fn five_vertex_tree_strengths() {
        let g = catalog::five_vertex_fuzzy_tree();
        let s = strength_of_connectedness(&g);
        assert_eq!(s.get("a", "b"), Some(m("0.3")));
        assert_eq!(s.get("a", "e"), Some(m("0.6")));
        assert_eq!(s.get("c", "d"), Some(m("0.5")));
        assert_eq!(s.get("d", "e"), Some(m("0.3")));
        assert_eq!(s.get("e", "d"), Some(m("0.3")));
        assert_eq!(s.get("a", "a"), None);
    }

    #[test]
    fn single_edge_strength_is_mu() {
        let g = FuzzyGraph::from_records(&[("a", "1"), ("b", "0.7")], &[("a", "b", "0.42")]).unwrap();
        assert_eq!(strength_of_connectedness(&g).get("a", "b"), Some(m("0.42")));
    }

    #[test]
    fn disconnected_pairs_have_zero_strength() {
        let g = FuzzyGraph::from_records(&[("a", "1"), ("b", "1"), ("c", "1")], &[("a", "b", "0.5")]).unwrap();
        let s = strength_of_connectedness(&g);
        assert_eq!(s.get("a", "c"), Some(Membership::ZERO));
        assert_eq!(s.pairs().count(), 3);
    }

    #[test]
    fn five_vertex_tree_classes() {
        let g = catalog::five_vertex_fuzzy_tree();
        assert_eq!(classify_edge(&g, "a", "b").unwrap(), EdgeClass::Delta);
        let classes = classify_edges(&g);
        let delta: Vec<_> = classes.iter().filter(|c| c.class == EdgeClass::Delta).collect();
        assert_eq!(delta.len(), 1);
        assert_eq!(delta[0].residual, m("0.3"));
        assert_eq!(classes.iter().filter(|c| c.class == EdgeClass::AlphaStrong).count(), 4);
    }

    #[test]
    fn saturated_c4_classes() {
        let g = catalog::saturated_c4("0.5", "0.3").unwrap();
        for (u, v) in [("a", "b"), ("c", "d")] {
            assert_eq!(classify_edge(&g, u, v).unwrap(), EdgeClass::AlphaStrong);
        }
        for (u, v) in [("b", "c"), ("a", "d")] {
            assert_eq!(classify_edge(&g, u, v).unwrap(), EdgeClass::BetaStrong);
        }
        assert_eq!(strong_subgraph(&g), g);
    }

    #[test]
    fn bridge_is_alpha_strong() {
        let g = FuzzyGraph::from_records(&[("a", "1"), ("b", "1")], &[("a", "b", "0.2")]).unwrap();
        let c = classify_edges(&g);
        assert_eq!(c[0].class, EdgeClass::AlphaStrong);
        assert_eq!(c[0].residual, Membership::ZERO);
        assert_eq!(strong_subgraph(&g), g);
    }

    #[test]
    fn strong_subgraph_drops_delta_edge() {
        let g = catalog::five_vertex_fuzzy_tree();
        let h = strong_subgraph(&g);
        let kept: Vec<_> = h.edges().map(|e| format!("{}{}", e.u, e.v)).collect();
        assert_eq!(kept, ["ae", "bc", "cd", "ce"]);
        assert_eq!(h.vertex_count(), 5);
    }

    #[test]
    fn classify_missing_edge_errors() {
        let g = catalog::five_vertex_fuzzy_tree();
        assert!(matches!(classify_edge(&g, "a", "d"), Err(Error::NoSuchEdge(..))));
        assert!(matches!(classify_edge(&g, "a", "zz"), Err(Error::NoSuchEdge(..))));
    }
}
