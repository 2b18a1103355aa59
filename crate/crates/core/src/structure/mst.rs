use std::collections::BTreeSet;

use crate::connectivity::strength_of_connectedness;
use crate::error::{Error, Result};
use crate::graph::{FuzzyGraph, VertexId};
use crate::value::IndexValue;

/// A maximum spanning tree `F` of a connected fuzzy graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    pub edges: BTreeSet<(VertexId, VertexId)>,
    pub total_strength: IndexValue,
    graph: FuzzyGraph,
}

impl SpanningTree {
    /// The tree as a fuzzy graph on the host's vertex set.
    pub fn graph(&self) -> &FuzzyGraph {
        &self.graph
    }

    pub fn into_graph(self) -> FuzzyGraph {
        self.graph
    }

    pub fn contains(&self, u: &str, v: &str) -> bool {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.edges
            .iter()
            .any(|(x, y)| x.as_str() == a && y.as_str() == b)
    }
}

struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// Kruskal on descending μ. Ties go to the lexicographically smaller edge.
pub fn maximum_spanning_tree(g: &FuzzyGraph) -> Result<SpanningTree> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut order: Vec<_> = g.edge_indices().collect();
    // edge_indices is already in (u, v) name order, so a stable sort keeps the tie-break
    order.sort_by(|a, b| b.2.cmp(&a.2));

    let mut sets = DisjointSets::new(g.vertex_count());
    let mut chosen = BTreeSet::new();
    let mut total = 0u64;
    for (i, j, mu) in order {
        if sets.union(i, j) {
            chosen.insert((i, j));
            total += u64::from(mu.micros());
        }
    }
    let graph = g.retain_edges(|i, j, _| chosen.contains(&(i, j)));
    Ok(SpanningTree {
        edges: chosen
            .iter()
            .map(|&(i, j)| (g.vertex(i).clone(), g.vertex(j).clone()))
            .collect(),
        total_strength: IndexValue::from_micros(total),
        graph,
    })
}

/// `Some(F)` when every edge outside the maximum spanning tree `F` is strictly
/// weaker than the strength between its endpoints inside `F`.
pub fn is_fuzzy_tree(g: &FuzzyGraph) -> Result<Option<SpanningTree>> {
    let tree = maximum_spanning_tree(g)?;
    let in_tree = strength_of_connectedness(tree.graph());
    let ok = g
        .edge_indices()
        .filter(|&(i, j, _)| tree.graph().mu_at(i, j).is_none())
        .all(|(i, j, mu)| mu < in_tree.at(i, j));
    Ok(ok.then_some(tree))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn names(t: &SpanningTree) -> Vec<String> {
        t.edges.iter().map(|(u, v)| format!("{u}{v}")).collect()
    }

    #[test]
    fn five_vertex_tree_mst() {
        let t = maximum_spanning_tree(&catalog::five_vertex_fuzzy_tree()).unwrap();
        assert_eq!(names(&t), ["ae", "bc", "cd", "ce"]);
        assert_eq!(t.total_strength, IndexValue::from_ratio(17, 10));
        assert_eq!(t.graph(), &catalog::five_vertex_fuzzy_tree_mst());
        assert!(t.contains("e", "a"));
    }

    #[test]
    fn tree_input_is_its_own_mst() {
        let f = catalog::five_vertex_fuzzy_tree_mst();
        let t = maximum_spanning_tree(&f).unwrap();
        assert_eq!(t.graph(), &f);
    }

    #[test]
    fn c4_drops_lexicographically_last_eta_edge() {
        let g = catalog::saturated_c4("0.5", "0.3").unwrap();
        let t = maximum_spanning_tree(&g).unwrap();
        // η-edges are ad and bc; ad sorts first and is kept
        assert_eq!(names(&t), ["ab", "ad", "cd"]);
        assert_eq!(t.total_strength, IndexValue::from_ratio(13, 10));
    }

    #[test]
    fn disconnected_graph_has_no_spanning_tree() {
        let g = FuzzyGraph::from_records(&[("a", "1"), ("b", "1")], &[]).unwrap();
        assert_eq!(maximum_spanning_tree(&g).unwrap_err(), Error::Disconnected);
        assert_eq!(is_fuzzy_tree(&g).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn fuzzy_tree_recognition() {
        assert!(is_fuzzy_tree(&catalog::five_vertex_fuzzy_tree()).unwrap().is_some());
        assert!(is_fuzzy_tree(&catalog::five_vertex_fuzzy_tree_mst()).unwrap().is_some());
        assert!(is_fuzzy_tree(&catalog::saturated_c4("0.5", "0.3").unwrap()).unwrap().is_none());
    }
}
