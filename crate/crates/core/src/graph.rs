//! Immutable fuzzy graph model.
//!
//! Vertices are kept sorted by name, so vertex indices follow lexicographic
//! order and every iteration over vertices, edges or pairs is deterministic.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::membership::Membership;
use crate::value::IndexValue;

/// Vertex name: a nonempty token without whitespace.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if name.is_empty() || name.chars().any(char::is_whitespace) {
            return Err(Error::InvalidVertexName(name));
        }
        Ok(VertexId(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::borrow::Borrow<str> for VertexId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

/// An edge seen through vertex names, `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeRef<'a> {
    pub u: &'a VertexId,
    pub v: &'a VertexId,
    pub mu: Membership,
}

/// A simple undirected fuzzy graph `G: (σ, μ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyGraph {
    names: Vec<VertexId>,
    sigma: Vec<Membership>,
    // keyed (i, j) with i < j
    edges: BTreeMap<(usize, usize), Membership>,
    adjacency: Vec<Vec<(usize, Membership)>>,
}

/// Incremental validator behind [`build_graph`] and the `.fzg` parser.
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    vertices: BTreeMap<VertexId, Membership>,
    edges: BTreeMap<(VertexId, VertexId), Membership>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, id: VertexId, sigma: Membership) -> Result<&mut Self> {
        if self.vertices.contains_key(&id) {
            return Err(Error::DuplicateVertex(id.0));
        }
        self.vertices.insert(id, sigma);
        Ok(self)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId, mu: Membership) -> Result<&mut Self> {
        if u == v {
            return Err(Error::SelfLoop(u.0));
        }
        let su = *self.vertices.get(&u).ok_or_else(|| Error::UnknownEndpoint(u.0.clone()))?;
        let sv = *self.vertices.get(&v).ok_or_else(|| Error::UnknownEndpoint(v.0.clone()))?;
        if mu.is_zero() {
            return Err(Error::ZeroMu(u.0, v.0));
        }
        let bound = su.min(sv);
        if mu > bound {
            return Err(Error::MuExceedsSigma {
                u: u.0,
                v: v.0,
                mu: mu.to_string(),
                bound: bound.to_string(),
            });
        }
        let key = if u < v { (u, v) } else { (v, u) };
        if self.edges.contains_key(&key) {
            return Err(Error::DuplicateEdge(key.0 .0, key.1 .0));
        }
        self.edges.insert(key, mu);
        Ok(self)
    }

    pub fn build(self) -> FuzzyGraph {
        let (names, sigma): (Vec<_>, Vec<_>) = self.vertices.into_iter().unzip();
        let position = |id: &VertexId| names.binary_search(id).expect("validated endpoint");
        let edges = self
            .edges
            .iter()
            .map(|((u, v), &mu)| ((position(u), position(v)), mu))
            .collect();
        FuzzyGraph::from_parts(names, sigma, edges)
    }
}

/// Validate vertex and edge records and assemble a graph.
pub fn build_graph<V, E>(vertices: V, edges: E) -> Result<FuzzyGraph>
where
    V: IntoIterator<Item = (VertexId, Membership)>,
    E: IntoIterator<Item = (VertexId, VertexId, Membership)>,
{
    let mut builder = GraphBuilder::new();
    for (id, sigma) in vertices {
        builder.add_vertex(id, sigma)?;
    }
    for (u, v, mu) in edges {
        builder.add_edge(u, v, mu)?;
    }
    Ok(builder.build())
}

impl FuzzyGraph {
    fn from_parts(names: Vec<VertexId>, sigma: Vec<Membership>, edges: BTreeMap<(usize, usize), Membership>) -> Self {
        let mut adjacency = vec![Vec::new(); names.len()];
        for (&(i, j), &mu) in &edges {
            adjacency[i].push((j, mu));
            adjacency[j].push((i, mu));
        }
        for list in &mut adjacency {
            list.sort_unstable_by_key(|&(k, _)| k);
        }
        FuzzyGraph {
            names,
            sigma,
            edges,
            adjacency,
        }
    }

    /// Build from string records, e.g. `&[("a", "1")]` and `&[("a", "b", "0.1")]`.
    pub fn from_records(vertices: &[(&str, &str)], edges: &[(&str, &str, &str)]) -> Result<Self> {
        let vertices = vertices
            .iter()
            .map(|&(name, sigma)| Ok((VertexId::new(name)?, sigma.parse()?)))
            .collect::<Result<Vec<_>>>()?;
        let edges = edges
            .iter()
            .map(|&(u, v, mu)| Ok((VertexId::new(u)?, VertexId::new(v)?, mu.parse()?)))
            .collect::<Result<Vec<_>>>()?;
        build_graph(vertices, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertices in lexicographic order with their σ grades.
    pub fn vertices(&self) -> impl Iterator<Item = (&VertexId, Membership)> + '_ {
        self.names.iter().zip(self.sigma.iter().copied())
    }

    pub fn vertex(&self, index: usize) -> &VertexId {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.binary_search_by(|id| id.as_str().cmp(name)).ok()
    }

    pub(crate) fn require_index(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::NoSuchVertex(name.to_string()))
    }

    pub fn sigma(&self, name: &str) -> Option<Membership> {
        self.index_of(name).map(|i| self.sigma[i])
    }

    pub fn sigma_at(&self, index: usize) -> Membership {
        self.sigma[index]
    }

    /// Edges ordered by (u, v) name with u < v.
    pub fn edges(&self) -> impl Iterator<Item = EdgeRef<'_>> + '_ {
        self.edges.iter().map(|(&(i, j), &mu)| EdgeRef {
            u: &self.names[i],
            v: &self.names[j],
            mu,
        })
    }

    /// Edges as index triples `(i, j, μ)` with `i < j`.
    pub fn edge_indices(&self) -> impl Iterator<Item = (usize, usize, Membership)> + '_ {
        self.edges.iter().map(|(&(i, j), &mu)| (i, j, mu))
    }

    pub fn mu(&self, u: &str, v: &str) -> Option<Membership> {
        self.mu_at(self.index_of(u)?, self.index_of(v)?)
    }

    pub fn mu_at(&self, i: usize, j: usize) -> Option<Membership> {
        let key = if i < j { (i, j) } else { (j, i) };
        self.edges.get(&key).copied()
    }

    pub fn neighbors(&self, index: usize) -> &[(usize, Membership)] {
        &self.adjacency[index]
    }

    /// Copy of this graph without edge `uv`.
    pub fn remove_edge(&self, u: &str, v: &str) -> Result<FuzzyGraph> {
        let no_edge = || Error::NoSuchEdge(u.to_string(), v.to_string());
        let i = self.index_of(u).ok_or_else(no_edge)?;
        let j = self.index_of(v).ok_or_else(no_edge)?;
        self.remove_edge_at(i, j).ok_or_else(no_edge)
    }

    pub(crate) fn remove_edge_at(&self, i: usize, j: usize) -> Option<FuzzyGraph> {
        let key = if i < j { (i, j) } else { (j, i) };
        self.edges.contains_key(&key).then(|| self.retain_edges(|a, b, _| (a, b) != key))
    }

    /// Same vertex set, keeping only the edges accepted by `keep(i, j, μ)`.
    pub(crate) fn retain_edges(&self, mut keep: impl FnMut(usize, usize, Membership) -> bool) -> FuzzyGraph {
        let edges = self
            .edges
            .iter()
            .filter(|(&(i, j), &mu)| keep(i, j, mu))
            .map(|(&k, &mu)| (k, mu))
            .collect();
        FuzzyGraph::from_parts(self.names.clone(), self.sigma.clone(), edges)
    }

    /// Crisp connectivity of the edge skeleton. The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &(y, _) in self.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == n
    }

    /// Rename vertices. Names missing from `mapping` are kept.
    pub fn relabel(&self, mapping: &HashMap<&str, &str>) -> Result<FuzzyGraph> {
        let rename = |id: &VertexId| -> Result<VertexId> {
            match mapping.get(id.as_str()) {
                Some(new) => VertexId::new(*new),
                None => Ok(id.clone()),
            }
        };
        let vertices = self
            .vertices()
            .map(|(id, s)| Ok((rename(id)?, s)))
            .collect::<Result<Vec<_>>>()?;
        let edges = self
            .edges()
            .map(|e| Ok((rename(e.u)?, rename(e.v)?, e.mu)))
            .collect::<Result<Vec<_>>>()?;
        build_graph(vertices, edges)
    }

    /// Strength and length of the path through `names`.
    pub fn path(&self, names: &[&str]) -> Result<PathRecord> {
        if names.len() < 2 {
            return Err(Error::BadParams("a path needs at least two vertices".into()));
        }
        let indices = names.iter().map(|n| self.require_index(n)).collect::<Result<Vec<_>>>()?;
        let mut sorted = indices.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != indices.len() {
            return Err(Error::BadParams("path repeats a vertex".into()));
        }
        let mut strength = Membership::ONE;
        let mut length = 0u64;
        for w in indices.windows(2) {
            let mu = self
                .mu_at(w[0], w[1])
                .ok_or_else(|| Error::NoSuchEdge(self.names[w[0]].0.clone(), self.names[w[1]].0.clone()))?;
            strength = strength.min(mu);
            length += u64::from(mu.micros());
        }
        Ok(PathRecord {
            vertices: indices.into_iter().map(|i| self.names[i].clone()).collect(),
            strength,
            length: IndexValue::from_micros(length),
        })
    }
}

/// A simple path with its strength (weakest μ) and length (sum of μ).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathRecord {
    pub vertices: Vec<VertexId>,
    pub strength: Membership,
    pub length: IndexValue,
}
