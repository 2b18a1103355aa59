//! Geodesic distance, Wiener index and connectivity index.
//!
//! A geodesic is a minimum-length path of the strong subgraph, where the length
//! of a path is the sum of its μ grades. Distances are minimised over all strong
//! paths, not only over the strongest ones.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::connectivity::{strength_of_connectedness, strong_subgraph};
use crate::error::{Error, Result};
use crate::graph::{FuzzyGraph, VertexId};
use crate::membership::Membership;
use crate::structure::{graph_kind, GraphKind, SaturatedCycleSpec};
use crate::value::IndexValue;

/// All-pairs `d_s(u, v)`, stored exactly in micro-units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    names: Vec<VertexId>,
    micros: Vec<u64>,
}

impl DistanceMatrix {
    pub fn get(&self, u: &str, v: &str) -> Option<IndexValue> {
        let i = self.position(u)?;
        let j = self.position(v)?;
        (i != j).then(|| self.at(i, j))
    }

    pub fn at(&self, i: usize, j: usize) -> IndexValue {
        IndexValue::from_micros(self.micros_at(i, j))
    }

    pub(crate) fn micros_at(&self, i: usize, j: usize) -> u64 {
        self.micros[i * self.names.len() + j]
    }

    /// Unordered pairs `(u, v, d_s)` with `u < v`.
    pub fn pairs(&self) -> impl Iterator<Item = (&VertexId, &VertexId, IndexValue)> + '_ {
        let n = self.names.len();
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (&self.names[i], &self.names[j], self.at(i, j))))
    }

    fn position(&self, name: &str) -> Option<usize> {
        self.names.binary_search_by(|id| id.as_str().cmp(name)).ok()
    }
}

/// Dijkstra from `source` over exact micro-unit weights.
fn shortest_from(g: &FuzzyGraph, source: usize) -> Vec<Option<u64>> {
    let mut dist: Vec<Option<u64>> = vec![None; g.vertex_count()];
    let mut heap = BinaryHeap::new();
    dist[source] = Some(0);
    heap.push(Reverse((0u64, source)));
    while let Some(Reverse((d, x))) = heap.pop() {
        if dist[x].is_some_and(|best| d > best) {
            continue;
        }
        for &(y, mu) in g.neighbors(x) {
            let nd = d + u64::from(mu.micros());
            if dist[y].is_none_or(|cur| nd < cur) {
                dist[y] = Some(nd);
                heap.push(Reverse((nd, y)));
            }
        }
    }
    dist
}

/// Row-major `n × n` strong-path distances; `None` where no strong path exists.
fn strong_distances(g: &FuzzyGraph) -> Vec<Option<u64>> {
    let strong = strong_subgraph(g);
    (0..strong.vertex_count())
        .into_par_iter()
        .flat_map_iter(|s| shortest_from(&strong, s))
        .collect()
}

pub fn geodesic_distance(g: &FuzzyGraph) -> Result<DistanceMatrix> {
    let n = g.vertex_count();
    let raw = strong_distances(g);
    let mut micros = Vec::with_capacity(n * n);
    for (k, d) in raw.into_iter().enumerate() {
        match d {
            Some(d) => micros.push(d),
            None => {
                let (i, j) = (k / n, k % n);
                let (i, j) = (i.min(j), i.max(j));
                return Err(Error::StrongDisconnected(g.vertex(i).to_string(), g.vertex(j).to_string()));
            }
        }
    }
    Ok(DistanceMatrix {
        names: g.vertices().map(|(id, _)| id.clone()).collect(),
        micros,
    })
}

fn sigma_product(g: &FuzzyGraph, i: usize, j: usize) -> BigInt {
    BigInt::from(g.sigma_at(i).micros()) * BigInt::from(g.sigma_at(j).micros())
}

/// Σ over unordered pairs of `σ(u)·σ(v)·d_s(u, v)`.
pub fn wiener_index(g: &FuzzyGraph) -> Result<IndexValue> {
    let ds = geodesic_distance(g)?;
    let n = g.vertex_count();
    let mut total = BigInt::from(0);
    for i in 0..n {
        for j in i + 1..n {
            total += sigma_product(g, i, j) * BigInt::from(ds.micros_at(i, j));
        }
    }
    Ok(IndexValue::from_scaled(total, 18))
}

/// Σ over unordered pairs of `σ(u)·σ(v)·CONN_G(u, v)`.
pub fn connectivity_index(g: &FuzzyGraph) -> IndexValue {
    let conn = strength_of_connectedness(g);
    let n = g.vertex_count();
    let mut total = BigInt::from(0);
    for i in 0..n {
        for j in i + 1..n {
            total += sigma_product(g, i, j) * BigInt::from(conn.at(i, j).micros());
        }
    }
    IndexValue::from_scaled(total, 18)
}

/// The published closed form `n[(n+3)² − 6]/16 · (κ + η)` for alternating saturated
/// cycles. It is wrong: it disagrees with [`wiener_index`] on every such cycle, and is
/// kept only so the two can be compared.
pub fn theorem_star_formula(spec: &SaturatedCycleSpec) -> IndexValue {
    let n = spec.n() as i64;
    let coefficient = IndexValue::from_ratio(n * ((n + 3) * (n + 3) - 6), 16);
    let kappa_plus_eta = IndexValue::from_micros(u64::from(spec.kappa().micros()) + u64::from(spec.eta().micros()));
    coefficient * kappa_plus_eta
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairRow {
    pub u: VertexId,
    pub v: VertexId,
    pub conn: Membership,
    /// `None` when `u` and `v` have no strong path between them.
    pub ds: Option<IndexValue>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexReport {
    /// `None` when the strong subgraph is disconnected.
    pub wiener: Option<IndexValue>,
    pub connectivity: IndexValue,
    pub pairs: Vec<PairRow>,
    pub kind: GraphKind,
    pub warnings: Vec<String>,
}

pub fn index_report(g: &FuzzyGraph) -> IndexReport {
    let n = g.vertex_count();
    let conn = strength_of_connectedness(g);
    let ds = strong_distances(g);
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    let mut wiener = Some(BigInt::from(0));
    for i in 0..n {
        for j in i + 1..n {
            let d = ds[i * n + j];
            wiener = match (wiener, d) {
                (Some(acc), Some(d)) => Some(acc + sigma_product(g, i, j) * BigInt::from(d)),
                _ => None,
            };
            pairs.push(PairRow {
                u: g.vertex(i).clone(),
                v: g.vertex(j).clone(),
                conn: conn.at(i, j),
                ds: d.map(IndexValue::from_micros),
            });
        }
    }
    let mut warnings: Vec<String> = g
        .vertices()
        .filter(|(_, s)| s.is_zero())
        .map(|(id, _)| format!("vertex {id} has sigma = 0 and contributes nothing to either index"))
        .collect();
    if wiener.is_none() {
        warnings.push("strong subgraph is disconnected; Wiener index unavailable".to_string());
    }
    IndexReport {
        wiener: wiener.map(|w| IndexValue::from_scaled(w, 18)),
        connectivity: connectivity_index(g),
        pairs,
        kind: graph_kind(g),
        warnings,
    }
}
