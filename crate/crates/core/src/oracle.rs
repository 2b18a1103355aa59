//! Exponential-time reference implementations, evaluated straight from the
//! definitions by enumerating simple paths. Test ground truth only.
//!
//! Nothing here calls into `connectivity` or `indices`: edge classes are
//! recomputed by path enumeration so that a classification bug cannot show up
//! on both sides of a comparison.

use crate::error::{Error, Result};
use crate::graph::FuzzyGraph;
use crate::membership::Membership;
use crate::value::IndexValue;

/// Largest graph the oracles accept.
pub const MAX_VERTICES: usize = 12;

struct Paths {
    n: usize,
    mu: Vec<Option<Membership>>,
}

impl Paths {
    fn new(g: &FuzzyGraph) -> Result<Self> {
        let n = g.vertex_count();
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(n));
        }
        let mut mu = vec![None; n * n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    mu[i * n + j] = g.mu_at(i, j);
                }
            }
        }
        Ok(Paths { n, mu })
    }

    fn edge(&self, i: usize, j: usize) -> Option<Membership> {
        self.mu[i * self.n + j]
    }

    /// Visit every simple path from `from` to `to` as its list of edge grades.
    fn for_each(&self, from: usize, to: usize, allow: &dyn Fn(usize, usize) -> bool, visit: &mut dyn FnMut(&[Membership])) {
        let mut on_path = vec![false; self.n];
        let mut grades = Vec::new();
        on_path[from] = true;
        self.walk(from, to, allow, &mut on_path, &mut grades, visit);
    }

    fn walk(
        &self,
        at: usize,
        to: usize,
        allow: &dyn Fn(usize, usize) -> bool,
        on_path: &mut [bool],
        grades: &mut Vec<Membership>,
        visit: &mut dyn FnMut(&[Membership]),
    ) {
        if at == to {
            visit(grades);
            return;
        }
        for next in 0..self.n {
            let Some(mu) = self.edge(at, next) else { continue };
            if on_path[next] || !allow(at, next) {
                continue;
            }
            on_path[next] = true;
            grades.push(mu);
            self.walk(next, to, allow, on_path, grades, visit);
            grades.pop();
            on_path[next] = false;
        }
    }

    /// Best path strength from `from` to `to` over paths accepted by `keep`.
    fn strongest(&self, from: usize, to: usize, keep: &dyn Fn(&[Membership]) -> bool) -> Membership {
        let mut best = Membership::ZERO;
        self.for_each(from, to, &|_, _| true, &mut |grades| {
            if keep(grades) {
                let strength = grades.iter().copied().min().unwrap_or(Membership::ZERO);
                best = best.max(strength);
            }
        });
        best
    }

    /// Strong-edge mask: μ(ij) ≥ best strength among i–j paths other than the edge itself.
    fn strong_mask(&self) -> Vec<bool> {
        let n = self.n;
        let mut strong = vec![false; n * n];
        for i in 0..n {
            for j in i + 1..n {
                let Some(mu) = self.edge(i, j) else { continue };
                // a simple i–j path other than the direct edge has at least two edges
                let residual = self.strongest(i, j, &|grades| grades.len() >= 2);
                let is_strong = mu >= residual;
                strong[i * n + j] = is_strong;
                strong[j * n + i] = is_strong;
            }
        }
        strong
    }

    fn shortest_strong(&self, strong: &[bool], from: usize, to: usize) -> Option<u64> {
        let n = self.n;
        let mut best: Option<u64> = None;
        self.for_each(from, to, &|a, b| strong[a * n + b], &mut |grades| {
            let length: u64 = grades.iter().map(|m| u64::from(m.micros())).sum();
            best = Some(best.map_or(length, |b| b.min(length)));
        });
        best
    }
}

fn endpoints(g: &FuzzyGraph, u: &str, v: &str) -> Result<(usize, usize)> {
    let i = g.require_index(u)?;
    let j = g.require_index(v)?;
    if i == j {
        return Err(Error::BadParams(format!("`{u}` given twice")));
    }
    Ok((i, j))
}

/// Maximum over all simple u–v paths of the weakest edge grade; 0 without a path.
pub fn conn_bruteforce(g: &FuzzyGraph, u: &str, v: &str) -> Result<Membership> {
    let paths = Paths::new(g)?;
    let (i, j) = endpoints(g, u, v)?;
    Ok(paths.strongest(i, j, &|_| true))
}

/// Minimum sum of μ over simple u–v paths made of strong edges only.
pub fn ds_bruteforce(g: &FuzzyGraph, u: &str, v: &str) -> Result<IndexValue> {
    let paths = Paths::new(g)?;
    let (i, j) = endpoints(g, u, v)?;
    let strong = paths.strong_mask();
    paths
        .shortest_strong(&strong, i, j)
        .map(IndexValue::from_micros)
        .ok_or_else(|| Error::StrongDisconnected(u.to_string(), v.to_string()))
}

fn weight(g: &FuzzyGraph, i: usize, j: usize) -> IndexValue {
    g.sigma_at(i).to_value() * g.sigma_at(j).to_value()
}

/// Σ σ(u)σ(v)·d_s(u, v) over unordered pairs.
pub fn wi_bruteforce(g: &FuzzyGraph) -> Result<IndexValue> {
    let paths = Paths::new(g)?;
    let strong = paths.strong_mask();
    let n = g.vertex_count();
    let mut total = IndexValue::zero();
    for i in 0..n {
        for j in i + 1..n {
            let d = paths.shortest_strong(&strong, i, j).ok_or_else(|| {
                Error::StrongDisconnected(g.vertex(i).to_string(), g.vertex(j).to_string())
            })?;
            total = total + weight(g, i, j) * IndexValue::from_micros(d);
        }
    }
    Ok(total)
}

/// Σ σ(u)σ(v)·CONN(u, v) over unordered pairs.
pub fn ci_bruteforce(g: &FuzzyGraph) -> Result<IndexValue> {
    let paths = Paths::new(g)?;
    let n = g.vertex_count();
    let mut total = IndexValue::zero();
    for i in 0..n {
        for j in i + 1..n {
            total = total + weight(g, i, j) * paths.strongest(i, j, &|_| true).to_value();
        }
    }
    Ok(total)
}
