use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::connectivity::strength_of_connectedness;
use crate::error::{Error, Result};
use crate::graph::{build_graph, FuzzyGraph, VertexId};
use crate::membership::Membership;

/// Parameters of an alternating saturated fuzzy cycle: even `n ≥ 4`, `kappa > eta > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SaturatedCycleSpec {
    n: usize,
    kappa: Membership,
    eta: Membership,
}

impl SaturatedCycleSpec {
    pub fn new(n: usize, kappa: Membership, eta: Membership) -> Result<Self> {
        if n < 4 || n % 2 != 0 {
            return Err(Error::BadSpec(format!("n = {n} must be even and at least 4")));
        }
        if eta.is_zero() {
            return Err(Error::BadSpec("eta must be positive".into()));
        }
        if kappa <= eta {
            return Err(Error::BadSpec(format!("kappa = {kappa} must exceed eta = {eta}")));
        }
        Ok(SaturatedCycleSpec { n, kappa, eta })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kappa(&self) -> Membership {
        self.kappa
    }

    pub fn eta(&self) -> Membership {
        self.eta
    }
}

fn vertex_name(i: usize) -> VertexId {
    VertexId::new(format!("v{i}")).expect("generated names are valid")
}

/// Cycle `v0 … v(n-1)`, σ = 1, edge `(vi, vi+1)` graded κ for even `i` and η for odd `i`.
pub fn make_saturated_cycle(spec: &SaturatedCycleSpec) -> FuzzyGraph {
    let n = spec.n;
    let vertices = (0..n).map(|i| (vertex_name(i), Membership::ONE));
    let edges = (0..n).map(|i| {
        let mu = if i % 2 == 0 { spec.kappa } else { spec.eta };
        (vertex_name(i), vertex_name((i + 1) % n), mu)
    });
    build_graph(vertices, edges).expect("spec invariants give a valid graph")
}

/// Uniform labeled tree on `n` vertices from a random Prüfer sequence.
fn random_tree_edges(rng: &mut impl Rng, n: usize) -> Vec<(usize, usize)> {
    if n == 2 {
        return vec![(0, 1)];
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&i| degree[i] == 1).expect("a leaf always exists");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&i| degree[i] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn grid(hundredths: u32) -> Membership {
    Membership::from_hundredths(hundredths).expect("grid value in range")
}

/// Random fuzzy tree: a uniform labeled tree with grades on the 0.01 grid, plus up to
/// `extra_edges` δ-edges, each strictly weaker than the in-tree strength between its
/// endpoints. Deterministic in `(seed, n, extra_edges)`.
pub fn random_fuzzy_tree(seed: u64, n: usize, extra_edges: usize) -> Result<FuzzyGraph> {
    if n < 2 {
        return Err(Error::BadParams(format!("a fuzzy tree needs n >= 2, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sigma: Vec<u32> = (0..n).map(|_| rng.random_range(1..=100)).collect();
    let mut edges: Vec<(usize, usize, u32)> = random_tree_edges(&mut rng, n)
        .into_iter()
        .map(|(i, j)| (i, j, rng.random_range(1..=sigma[i].min(sigma[j]))))
        .collect();

    let vertices: Vec<_> = (0..n).map(|i| (vertex_name(i), grid(sigma[i]))).collect();
    let named = |edges: &[(usize, usize, u32)]| -> Vec<_> {
        edges
            .iter()
            .map(|&(i, j, h)| (vertex_name(i), vertex_name(j), grid(h)))
            .collect()
    };
    let tree = build_graph(vertices.clone(), named(&edges))?;
    if extra_edges == 0 {
        return Ok(tree);
    }

    // tree vertex indices are name-sorted; map generator index -> graph index
    let position: Vec<usize> = (0..n)
        .map(|i| tree.index_of(&format!("v{i}")).expect("generated vertex"))
        .collect();
    let in_tree = strength_of_connectedness(&tree);
    let mut adjacent = vec![false; n * n];
    for &(i, j, _) in &edges {
        adjacent[i * n + j] = true;
        adjacent[j * n + i] = true;
    }
    let mut added = 0;
    for _ in 0..extra_edges * 20 {
        if added == extra_edges {
            break;
        }
        let i = rng.random_range(0..n);
        let j = rng.random_range(0..n);
        if i == j || adjacent[i * n + j] {
            continue;
        }
        let limit = in_tree.at(position[i], position[j]).micros() / 10_000;
        if limit <= 1 {
            continue;
        }
        edges.push((i, j, rng.random_range(1..limit)));
        adjacent[i * n + j] = true;
        adjacent[j * n + i] = true;
        added += 1;
    }
    build_graph(vertices, named(&edges))
}

/// Random connected graph for oracle comparisons: a random spanning tree plus random
/// chords, σ and μ on a grid whose step is drawn from {0.01, 0.05, 0.1, 0.25} so that
/// ties (and hence β-strong edges) show up regularly.
pub fn random_connected_graph(seed: u64, n: usize) -> Result<FuzzyGraph> {
    if n < 1 {
        return Err(Error::BadParams("n must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let step = [1u32, 5, 10, 25][rng.random_range(0..4)];
    let levels = 100 / step;
    let density: f64 = rng.random_range(0.0..1.0);
    let sigma: Vec<u32> = (0..n).map(|_| step * rng.random_range(1..=levels)).collect();
    let mut pairs = if n >= 2 { random_tree_edges(&mut rng, n) } else { Vec::new() };
    for i in 0..n {
        for j in i + 1..n {
            let present = pairs.iter().any(|&(a, b)| (a, b) == (i, j) || (a, b) == (j, i));
            if !present && rng.random_bool(density) {
                pairs.push((i, j));
            }
        }
    }
    let vertices = (0..n).map(|i| (vertex_name(i), grid(sigma[i])));
    let edges: Vec<_> = pairs
        .into_iter()
        .map(|(i, j)| {
            let top = sigma[i].min(sigma[j]) / step;
            (vertex_name(i), vertex_name(j), grid(step * rng.random_range(1..=top)))
        })
        .collect();
    build_graph(vertices, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::{classify_edges, EdgeClass};
    use crate::structure::{is_fuzzy_tree, is_saturated_fuzzy_cycle};

    fn m(s: &str) -> Membership {
        s.parse().unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(SaturatedCycleSpec::new(4, m("0.5"), m("0.3")).is_ok());
        for (n, k, e) in [(5, "0.5", "0.3"), (2, "0.5", "0.3"), (4, "0.3", "0.3"), (4, "0.2", "0.3"), (4, "0", "0")] {
            assert!(matches!(SaturatedCycleSpec::new(n, m(k), m(e)), Err(Error::BadSpec(_))), "{n} {k} {e}");
        }
    }

    #[test]
    fn saturated_cycle_shape() {
        for n in [4, 6, 8, 12] {
            let spec = SaturatedCycleSpec::new(n, m("0.5"), m("0.3")).unwrap();
            let g = make_saturated_cycle(&spec);
            assert_eq!(g.vertex_count(), n);
            assert!(is_saturated_fuzzy_cycle(&g));
            let classes = classify_edges(&g);
            assert_eq!(classes.iter().filter(|c| c.class == EdgeClass::AlphaStrong).count(), n / 2);
            assert_eq!(classes.iter().filter(|c| c.class == EdgeClass::BetaStrong).count(), n / 2);
            assert!(classes
                .iter()
                .all(|c| (c.class == EdgeClass::AlphaStrong) == (c.mu == spec.kappa())));
        }
    }

    #[test]
    fn random_tree_two_vertices() {
        let g = random_fuzzy_tree(3, 2, 0).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(is_fuzzy_tree(&g).unwrap().is_some());
    }

    #[test]
    fn random_trees_are_fuzzy_trees() {
        for seed in 0..1000 {
            let g = random_fuzzy_tree(seed, 10, 3).unwrap();
            assert!(g.edge_count() >= 9 && g.edge_count() <= 12);
            assert!(is_fuzzy_tree(&g).unwrap().is_some(), "seed {seed}");
        }
    }

    #[test]
    fn random_tree_is_deterministic() {
        assert_eq!(random_fuzzy_tree(42, 8, 2).unwrap(), random_fuzzy_tree(42, 8, 2).unwrap());
        assert_ne!(random_fuzzy_tree(42, 8, 2).unwrap(), random_fuzzy_tree(43, 8, 2).unwrap());
    }

    #[test]
    fn random_tree_rejects_tiny_n() {
        assert!(matches!(random_fuzzy_tree(0, 1, 0), Err(Error::BadParams(_))));
    }

    #[test]
    fn random_connected_graphs_are_connected() {
        for seed in 0..200 {
            let n = 1 + (seed as usize % 7);
            let g = random_connected_graph(seed, n).unwrap();
            assert_eq!(g.vertex_count(), n);
            assert!(g.is_connected());
        }
    }
}
