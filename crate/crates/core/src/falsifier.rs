//! Evaluate the two published claims on concrete instances and collect witnesses.
//!
//! * `corollary-star`: on a fuzzy tree `G` with maximum spanning tree `F`,
//!   `WI(G) = WI(F) = CI(F)`.
//! * `theorem-star`: on an alternating saturated cycle,
//!   `WI = n[(n+3)² − 6]/16 · (κ + η)`.
//!
//! Both are checked exactly as printed, with no extra hypotheses on σ.
//! Equality is exact rational equality.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::format::to_fzg;
use crate::graph::FuzzyGraph;
use crate::indices::{connectivity_index, theorem_star_formula, wiener_index};
use crate::membership::Membership;
use crate::structure::{is_fuzzy_tree, make_saturated_cycle, random_fuzzy_tree, SaturatedCycleSpec};
use crate::value::IndexValue;

/// Most δ-edges added to a generated tree in a corollary trial.
const MAX_EXTRA_EDGES: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    CorollaryStar,
    TheoremStar,
}

impl ClaimId {
    pub fn name(self) -> &'static str {
        match self {
            ClaimId::CorollaryStar => "corollary-star",
            ClaimId::TheoremStar => "theorem-star",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClaimId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "corollary-star" => Ok(ClaimId::CorollaryStar),
            "theorem-star" => Ok(ClaimId::TheoremStar),
            other => Err(Error::BadParams(format!("unknown claim `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Graph(FuzzyGraph),
    Cycle(SaturatedCycleSpec),
}

impl Instance {
    pub fn graph(&self) -> FuzzyGraph {
        match self {
            Instance::Graph(g) => g.clone(),
            Instance::Cycle(spec) => make_saturated_cycle(spec),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Instance::Graph(g) => g.vertex_count(),
            Instance::Cycle(spec) => spec.n(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerdictDetail {
    Corollary {
        wi_g: IndexValue,
        wi_f: IndexValue,
        ci_f: IndexValue,
    },
    Theorem {
        direct: IndexValue,
        formula: IndexValue,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimVerdict {
    pub claim: ClaimId,
    pub instance: Instance,
    pub lhs: IndexValue,
    pub rhs: IndexValue,
    pub holds: bool,
    pub detail: VerdictDetail,
}

impl ClaimVerdict {
    /// Re-evaluate the claim on the embedded instance.
    pub fn recheck(&self) -> Result<ClaimVerdict> {
        match &self.instance {
            Instance::Graph(g) => check_corollary_star(g),
            Instance::Cycle(spec) => Ok(check_theorem_star(spec)),
        }
    }
}

/// `lhs = WI(G)`, `rhs = CI(F)`; holds iff `WI(G)`, `WI(F)` and `CI(F)` all agree.
pub fn check_corollary_star(g: &FuzzyGraph) -> Result<ClaimVerdict> {
    let tree = match is_fuzzy_tree(g) {
        Ok(Some(tree)) => tree,
        Ok(None) | Err(Error::Disconnected) => return Err(Error::NotAFuzzyTree),
        Err(e) => return Err(e),
    };
    let wi_g = wiener_index(g)?;
    let wi_f = wiener_index(tree.graph())?;
    let ci_f = connectivity_index(tree.graph());
    Ok(ClaimVerdict {
        claim: ClaimId::CorollaryStar,
        instance: Instance::Graph(g.clone()),
        holds: wi_g == wi_f && wi_f == ci_f,
        lhs: wi_g.clone(),
        rhs: ci_f.clone(),
        detail: VerdictDetail::Corollary { wi_g, wi_f, ci_f },
    })
}

/// `lhs` = Wiener index of the generated cycle, `rhs` = the published closed form.
pub fn check_theorem_star(spec: &SaturatedCycleSpec) -> ClaimVerdict {
    let direct = wiener_index(&make_saturated_cycle(spec)).expect("saturated cycles are strongly connected");
    let formula = theorem_star_formula(spec);
    ClaimVerdict {
        claim: ClaimId::TheoremStar,
        instance: Instance::Cycle(*spec),
        holds: direct == formula,
        lhs: direct.clone(),
        rhs: formula.clone(),
        detail: VerdictDetail::Theorem { direct, formula },
    }
}

/// Inclusive vertex-count range, written `A..B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeRange {
    pub min: usize,
    pub max: usize,
}

impl SizeRange {
    pub fn new(min: usize, max: usize) -> Result<Self> {
        if min > max {
            return Err(Error::BadParams(format!("empty size range {min}..{max}")));
        }
        Ok(SizeRange { min, max })
    }
}

impl FromStr for SizeRange {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadParams(format!("expected a range like 3..8, got `{s}`"));
        let (a, b) = match s.split_once("..") {
            Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
            None => (s, s),
        };
        SizeRange::new(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?)
    }
}

impl fmt::Display for SizeRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.min, self.max)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Number of instances evaluated.
    pub evaluated: usize,
    /// Instances where the claim fails, sorted by size then `.fzg` text.
    pub violations: Vec<ClaimVerdict>,
}

/// Every alternating-cycle spec with even `n` in `sizes` and κ > η on the 0.1 grid.
pub fn theorem_star_sweep(sizes: SizeRange) -> Vec<SaturatedCycleSpec> {
    let mut specs = Vec::new();
    for n in (sizes.min.max(4)..=sizes.max).filter(|n| n % 2 == 0) {
        for kappa in 1..=10u32 {
            for eta in 1..kappa {
                let k = Membership::from_hundredths(kappa * 10).expect("grid");
                let e = Membership::from_hundredths(eta * 10).expect("grid");
                specs.push(SaturatedCycleSpec::new(n, k, e).expect("grid spec is valid"));
            }
        }
    }
    specs
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Random fuzzy tree for corollary trial `trial`; depends only on `(seed, trial, sizes)`.
pub fn corollary_trial_instance(seed: u64, trial: u64, sizes: SizeRange) -> Result<FuzzyGraph> {
    let mut rng = trial_rng(seed, trial);
    let n = rng.random_range(sizes.min..=sizes.max);
    let extra = rng.random_range(0..=MAX_EXTRA_EDGES);
    random_fuzzy_tree(rng.next_u64(), n, extra)
}

/// Generate `trials` instances of `claim`, evaluate each, and return the violations.
///
/// Corollary trials are random fuzzy trees with `n` drawn from `sizes`. Theorem trials
/// come from [`theorem_star_sweep`]; when `trials` is smaller than the sweep, a
/// seeded sample of it is used. Each trial's randomness derives from `(seed, trial)`
/// alone, so the output does not depend on evaluation order.
pub fn search_counterexamples(claim: ClaimId, trials: usize, seed: u64, sizes: SizeRange) -> Result<SearchOutcome> {
    if trials == 0 {
        return Err(Error::BadParams("trials must be at least 1".into()));
    }
    let verdicts: Vec<ClaimVerdict> = match claim {
        ClaimId::CorollaryStar => {
            if sizes.min < 2 {
                return Err(Error::BadParams("fuzzy trees need at least 2 vertices".into()));
            }
            (0..trials as u64)
                .into_par_iter()
                .map(|t| corollary_trial_instance(seed, t, sizes).and_then(|g| check_corollary_star(&g)))
                .collect::<Result<_>>()?
        }
        ClaimId::TheoremStar => {
            let mut specs = theorem_star_sweep(sizes);
            if specs.is_empty() {
                return Err(Error::BadParams(format!("no even cycle length >= 4 in {sizes}")));
            }
            if trials < specs.len() {
                specs.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
                specs.truncate(trials);
            }
            specs.par_iter().map(check_theorem_star).collect()
        }
    };
    let evaluated = verdicts.len();
    let mut violations: Vec<(usize, String, ClaimVerdict)> = verdicts
        .into_iter()
        .filter(|v| !v.holds)
        .map(|v| (v.instance.size(), to_fzg(&v.instance.graph()), v))
        .collect();
    violations.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(SearchOutcome {
        evaluated,
        violations: violations.into_iter().map(|(_, _, v)| v).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn m(s: &str) -> Membership {
        s.parse().unwrap()
    }

    #[test]
    fn five_vertex_tree_refutes_corollary() {
        let v = check_corollary_star(&catalog::five_vertex_fuzzy_tree()).unwrap();
        assert!(!v.holds);
        assert_eq!(
            v.detail,
            VerdictDetail::Corollary {
                wi_g: IndexValue::from_ratio(37, 5),
                wi_f: IndexValue::from_ratio(37, 5),
                ci_f: IndexValue::from_ratio(7, 2),
            }
        );
    }

    #[test]
    fn two_vertex_tree_satisfies_corollary() {
        let g = FuzzyGraph::from_records(&[("a", "1"), ("b", "1")], &[("a", "b", "0.4")]).unwrap();
        let v = check_corollary_star(&g).unwrap();
        assert!(v.holds);
        assert_eq!(v.lhs, m("0.4").to_value());
    }

    #[test]
    fn equal_weight_path_refutes_corollary() {
        let g = FuzzyGraph::from_records(
            &[("a", "1"), ("b", "1"), ("c", "1")],
            &[("a", "b", "0.2"), ("b", "c", "0.2")],
        )
        .unwrap();
        let v = check_corollary_star(&g).unwrap();
        assert!(!v.holds);
        assert_eq!(v.lhs, m("0.8").to_value());
        assert_eq!(v.rhs, m("0.6").to_value());
    }

    #[test]
    fn corollary_requires_fuzzy_tree() {
        let c4 = catalog::saturated_c4("0.5", "0.3").unwrap();
        assert_eq!(check_corollary_star(&c4).unwrap_err(), Error::NotAFuzzyTree);
        let split = FuzzyGraph::from_records(&[("a", "1"), ("b", "1")], &[]).unwrap();
        assert_eq!(check_corollary_star(&split).unwrap_err(), Error::NotAFuzzyTree);
    }

    #[test]
    fn theorem_star_examples() {
        for (n, lhs, rhs) in [(4, (16, 5), (43, 5)), (6, (21, 2), (45, 2))] {
            let v = check_theorem_star(&SaturatedCycleSpec::new(n, m("0.5"), m("0.3")).unwrap());
            assert!(!v.holds);
            assert_eq!(v.lhs, IndexValue::from_ratio(lhs.0, lhs.1));
            assert_eq!(v.rhs, IndexValue::from_ratio(rhs.0, rhs.1));
        }
        let v = check_theorem_star(&SaturatedCycleSpec::new(8, m("0.5"), m("0.3")).unwrap());
        assert_eq!(v.rhs, IndexValue::from_integer(46));
        assert!(!v.holds);
    }

    #[test]
    fn size_range_parsing() {
        assert_eq!("3..8".parse::<SizeRange>().unwrap(), SizeRange { min: 3, max: 8 });
        assert_eq!("4..=12".parse::<SizeRange>().unwrap(), SizeRange { min: 4, max: 12 });
        assert_eq!("5".parse::<SizeRange>().unwrap(), SizeRange { min: 5, max: 5 });
        assert!("8..3".parse::<SizeRange>().is_err());
        assert!("x..3".parse::<SizeRange>().is_err());
    }

    #[test]
    fn sweep_size() {
        // 45 (κ, η) pairs per even n
        assert_eq!(theorem_star_sweep(SizeRange::new(4, 12).unwrap()).len(), 5 * 45);
        assert!(theorem_star_sweep(SizeRange::new(3, 3).unwrap()).is_empty());
    }

    #[test]
    fn corollary_search_finds_witnesses() {
        let out = search_counterexamples(ClaimId::CorollaryStar, 50, 7, SizeRange::new(3, 8).unwrap()).unwrap();
        assert_eq!(out.evaluated, 50);
        assert!(!out.violations.is_empty());
        let sizes: Vec<usize> = out.violations.iter().map(|v| v.instance.size()).collect();
        assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn two_vertex_search_finds_nothing() {
        let out = search_counterexamples(ClaimId::CorollaryStar, 1, 99, SizeRange::new(2, 2).unwrap()).unwrap();
        assert!(out.violations.is_empty());
    }

    #[test]
    fn theorem_search_sample_respects_trials() {
        let out = search_counterexamples(ClaimId::TheoremStar, 10, 1, SizeRange::new(4, 8).unwrap()).unwrap();
        assert_eq!(out.evaluated, 10);
        assert_eq!(out.violations.len(), 10);
    }

    #[test]
    fn bad_params() {
        let sizes = SizeRange::new(3, 5).unwrap();
        assert!(matches!(search_counterexamples(ClaimId::CorollaryStar, 0, 0, sizes), Err(Error::BadParams(_))));
        let tiny = SizeRange::new(1, 1).unwrap();
        assert!(matches!(search_counterexamples(ClaimId::CorollaryStar, 1, 0, tiny), Err(Error::BadParams(_))));
        assert!(matches!(search_counterexamples(ClaimId::TheoremStar, 1, 0, tiny), Err(Error::BadParams(_))));
        assert!("lemma".parse::<ClaimId>().is_err());
    }
}
