//! Recompute every published figure for the built-in graphs and compare.
//!
//! Cycle figures are linear forms `aκ + bη`; each is checked at several
//! `(κ, η)` instantiations, which pins the coefficients down exactly.

use crate::catalog;
use crate::connectivity::strength_of_connectedness;
use crate::error::Result;
use crate::falsifier::{check_corollary_star, check_theorem_star};
use crate::graph::FuzzyGraph;
use crate::indices::{connectivity_index, geodesic_distance, theorem_star_formula, wiener_index};
use crate::membership::Membership;
use crate::structure::{graph_kind, maximum_spanning_tree, SaturatedCycleSpec};
use crate::value::IndexValue;

/// `(κ, η)` instantiations for the cycle checks.
pub const CYCLE_GRADES: [(&str, &str); 3] = [("0.5", "0.3"), ("0.7", "0.2"), ("0.9", "0.8")];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReproCheck {
    pub label: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

impl ReproCheck {
    fn compare(label: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        ReproCheck {
            label: label.into(),
            passed: expected == actual,
            expected,
            actual,
        }
    }
}

/// `kappa·κ + eta·η`.
#[derive(Debug, Clone, Copy)]
struct LinearForm {
    kappa: i64,
    eta: i64,
}

impl LinearForm {
    fn eval(self, kappa: Membership, eta: Membership) -> IndexValue {
        IndexValue::from_integer(self.kappa) * kappa.to_value() + IndexValue::from_integer(self.eta) * eta.to_value()
    }
}

const fn lf(kappa: i64, eta: i64) -> LinearForm {
    LinearForm { kappa, eta }
}

const TREE5_DS: [(&str, &str, &str); 10] = [
    ("a", "b", "1.2"),
    ("a", "c", "0.9"),
    ("a", "d", "1.4"),
    ("a", "e", "0.6"),
    ("b", "c", "0.3"),
    ("b", "d", "0.8"),
    ("b", "e", "0.6"),
    ("c", "d", "0.5"),
    ("c", "e", "0.3"),
    ("d", "e", "0.8"),
];

const TREE5_CONN: [(&str, &str, &str); 10] = [
    ("a", "b", "0.3"),
    ("a", "c", "0.3"),
    ("a", "d", "0.3"),
    ("a", "e", "0.6"),
    ("b", "c", "0.3"),
    ("b", "d", "0.3"),
    ("b", "e", "0.3"),
    ("c", "d", "0.5"),
    ("c", "e", "0.3"),
    ("d", "e", "0.3"),
];

const C4_DS: [(&str, &str, LinearForm); 6] = [
    ("a", "b", lf(1, 0)),
    ("a", "c", lf(1, 1)),
    ("a", "d", lf(0, 1)),
    ("b", "c", lf(0, 1)),
    ("b", "d", lf(1, 1)),
    ("c", "d", lf(1, 0)),
];

const C6_DS: [(&str, &str, LinearForm); 15] = [
    ("a", "b", lf(1, 0)),
    ("a", "c", lf(1, 1)),
    ("a", "d", lf(1, 2)),
    ("a", "e", lf(1, 1)),
    ("a", "f", lf(0, 1)),
    ("b", "c", lf(0, 1)),
    ("b", "d", lf(1, 1)),
    ("b", "e", lf(1, 2)),
    ("b", "f", lf(1, 1)),
    ("c", "d", lf(1, 0)),
    ("c", "e", lf(1, 1)),
    ("c", "f", lf(1, 2)),
    ("d", "e", lf(0, 1)),
    ("d", "f", lf(1, 1)),
    ("e", "f", lf(1, 0)),
];

fn decimal(s: &str) -> IndexValue {
    s.parse().expect("decimal literal")
}

fn table_check(label: String, g: &FuzzyGraph, expected: impl Iterator<Item = (String, String, IndexValue)>) -> Result<ReproCheck> {
    let ds = geodesic_distance(g)?;
    let (mut matched, mut total, mut mismatches) = (0, 0, Vec::new());
    for (u, v, want) in expected {
        total += 1;
        match ds.get(&u, &v) {
            Some(got) if got == want => matched += 1,
            got => mismatches.push(format!("{u}{v}: {} vs {want}", got.map_or("-".into(), |g| g.to_string()))),
        }
    }
    let mut actual = format!("{matched} of {total} entries match");
    if !mismatches.is_empty() {
        actual.push_str(&format!(" ({})", mismatches.join(", ")));
    }
    Ok(ReproCheck::compare(label, format!("{total} of {total} entries match"), actual))
}

fn tree_checks(out: &mut Vec<ReproCheck>) -> Result<()> {
    let g = catalog::five_vertex_fuzzy_tree();
    let tree = maximum_spanning_tree(&g)?;
    let f = tree.graph();
    out.push(ReproCheck::compare("tree5: fuzzy tree", "yes", if graph_kind(&g).is_fuzzy_tree { "yes" } else { "no" }));
    let same_tree = catalog::five_vertex_fuzzy_tree_mst() == *f;
    out.push(ReproCheck::compare("tree5: MST", "F = G - ab", if same_tree { "F = G - ab" } else { "differs" }));
    out.push(table_check(
        "tree5: d_s table".into(),
        &g,
        TREE5_DS.iter().map(|&(u, v, d)| (u.into(), v.into(), decimal(d))),
    )?);
    let conn = strength_of_connectedness(f);
    let conn_matches = TREE5_CONN
        .iter()
        .filter(|&&(u, v, c)| conn.get(u, v).map(|m| m.to_value()) == Some(decimal(c)))
        .count();
    out.push(ReproCheck::compare("tree5: CONN table on F", "10 of 10 entries match", format!("{conn_matches} of 10 entries match")));
    let wi_g = wiener_index(&g)?;
    out.push(ReproCheck::compare("tree5: WI(G)", "7.4", &wi_g));
    out.push(ReproCheck::compare("tree5: WI(F)", "7.4", wiener_index(f)?));
    out.push(ReproCheck::compare("tree5: CI(F)", "3.5", connectivity_index(f)));
    let ci_g = connectivity_index(&g);
    out.push(ReproCheck {
        label: "tree5: CI(G) (computed)".into(),
        expected: ci_g.to_string(),
        actual: ci_g.to_string(),
        passed: true,
    });
    let verdict = check_corollary_star(&g)?;
    out.push(ReproCheck::compare(
        "tree5: WI(G) = WI(F) ≠ CI(F)",
        "counterexample CONFIRMED",
        if verdict.holds { "claim holds" } else { "counterexample CONFIRMED" },
    ));
    Ok(())
}

fn cycle_checks(
    out: &mut Vec<ReproCheck>,
    n: usize,
    build: fn(&str, &str) -> Result<FuzzyGraph>,
    table: &[(&str, &str, LinearForm)],
    wiener: LinearForm,
    formula_text: &str,
) -> Result<()> {
    for (k, e) in CYCLE_GRADES {
        let (kappa, eta): (Membership, Membership) = (k.parse()?, e.parse()?);
        let g = build(k, e)?;
        let tag = format!("cycle{n} (κ={k}, η={e})");
        out.push(ReproCheck::compare(
            format!("{tag}: saturated fuzzy cycle"),
            "yes",
            if graph_kind(&g).is_saturated_fuzzy_cycle { "yes" } else { "no" },
        ));
        out.push(table_check(
            format!("{tag}: d_s table"),
            &g,
            table.iter().map(|&(u, v, form)| (u.into(), v.into(), form.eval(kappa, eta))),
        )?);
        let direct = wiener_index(&g)?;
        out.push(ReproCheck::compare(
            format!("{tag}: WI = {}κ+{}η", wiener.kappa, wiener.eta),
            wiener.eval(kappa, eta),
            &direct,
        ));
        let spec = SaturatedCycleSpec::new(n, kappa, eta)?;
        let sum = kappa.to_value() + eta.to_value();
        let (num, den) = match n {
            4 => (43, 4),
            _ => (450, 16),
        };
        out.push(ReproCheck::compare(
            format!("{tag}: formula {formula_text}(κ+η)"),
            IndexValue::from_ratio(num, den) * sum,
            theorem_star_formula(&spec),
        ));
        let verdict = check_theorem_star(&spec);
        let same_graph = verdict.lhs == direct;
        out.push(ReproCheck::compare(
            format!("{tag}: direct {} ≠ formula {formula_text}(κ+η)", describe(wiener)),
            "counterexample CONFIRMED",
            if !verdict.holds && same_graph { "counterexample CONFIRMED" } else { "claim holds" },
        ));
    }
    Ok(())
}

fn describe(form: LinearForm) -> String {
    if form.kappa == form.eta {
        format!("{}(κ+η)", form.kappa)
    } else {
        format!("{}κ+{}η", form.kappa, form.eta)
    }
}

/// Every check, in a fixed order. Hermetic: no I/O, no randomness.
pub fn replicate() -> Result<Vec<ReproCheck>> {
    let mut out = Vec::new();
    tree_checks(&mut out)?;
    cycle_checks(&mut out, 4, catalog::saturated_c4, &C4_DS, lf(4, 4), "43/4")?;
    cycle_checks(&mut out, 6, catalog::saturated_c6, &C6_DS, lf(12, 15), "6·75/16")?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_check_passes() {
        let checks = replicate().unwrap();
        let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
        assert!(failed.is_empty(), "{failed:#?}");
        assert_eq!(checks.len(), 9 + 2 * 3 * 5);
    }

    #[test]
    fn c6_linear_forms_sum_to_wiener() {
        let (k, e) = C6_DS.iter().fold((0, 0), |(k, e), (_, _, f)| (k + f.kappa, e + f.eta));
        assert_eq!((k, e), (12, 15));
    }
}
