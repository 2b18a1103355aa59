//! Text and JSON rendering.
//!
//! Every JSON document carries the keys `wiener`, `connectivity`, `pairs`, `kind`
//! and `verdicts` (null or empty when a command has nothing to say about them);
//! command-specific keys are added alongside. Exact values are rendered as strings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use fuzzy_wiener::connectivity::EdgeClassification;
use fuzzy_wiener::falsifier::{ClaimId, ClaimVerdict, Instance, SearchOutcome, SizeRange, VerdictDetail};
use fuzzy_wiener::indices::IndexReport;
use fuzzy_wiener::replication::ReproCheck;
use fuzzy_wiener::{to_fzg, FuzzyGraph, GraphKind, SpanningTree};

use crate::Format;

pub struct Rendered {
    pub body: String,
    pub warnings: Vec<String>,
}

#[derive(Serialize, Default)]
struct Document {
    command: &'static str,
    wiener: Option<String>,
    connectivity: Option<String>,
    pairs: Vec<PairJson>,
    kind: Option<KindJson>,
    verdicts: Vec<VerdictJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    edges: Option<Vec<EdgeJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tree: Option<TreeJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    checks: Option<Vec<CheckJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    search: Option<SearchJson>,
    warnings: Vec<String>,
}

#[derive(Serialize)]
struct PairJson {
    u: String,
    v: String,
    conn: String,
    ds: Option<String>,
}

#[derive(Serialize)]
struct KindJson {
    connected: bool,
    fuzzy_tree: bool,
    fuzzy_cycle: bool,
    saturated_fuzzy_cycle: bool,
}

impl From<&GraphKind> for KindJson {
    fn from(k: &GraphKind) -> Self {
        KindJson {
            connected: k.is_connected,
            fuzzy_tree: k.is_fuzzy_tree,
            fuzzy_cycle: k.is_fuzzy_cycle,
            saturated_fuzzy_cycle: k.is_saturated_fuzzy_cycle,
        }
    }
}

#[derive(Serialize)]
struct EdgeJson {
    u: String,
    v: String,
    mu: String,
    class: &'static str,
    residual: String,
}

#[derive(Serialize)]
struct TreeJson {
    total_strength: String,
    fzg: String,
}

#[derive(Serialize)]
struct CheckJson {
    label: String,
    expected: String,
    actual: String,
    passed: bool,
}

#[derive(Serialize)]
struct SearchJson {
    claim: &'static str,
    trials: usize,
    seed: u64,
    sizes: String,
    evaluated: usize,
    violations: usize,
}

#[derive(Serialize)]
struct VerdictJson {
    claim: &'static str,
    holds: bool,
    lhs: String,
    rhs: String,
    detail: BTreeMap<String, String>,
    instance: InstanceJson,
}

#[derive(Serialize)]
struct InstanceJson {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    kappa: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    eta: Option<String>,
    fzg: String,
}

fn detail_pairs(detail: &VerdictDetail) -> Vec<(String, String)> {
    match detail {
        VerdictDetail::Corollary { wi_g, wi_f, ci_f } => vec![
            ("WI(G)".into(), wi_g.to_string()),
            ("WI(F)".into(), wi_f.to_string()),
            ("CI(F)".into(), ci_f.to_string()),
        ],
        VerdictDetail::Theorem { direct, formula } => {
            vec![("direct".into(), direct.to_string()), ("formula".into(), formula.to_string())]
        }
    }
}

impl From<&ClaimVerdict> for VerdictJson {
    fn from(v: &ClaimVerdict) -> Self {
        let (kappa, eta) = match &v.instance {
            Instance::Cycle(spec) => (Some(spec.kappa().to_string()), Some(spec.eta().to_string())),
            Instance::Graph(_) => (None, None),
        };
        VerdictJson {
            claim: v.claim.name(),
            holds: v.holds,
            lhs: v.lhs.to_string(),
            rhs: v.rhs.to_string(),
            detail: detail_pairs(&v.detail).into_iter().collect(),
            instance: InstanceJson {
                n: v.instance.size(),
                kappa,
                eta,
                fzg: to_fzg(&v.instance.graph()),
            },
        }
    }
}

fn json(doc: &Document) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn kind_text(out: &mut String, k: &GraphKind) {
    writeln!(out, "connected: {}", yes_no(k.is_connected)).unwrap();
    writeln!(out, "fuzzy tree: {}", yes_no(k.is_fuzzy_tree)).unwrap();
    writeln!(out, "fuzzy cycle: {}", yes_no(k.is_fuzzy_cycle)).unwrap();
    writeln!(out, "saturated fuzzy cycle: {}", yes_no(k.is_saturated_fuzzy_cycle)).unwrap();
}

pub fn indices(g: &FuzzyGraph, r: &IndexReport, format: Format) -> Rendered {
    let body = match format {
        Format::Json => json(&Document {
            command: "indices",
            wiener: r.wiener.as_ref().map(ToString::to_string),
            connectivity: Some(r.connectivity.to_string()),
            pairs: r
                .pairs
                .iter()
                .map(|p| PairJson {
                    u: p.u.to_string(),
                    v: p.v.to_string(),
                    conn: p.conn.to_string(),
                    ds: p.ds.as_ref().map(ToString::to_string),
                })
                .collect(),
            kind: Some(KindJson::from(&r.kind)),
            warnings: r.warnings.clone(),
            ..Document::default()
        }),
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "vertices: {}  edges: {}", g.vertex_count(), g.edge_count()).unwrap();
            match &r.wiener {
                Some(w) => writeln!(out, "WI = {w}").unwrap(),
                None => writeln!(out, "WI = unavailable (strong subgraph disconnected)").unwrap(),
            }
            writeln!(out, "CI = {}", r.connectivity).unwrap();
            kind_text(&mut out, &r.kind);
            if !r.pairs.is_empty() {
                writeln!(out).unwrap();
                writeln!(out, "{:<16} {:>10} {:>10}", "pair", "CONN", "d_s").unwrap();
                for p in &r.pairs {
                    let ds = p.ds.as_ref().map_or("-".to_string(), ToString::to_string);
                    writeln!(out, "{:<16} {:>10} {:>10}", format!("{} {}", p.u, p.v), p.conn.to_string(), ds).unwrap();
                }
            }
            out
        }
    };
    Rendered {
        body,
        warnings: r.warnings.clone(),
    }
}

pub fn classify(classes: &[EdgeClassification], format: Format) -> Rendered {
    let body = match format {
        Format::Json => json(&Document {
            command: "classify",
            edges: Some(
                classes
                    .iter()
                    .map(|c| EdgeJson {
                        u: c.u.to_string(),
                        v: c.v.to_string(),
                        mu: c.mu.to_string(),
                        class: c.class.name(),
                        residual: c.residual.to_string(),
                    })
                    .collect(),
            ),
            ..Document::default()
        }),
        Format::Text => {
            let mut out = String::from("# u v mu class conn_without_edge\n");
            for c in classes {
                writeln!(out, "{} {} {} {} {}", c.u, c.v, c.mu, c.class, c.residual).unwrap();
            }
            out
        }
    };
    Rendered {
        body,
        warnings: Vec::new(),
    }
}

pub fn mst(tree: &SpanningTree, format: Format) -> Rendered {
    let fzg = to_fzg(tree.graph());
    let body = match format {
        Format::Json => json(&Document {
            command: "mst",
            tree: Some(TreeJson {
                total_strength: tree.total_strength.to_string(),
                fzg,
            }),
            ..Document::default()
        }),
        Format::Text => format!("# maximum spanning tree, total strength {}\n{fzg}", tree.total_strength),
    };
    Rendered {
        body,
        warnings: Vec::new(),
    }
}

pub fn kind(k: &GraphKind, format: Format) -> Rendered {
    let body = match format {
        Format::Json => json(&Document {
            command: "kind",
            kind: Some(KindJson::from(k)),
            ..Document::default()
        }),
        Format::Text => {
            let mut out = String::new();
            kind_text(&mut out, k);
            out
        }
    };
    Rendered {
        body,
        warnings: Vec::new(),
    }
}

pub fn repro(checks: &[ReproCheck], format: Format) -> Rendered {
    let passed = checks.iter().filter(|c| c.passed).count();
    let body = match format {
        Format::Json => json(&Document {
            command: "repro",
            checks: Some(
                checks
                    .iter()
                    .map(|c| CheckJson {
                        label: c.label.clone(),
                        expected: c.expected.clone(),
                        actual: c.actual.clone(),
                        passed: c.passed,
                    })
                    .collect(),
            ),
            ..Document::default()
        }),
        Format::Text => {
            let mut out = String::new();
            for c in checks {
                if c.passed {
                    writeln!(out, "{}: {} PASS", c.label, c.actual).unwrap();
                } else {
                    writeln!(out, "{}: expected {}, got {} FAIL", c.label, c.expected, c.actual).unwrap();
                }
            }
            writeln!(out, "{passed} of {} checks passed", checks.len()).unwrap();
            out
        }
    };
    Rendered {
        body,
        warnings: Vec::new(),
    }
}

pub struct SearchParams {
    pub claim: ClaimId,
    pub trials: usize,
    pub seed: u64,
    pub sizes: SizeRange,
}

fn caveat(claim: ClaimId) -> &'static str {
    match claim {
        ClaimId::CorollaryStar => "claim tested exactly as printed, with no extra hypotheses on sigma",
        ClaimId::TheoremStar => "claim tested exactly as printed, on alternating cycles with sigma = 1",
    }
}

pub fn falsify(params: &SearchParams, outcome: &SearchOutcome, format: Format) -> Rendered {
    let body = match format {
        Format::Json => json(&Document {
            command: "falsify",
            verdicts: outcome.violations.iter().map(VerdictJson::from).collect(),
            search: Some(SearchJson {
                claim: params.claim.name(),
                trials: params.trials,
                seed: params.seed,
                sizes: params.sizes.to_string(),
                evaluated: outcome.evaluated,
                violations: outcome.violations.len(),
            }),
            warnings: vec![caveat(params.claim).to_string()],
            ..Document::default()
        }),
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "# {}: {}", params.claim, caveat(params.claim)).unwrap();
            writeln!(
                out,
                "# trials: {}  seed: {}  sizes: {}",
                params.trials, params.seed, params.sizes
            )
            .unwrap();
            writeln!(out, "# violations: {} of {} evaluated", outcome.violations.len(), outcome.evaluated).unwrap();
            for (k, v) in outcome.violations.iter().enumerate() {
                let mut header = format!("## witness {}: n={}", k + 1, v.instance.size());
                if let Instance::Cycle(spec) = &v.instance {
                    write!(header, " kappa={} eta={}", spec.kappa(), spec.eta()).unwrap();
                }
                for (name, value) in detail_pairs(&v.detail) {
                    write!(header, " {name}={value}").unwrap();
                }
                write!(header, " holds={}", v.holds).unwrap();
                writeln!(out, "{header}").unwrap();
                out.push_str(&to_fzg(&v.instance.graph()));
            }
            out
        }
    };
    Rendered {
        body,
        warnings: Vec::new(),
    }
}
