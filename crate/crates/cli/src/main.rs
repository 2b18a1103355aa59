mod render;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fuzzy_wiener::falsifier::{search_counterexamples, theorem_star_sweep, ClaimId, SizeRange};
use fuzzy_wiener::{classify_edges, graph_kind, index_report, maximum_spanning_tree, replication, FuzzyGraph};

use render::Rendered;

/// Exit statuses.
mod status {
    pub const OK: u8 = 0;
    pub const REPLICATION_MISMATCH: u8 = 1;
    pub const INPUT_ERROR: u8 = 2;
    pub const PARTIAL: u8 = 3;
    pub const NO_WITNESS: u8 = 4;
}

#[derive(Debug, Parser)]
#[command(name = "fuzzy-wiener", version, about = "Exact Wiener and connectivity indices of fuzzy graphs")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Wiener index, connectivity index and the per-pair CONN / d_s table.
    Indices { file: PathBuf },
    /// Classify every edge as alpha-strong, beta-strong or delta.
    Classify { file: PathBuf },
    /// Print the maximum spanning tree as a .fzg graph.
    Mst { file: PathBuf },
    /// Report connectivity, fuzzy tree and fuzzy cycle flags.
    Kind { file: PathBuf },
    /// Recompute the built-in worked examples and check every figure.
    Repro,
    /// Search for instances that violate a published claim.
    Falsify {
        #[arg(value_enum)]
        claim: Claim,
        /// Number of instances (theorem-star defaults to the whole grid sweep).
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Vertex-count range `A..B` (default 3..8 for corollary-star).
        #[arg(long)]
        sizes: Option<SizeRange>,
        /// Cycle-length range `A..B` (default 4..12 for theorem-star).
        #[arg(long = "n")]
        n: Option<SizeRange>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Claim {
    CorollaryStar,
    TheoremStar,
}

impl From<Claim> for ClaimId {
    fn from(c: Claim) -> ClaimId {
        match c {
            Claim::CorollaryStar => ClaimId::CorollaryStar,
            Claim::TheoremStar => ClaimId::TheoremStar,
        }
    }
}

struct Failure {
    status: u8,
    message: String,
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        status: status::INPUT_ERROR,
        message: message.into(),
    }
}

fn load(path: &Path) -> Result<FuzzyGraph, Failure> {
    let bytes = std::fs::read(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    fuzzy_wiener::format::parse_graph_bytes(&bytes).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn run(cli: &Cli) -> Result<(Rendered, u8), Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Indices { file } => {
            let g = load(file)?;
            let report = index_report(&g);
            let code = if report.wiener.is_some() { status::OK } else { status::PARTIAL };
            Ok((render::indices(&g, &report, format), code))
        }
        Command::Classify { file } => {
            let g = load(file)?;
            Ok((render::classify(&classify_edges(&g), format), status::OK))
        }
        Command::Mst { file } => {
            let g = load(file)?;
            let tree = maximum_spanning_tree(&g).map_err(|e| input_error(format!("{}: {e}", file.display())))?;
            Ok((render::mst(&tree, format), status::OK))
        }
        Command::Kind { file } => {
            let g = load(file)?;
            Ok((render::kind(&graph_kind(&g), format), status::OK))
        }
        Command::Repro => {
            let checks = replication::replicate().map_err(|e| Failure {
                status: status::REPLICATION_MISMATCH,
                message: e.to_string(),
            })?;
            let code = if checks.iter().all(|c| c.passed) {
                status::OK
            } else {
                status::REPLICATION_MISMATCH
            };
            Ok((render::repro(&checks, format), code))
        }
        Command::Falsify {
            claim,
            trials,
            seed,
            sizes,
            n,
        } => {
            let claim = ClaimId::from(*claim);
            let (range, trials) = match claim {
                ClaimId::CorollaryStar => {
                    let range = sizes.or(*n).unwrap_or(SizeRange { min: 3, max: 8 });
                    (range, trials.unwrap_or(50))
                }
                ClaimId::TheoremStar => {
                    let range = n.or(*sizes).unwrap_or(SizeRange { min: 4, max: 12 });
                    (range, trials.unwrap_or_else(|| theorem_star_sweep(range).len().max(1)))
                }
            };
            let outcome =
                search_counterexamples(claim, trials, *seed, range).map_err(|e| input_error(e.to_string()))?;
            let code = if outcome.violations.is_empty() {
                status::NO_WITNESS
            } else {
                status::OK
            };
            let params = render::SearchParams {
                claim,
                trials,
                seed: *seed,
                sizes: range,
            };
            Ok((render::falsify(&params, &outcome, format), code))
        }
    }
}

fn emit(text: &str, output: Option<&Path>) -> std::io::Result<()> {
    match output {
        Some(path) => std::fs::write(path, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((rendered, code)) => {
            for warning in &rendered.warnings {
                eprintln!("warning: {warning}");
            }
            if let Err(e) = emit(&rendered.body, cli.output.as_deref()) {
                eprintln!("error: writing output: {e}");
                return ExitCode::from(status::INPUT_ERROR);
            }
            ExitCode::from(code)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.status)
        }
    }
}
