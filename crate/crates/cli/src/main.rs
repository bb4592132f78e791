use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use corona_core::corona::{build, spec_from_json, CoronaSpec};
use corona_core::coronal::{coronal_auto, coronal_generic, IndexSet};
use corona_core::graph::{graph_from_json, graph_to_json, Graph, UnaryKind};
use corona_core::polyrat::{poly_to_json, ratfun_to_json, IntMatrix};
use corona_core::spectra::{
    charpoly_report, cluster_charpolys, cospectral_family, CospectralOptions, ReportOptions, SpectralKind,
    DEFAULT_ORACLE_LIMIT, DEFAULT_THEOREM_LIMIT,
};
use corona_core::suite::{small_suite, verify, SuiteCase};
use corona_core::table::table_check;
use corona_core::{Error, Strategy};

const ORACLE_ENV: &str = "CORONA_ORACLE_LIMIT";
const THEOREM_ENV: &str = "CORONA_THEOREM_LIMIT";

/// Generalized coronas of graphs: construction, coronals and exact
/// characteristic polynomials.
#[derive(Debug, Parser)]
#[command(name = "corona", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the JSON result here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Vertex bound for the oracle [env: CORONA_ORACLE_LIMIT, default 64].
    #[arg(long, global = true)]
    oracle_limit: Option<usize>,
    /// Vertex bound for the theorem path [env: CORONA_THEOREM_LIMIT, default 256].
    #[arg(long, global = true)]
    theorem_limit: Option<usize>,
    /// Run every loop on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the corona graph of a spec.
    Build { spec: String },
    /// Coronal of a matrix or graph constrained by an index set.
    Coronal {
        input: String,
        /// Comma-separated indices; every index when omitted.
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long, default_value = "adjacency")]
        matrix: SpectralKind,
        #[arg(long, value_enum, default_value = "auto")]
        fast_path: FastPath,
    },
    /// Characteristic polynomial report for a spec.
    Charpoly {
        spec: String,
        #[arg(long, default_value = "adjacency")]
        matrix: SpectralKind,
        /// Compare against the explicitly built matrix.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        roots: bool,
    },
    /// Theorem against oracle for every matrix kind.
    Verify {
        spec: Option<String>,
        #[arg(long, value_enum)]
        suite: Option<SuiteName>,
    },
    /// Adjacency and Laplacian charpolys of the cluster G{H}.
    Cluster {
        g: String,
        h: String,
        #[arg(long)]
        root: usize,
    },
    /// Check that every ordering of the copies gives one charpoly.
    Cospectral {
        spec: String,
        #[arg(long, default_value = "adjacency")]
        matrix: SpectralKind,
        #[arg(long, default_value_t = 120)]
        max_permutations: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Block row sums of unary operations on a regular base.
    TableCheck {
        /// `cycle:4`, `complete:5`, `path:3`, `complete_bipartite:3,3` or graph JSON.
        #[arg(long)]
        base: String,
        /// `all` or an operation name such as `subdivision`.
        #[arg(long, default_value = "all")]
        op: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FastPath {
    Auto,
    Generic,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteName {
    Small,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Core(#[from] Error),
    #[error("cannot read {path}: {message}")]
    Read { path: String, message: String },
    #[error("cannot write {path}: {message}")]
    Write { path: String, message: String },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::SizeBoundExceeded { .. }) => 4,
            CliError::Core(Error::Malformed(_) | Error::UnknownKind(_)) => 2,
            CliError::Read { .. } | CliError::Usage(_) => 2,
            CliError::Core(_) | CliError::Write { .. } => 3,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

struct Limits {
    oracle: usize,
    theorem: usize,
}

fn limit(flag: Option<usize>, var: &str, default: usize) -> CliResult<usize> {
    if let Some(v) = flag {
        return Ok(v);
    }
    match std::env::var(var) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{var} must be a vertex count, got `{s}`"))),
        Err(_) => Ok(default),
    }
}

/// Inline JSON when the argument looks like JSON, else a file path.
fn load(arg: &str) -> CliResult<Value> {
    let trimmed = arg.trim_start();
    let text = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| CliError::Read {
            path: arg.to_string(),
            message: e.to_string(),
        })?
    };
    Ok(serde_json::from_str(&text).map_err(Error::from)?)
}

fn load_spec(arg: &str, limits: &Limits) -> CliResult<CoronaSpec> {
    let spec = spec_from_json(&load(arg)?)?;
    let size = spec.total_vertices();
    if size > limits.theorem {
        return Err(Error::SizeBoundExceeded { size, bound: limits.theorem }.into());
    }
    Ok(spec)
}

fn matrix_from_json(v: &Value) -> CliResult<IntMatrix> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Malformed("matrix must be an array of rows".into()))?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Malformed("matrix rows must be arrays".into()))?
                .iter()
                .map(|x| x.as_i64().ok_or_else(|| Error::Malformed(format!("non-integer entry {x}"))))
                .collect::<Result<Vec<i64>, Error>>()
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(IntMatrix::from_rows(&rows)?)
}

fn parse_alpha(s: &str, n: usize) -> CliResult<IndexSet> {
    let idx = s
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<usize>().map_err(|_| CliError::Usage(format!("bad index `{p}` in --alpha"))))
        .collect::<CliResult<Vec<_>>>()?;
    Ok(IndexSet::new(idx, n)?)
}

fn parse_base(s: &str) -> CliResult<Graph> {
    if s.trim_start().starts_with('{') {
        return Ok(graph_from_json(&load(s)?)?);
    }
    let (name, args) = s.split_once(':').unwrap_or((s, ""));
    let nums = args
        .split(',')
        .filter(|p| !p.is_empty())
        .map(|p| p.trim().parse::<usize>().map_err(|_| CliError::Usage(format!("bad size `{p}` in `{s}`"))))
        .collect::<CliResult<Vec<_>>>()?;
    let g = match (name, nums.as_slice()) {
        ("cycle", [n]) => Graph::cycle(*n)?,
        ("complete", [n]) => Graph::complete(*n)?,
        ("path", [n]) => Graph::path(*n)?,
        ("complete_bipartite", [p, q]) => Graph::complete_bipartite(*p, *q)?,
        _ => return Ok(graph_from_json(&load(s)?)?),
    };
    Ok(g)
}

fn run(cli: &Cli) -> CliResult<(Value, bool)> {
    let limits = Limits {
        oracle: limit(cli.oracle_limit, ORACLE_ENV, DEFAULT_ORACLE_LIMIT)?,
        theorem: limit(cli.theorem_limit, THEOREM_ENV, DEFAULT_THEOREM_LIMIT)?,
    };
    let strategy = if cli.sequential { Strategy::Sequential } else { Strategy::default() };
    match &cli.command {
        Command::Build { spec } => {
            let spec = load_spec(spec, &limits)?;
            Ok((graph_to_json(&build(&spec)), true))
        }
        Command::Coronal { input, alpha, matrix, fast_path } => {
            let v = load(input)?;
            let m = if v.is_array() { matrix_from_json(&v)? } else { matrix.matrix(&graph_from_json(&v)?) };
            let n = m.ensure_square()?;
            let alpha = match alpha {
                Some(s) => parse_alpha(s, n)?,
                None => IndexSet::all(n),
            };
            let gamma = match fast_path {
                FastPath::Auto => coronal_auto(&m, &alpha)?.0,
                FastPath::Generic => coronal_generic(&m, &alpha)?,
            };
            Ok((ratfun_to_json(&gamma), true))
        }
        Command::Charpoly { spec, matrix, oracle, roots } => {
            let spec = load_spec(spec, &limits)?;
            let opts = ReportOptions {
                oracle: *oracle,
                oracle_bound: limits.oracle,
                roots: *roots,
                strategy,
                ..ReportOptions::default()
            };
            let report = charpoly_report(&spec, *matrix, &opts)?;
            let ok = report.verdict != corona_core::spectra::Verdict::Mismatch;
            Ok((report.to_json(), ok))
        }
        Command::Verify { spec, suite } => {
            let cases = match (spec, suite) {
                (Some(s), None) => vec![SuiteCase { name: s.clone(), spec: load_spec(s, &limits)? }],
                (None, Some(SuiteName::Small)) => small_suite()?,
                _ => return Err(CliError::Usage("give exactly one of <spec> or --suite".into())),
            };
            let report = verify(&cases, &SpectralKind::ALL, limits.oracle, strategy)?;
            let ok = report.passes();
            let failures = report.failures().len();
            Ok((json!({"passed": ok, "cases": report.cases.len(), "failures": failures, "results": report.cases}), ok))
        }
        Command::Cluster { g, h, root } => {
            let g = graph_from_json(&load(g)?)?;
            let h = graph_from_json(&load(h)?)?.with_root(*root)?;
            let size = g.n() * (h.n() + 1);
            if size > limits.theorem {
                return Err(Error::SizeBoundExceeded { size, bound: limits.theorem }.into());
            }
            let (a, l) = cluster_charpolys(&g, &h)?;
            Ok((json!({"adjacency": poly_to_json(&a), "laplacian": poly_to_json(&l)}), true))
        }
        Command::Cospectral { spec, matrix, max_permutations, seed } => {
            let spec = load_spec(spec, &limits)?;
            let opts = CospectralOptions {
                max_permutations: *max_permutations,
                seed: *seed,
                oracle_bound: limits.oracle,
                strategy,
            };
            let report = cospectral_family(&spec, *matrix, &opts)?;
            let ok = report.passes();
            Ok((serde_json::to_value(&report).map_err(Error::from)?, ok))
        }
        Command::TableCheck { base, op } => {
            let g = parse_base(base)?;
            let ops: Vec<UnaryKind> = if op == "all" { UnaryKind::ALL.to_vec() } else { vec![op.parse()?] };
            let report = table_check(&g, &ops)?;
            let ok = report.undocumented().is_empty();
            Ok((serde_json::to_value(&report).map_err(Error::from)?, ok))
        }
    }
}

fn emit(value: &Value, output: Option<&Path>) -> CliResult<()> {
    let text = serde_json::to_string_pretty(value).map_err(Error::from)? + "\n";
    match output {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Write {
            path: path.display().to_string(),
            message: e.to_string(),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli).and_then(|(value, ok)| emit(&value, cli.output.as_deref()).map(|_| ok));
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
