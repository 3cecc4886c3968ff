//! Command-line surface.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input or parameter
//! error, 3 coloring is not balanced, 4 time budget exhausted. Diagnostics
//! go to stderr as `ERROR <exit code>: <message>`.

pub mod format;
pub mod sweep;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::bounds::{required_size, target_size, validate_params};
use crate::extractor::{extract_with, ExtractError, ExtractOptions, ExtractionTrace};
use crate::generators::{generate, GenError, GenKind, GenSpec, Generated};
use crate::graph_core::{verify_witness, Epsilon};
use crate::oracle::{self, Budget, OracleError, OracleResult};

use format::{Instance, FormatError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNBALANCED: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "dense-ramsey", version, about = "Certified homogeneous sets in dense graphs and unbalanced colorings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a random graph, Turán graph or unbalanced coloring.
    Gen(GenArgs),
    /// Report whether a coloring is eps-balanced (exit 3 when it is not).
    Balance {
        path: PathBuf,
        #[arg(long)]
        eps: String,
    },
    /// Extract a clique or independent set of the guaranteed size.
    Extract(ExtractArgs),
    /// Check a witness file against a graph and parameters.
    Verify {
        graph: PathBuf,
        witness: PathBuf,
        #[arg(long)]
        k: f64,
        #[arg(long = "C", default_value_t = 0.01)]
        c: f64,
    },
    /// Exact clique and independence numbers.
    Oracle {
        path: PathBuf,
        #[arg(long)]
        stop_at: Option<usize>,
        #[arg(long, default_value_t = 30.0)]
        budget_secs: f64,
    },
    /// Extract and verify over a parameter grid, writing CSV.
    Sweep(SweepArgs),
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, conflicts_with_all = ["eps", "turan_r"], required_unless_present_any = ["eps", "turan_r"])]
    m: Option<usize>,
    #[arg(long, conflicts_with = "turan_r")]
    eps: Option<String>,
    #[arg(long)]
    turan_r: Option<usize>,
    /// Hill-climb from the `--m` graph to lower max(clique, independent set).
    #[arg(long, requires = "m")]
    tightness_iters: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ExtractArgs {
    path: PathBuf,
    #[arg(long)]
    k: f64,
    #[arg(long = "C", default_value_t = 0.01)]
    c: f64,
    /// Comma-separated 1-indexed vertices seeding the middle-range loop.
    #[arg(long, value_delimiter = ',')]
    initial_clique: Option<Vec<usize>>,
    /// Append the extraction trace as comment lines.
    #[arg(long)]
    trace: bool,
    #[arg(long, default_value_t = 30.0)]
    budget_secs: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    n_list: Vec<usize>,
    #[arg(long, value_delimiter = ',', required = true)]
    k_list: Vec<f64>,
    #[arg(long = "C", default_value_t = 0.01)]
    c: f64,
    #[arg(long, default_value_t = 1)]
    reps: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write 0 in the elapsed_ms column so output is byte-reproducible.
    #[arg(long)]
    fixed_timing: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A failure with its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Failure { code: EXIT_INPUT, message: message.to_string() }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::input(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::input(e)
    }
}

/// Parses `argv` (including the program name) and runs the subcommand.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let _ = writeln!(err, "ERROR {EXIT_INPUT}: {}", e.to_string().trim_end());
            return EXIT_INPUT;
        }
    };
    let result = match cli.command {
        Command::Gen(args) => cmd_gen(args, out),
        Command::Balance { path, eps } => cmd_balance(&path, &eps, out),
        Command::Extract(args) => cmd_extract(args, out),
        Command::Verify { graph, witness, k, c } => cmd_verify(&graph, &witness, k, c, out),
        Command::Oracle { path, stop_at, budget_secs } => cmd_oracle(&path, stop_at, budget_secs, out),
        Command::Sweep(args) => cmd_sweep(args, out, err),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "ERROR {}: {}", f.code, f.message);
            f.code
        }
    }
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(p) => format::write_text(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn budget_from_secs(secs: f64) -> Result<Budget, Failure> {
    if !(secs.is_finite() && secs >= 0.0) {
        return Err(Failure::input(format!("budget must be a non-negative number of seconds, got {secs}")));
    }
    Ok(Budget::seconds(secs))
}

fn cmd_gen(args: GenArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let kind = if let Some(r) = args.turan_r {
        GenKind::TuranGraph { r }
    } else if let Some(eps) = &args.eps {
        GenKind::UnbalancedColoring { eps: eps.parse::<Epsilon>().map_err(Failure::input)? }
    } else {
        let m = args.m.expect("clap requires one generator flag");
        match args.tightness_iters {
            Some(iterations) => GenKind::TightnessSearch { m, iterations },
            None => GenKind::RandomExact { m },
        }
    };
    let spec = GenSpec { n: args.n, seed: args.seed, kind };
    let text = match generate(&spec) {
        Ok(Generated::Graph(g)) => format::graph_to_string(&g),
        Ok(Generated::Coloring(c)) => format::coloring_to_string(&c),
        Err(GenError::InvalidInput(e)) => return Err(Failure::input(e)),
        Err(e @ GenError::BudgetExceeded { .. }) => {
            return Err(Failure { code: EXIT_BUDGET, message: e.to_string() })
        }
    };
    emit(&text, args.out.as_deref(), out)?;
    Ok(EXIT_OK)
}

fn cmd_balance(path: &Path, eps: &str, out: &mut dyn Write) -> Result<i32, Failure> {
    let eps: Epsilon = eps.parse().map_err(Failure::input)?;
    let coloring = format::read_coloring(path)?;
    let balanced = coloring.is_eps_balanced(eps).map_err(Failure::input)?;
    writeln!(
        out,
        "{} n={} red={} blue={} eps={}",
        if balanced { "balanced" } else { "unbalanced" },
        coloring.n(),
        coloring.red_count(),
        coloring.blue_count(),
        eps
    )?;
    Ok(if balanced { EXIT_OK } else { EXIT_UNBALANCED })
}

/// Trace as `c` comment lines, with 1-indexed vertices.
pub fn trace_to_comments(trace: &ExtractionTrace) -> String {
    let one_based = |vs: &[usize]| vs.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ");
    let mut s = String::new();
    writeln!(s, "c trace case {}", trace.case_used).unwrap();
    writeln!(s, "c trace w_removed {} {}", trace.w_removed.len(), one_based(&trace.w_removed)).unwrap();
    let history: Vec<String> = trace.clique_history.iter().map(|(i, a)| format!("{i}:{a}")).collect();
    writeln!(s, "c trace clique_history {}", history.join(" ")).unwrap();
    writeln!(s, "c trace a_prime {}", one_based(&trace.a_prime)).unwrap();
    writeln!(s, "c trace b_prime_size {}", trace.b_prime_size).unwrap();
    writeln!(s, "c trace es_calls {}", trace.es_calls).unwrap();
    writeln!(s, "c trace greedy_used {}", trace.greedy_used).unwrap();
    writeln!(s, "c trace oracle_fallback {}", trace.oracle_fallback).unwrap();
    for check in &trace.assertions_checked {
        writeln!(s, "c check {check}").unwrap();
    }
    s
}

fn cmd_extract(args: ExtractArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let (graph, note) = match format::read_instance(&args.path)? {
        Instance::Graph(g) => (g, None),
        Instance::Coloring(c) => {
            let (g, minority) = c.majority_graph().map_err(Failure::input)?;
            (g, Some(minority))
        }
    };
    let params = validate_params(graph.n(), args.k, args.c).map_err(Failure::input)?;
    let initial_clique = match args.initial_clique {
        Some(vs) => {
            if vs.contains(&0) {
                return Err(Failure::input("initial clique vertices are 1-indexed"));
            }
            Some(vs.into_iter().map(|v| v - 1).collect())
        }
        None => None,
    };
    let opts = ExtractOptions { initial_clique, budget: budget_from_secs(args.budget_secs)?, ..Default::default() };
    let (witness, trace) = match extract_with(&graph, &params, &opts) {
        Ok(x) => x,
        Err(e @ ExtractError::PreconditionViolated(_)) => return Err(Failure::input(e)),
        Err(e @ ExtractError::InvariantBreach { .. }) => {
            return Err(Failure { code: EXIT_VERIFY_FAILED, message: e.to_string() })
        }
        Err(e @ ExtractError::BudgetExceeded { .. }) => {
            return Err(Failure { code: EXIT_BUDGET, message: e.to_string() })
        }
    };
    let mut text = String::new();
    if let Some(minority) = note {
        writeln!(text, "c majority graph of coloring, minority fraction {minority}").unwrap();
    }
    writeln!(
        text,
        "c n {} k {} C {} target {} required {}",
        params.n(),
        params.k(),
        params.c(),
        target_size(&params),
        required_size(&params)
    )
    .unwrap();
    text.push_str(&format::witness_to_string(&witness));
    if args.trace {
        text.push_str(&trace_to_comments(&trace));
    }
    emit(&text, args.out.as_deref(), out)?;
    Ok(EXIT_OK)
}

fn cmd_verify(graph: &Path, witness: &Path, k: f64, c: f64, out: &mut dyn Write) -> Result<i32, Failure> {
    let g = match format::read_instance(graph)? {
        Instance::Graph(g) => g,
        Instance::Coloring(c) => c.majority_graph().map_err(Failure::input)?.0,
    };
    let w = format::read_witness(witness)?;
    let params = validate_params(g.n(), k, c).map_err(Failure::input)?;
    let ok = verify_witness(&g, &w, &params).map_err(Failure::input)?;
    if ok {
        writeln!(out, "verified {} {} target {}", w.kind, w.size(), target_size(&params))?;
        Ok(EXIT_OK)
    } else {
        let reason = if !w.holds_in(&g) {
            format!("vertex set is not a {} in the graph", w.kind)
        } else {
            format!("size {} is below the target {}", w.size(), target_size(&params))
        };
        writeln!(out, "rejected: {reason}")?;
        Ok(EXIT_VERIFY_FAILED)
    }
}

fn oracle_line(label: &str, r: &OracleResult) -> String {
    let vs: Vec<String> = r.witness.iter().map(|v| (v + 1).to_string()).collect();
    format!(
        "{label} {} {} nodes {} vertices {}",
        r.best_size,
        if r.exhausted { "exact" } else { "lower-bound" },
        r.nodes_explored,
        vs.join(" ")
    )
}

fn cmd_oracle(path: &Path, stop_at: Option<usize>, budget_secs: f64, out: &mut dyn Write) -> Result<i32, Failure> {
    let g = match format::read_instance(path)? {
        Instance::Graph(g) => g,
        Instance::Coloring(c) => c.red().clone(),
    };
    let budget = budget_from_secs(budget_secs)?;
    let on_budget = |e: OracleError| Failure { code: EXIT_BUDGET, message: e.to_string() };
    let clique = oracle::max_clique_with_budget(&g, stop_at, budget).map_err(on_budget)?;
    let independent = oracle::max_independent_set_with_budget(&g, stop_at, budget).map_err(on_budget)?;
    writeln!(out, "{}", oracle_line("clique", &clique))?;
    writeln!(out, "{}", oracle_line("independent-set", &independent))?;
    Ok(EXIT_OK)
}

fn cmd_sweep(args: SweepArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    if !(args.c > 0.0 && args.c <= crate::bounds::MAX_C) {
        return Err(Failure::input(format!("C must lie in (0, 0.01], got {}", args.c)));
    }
    let cfg = sweep::SweepConfig {
        n_list: args.n_list,
        k_list: args.k_list,
        c: args.c,
        reps: args.reps,
        seed: args.seed,
        fixed_timing: args.fixed_timing,
    };
    let outcome = sweep::run_sweep(&cfg);
    for (n, k, why) in &outcome.skipped {
        writeln!(err, "c skipped n={n} k={k}: {why}")?;
    }
    emit(&sweep::csv_string(&outcome.rows), args.out.as_deref(), out)?;
    let failed = outcome.rows.iter().filter(|r| !r.verified).count();
    if failed > 0 {
        return Err(Failure { code: EXIT_VERIFY_FAILED, message: format!("{failed} sweep rows failed verification") });
    }
    Ok(EXIT_OK)
}
