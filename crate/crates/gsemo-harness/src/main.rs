//! `gsemo` command-line tool.
//!
//! Exit codes: 0 success (for `verify`: all criteria pass), 1 verification
//! failure, 2 input parse error, 3 budget/guard violation, 4 internal error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use gsemo_core::diagnostics::{brute_force_opt, DiagnosticsError};
use gsemo_core::engines::SizeBound;
use gsemo_core::objectives::{PerturbationMode, PerturbationSpec, PerturbedFunction};
use gsemo_core::SetFunction;

use gsemo_harness::diagnose::diagnose;
use gsemo_harness::experiment::{run_experiment, Algorithm, ExperimentError, ExperimentSpec};
use gsemo_harness::io::{
    parse_coverage, parse_facility, parse_graph, parse_regression, ParseError,
};
use gsemo_harness::verify::{run_suite, Suite};

#[derive(Parser)]
#[command(name = "gsemo", about = "Subset maximization with a Pareto-archive evolutionary optimizer, baselines and brute-force diagnostics", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an algorithm on an instance over one or more seeds.
    Run(RunArgs),
    /// Run a verification suite against the built-in instances.
    Verify {
        /// core | theorem1 | theorem2 | theorem3 | theorem4 | lemmas
        #[arg(long)]
        suite: Suite,
    },
    /// Write a brute-force diagnostics report for an instance.
    Diagnose(DiagnoseArgs),
    /// Print the exact optimum of an instance by enumeration.
    Opt(OptArgs),
}

#[derive(Args)]
struct ProblemArgs {
    /// maxcut | coverage | facility | regression | perturbed
    #[arg(long)]
    problem: String,
    /// Instance file (see README for the per-problem formats).
    #[arg(long)]
    input: PathBuf,
    /// Perturbation mode for --problem perturbed (base file is coverage).
    #[arg(long)]
    perturb: Option<String>,
    /// Epsilon for local search or for the perturbation.
    #[arg(long)]
    epsilon: Option<f64>,
    /// The regression CSV has a header line.
    #[arg(long)]
    header: bool,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    /// gsemo | oneplusone | greedy | doublegreedy | localsearch
    #[arg(long)]
    algo: Algorithm,
    /// Size constraint |x| <= k (omit for unconstrained).
    #[arg(long)]
    k: Option<usize>,
    /// Iteration budget for the randomized algorithms.
    #[arg(long, default_value_t = 10_000)]
    budget: u64,
    /// Seed list `1,2,7` or inclusive range `1..20`.
    #[arg(long, default_value = "1")]
    seeds: String,
    /// Write the JSON result record here (also printed as a summary line).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write per-seed CSV traces (iteration, bestFeasibleValue, archiveOccupancy).
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Args)]
struct DiagnoseArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    #[arg(long)]
    k: Option<usize>,
    /// Raise the enumeration guard from 24 to 28 elements.
    #[arg(long)]
    guard_override: bool,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OptArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    guard_override: bool,
}

#[derive(Debug)]
enum CliError {
    Parse(String),
    Guard(String),
    Internal(String),
}

impl CliError {
    fn code(&self) -> ExitCode {
        match self {
            CliError::Parse(_) => ExitCode::from(2),
            CliError::Guard(_) => ExitCode::from(3),
            CliError::Internal(_) => ExitCode::from(4),
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Guard(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<DiagnosticsError> for CliError {
    fn from(e: DiagnosticsError) -> Self {
        CliError::Guard(e.to_string())
    }
}

impl From<ExperimentError> for CliError {
    fn from(e: ExperimentError) -> Self {
        match e {
            ExperimentError::InvalidSpec(m) => CliError::Guard(m),
            ExperimentError::Internal(m) => CliError::Internal(m),
            ExperimentError::Output { .. } => CliError::Internal(e.to_string()),
        }
    }
}

fn load_oracle(args: &ProblemArgs) -> Result<Box<dyn SetFunction + Send + Sync>, CliError> {
    match args.problem.as_str() {
        "maxcut" => Ok(Box::new(parse_graph(&args.input)?)),
        "coverage" => Ok(Box::new(parse_coverage(&args.input)?)),
        "facility" => Ok(Box::new(parse_facility(&args.input)?)),
        "regression" => Ok(Box::new(parse_regression(&args.input, args.header)?)),
        "perturbed" => {
            let base = parse_coverage(&args.input)?;
            let mode = match args.perturb.as_deref() {
                Some("additive") => PerturbationMode::Additive,
                Some("multiplicative") => PerturbationMode::Multiplicative,
                Some(other) => {
                    return Err(CliError::Parse(format!(
                        "unknown perturbation mode {other:?}; expected additive or multiplicative"
                    )))
                }
                None => {
                    return Err(CliError::Parse(
                        "--problem perturbed requires --perturb".to_string(),
                    ))
                }
            };
            let epsilon = args.epsilon.ok_or_else(|| {
                CliError::Parse("--problem perturbed requires --epsilon".to_string())
            })?;
            let spec = PerturbationSpec {
                mode,
                epsilon,
                seed: 0,
            };
            PerturbedFunction::new(base, spec)
                .map(|f| Box::new(f) as Box<dyn SetFunction + Send + Sync>)
                .map_err(|e| CliError::Parse(e.to_string()))
        }
        other => Err(CliError::Parse(format!(
            "unknown problem {other:?}; expected maxcut, coverage, facility, regression or perturbed"
        ))),
    }
}

/// Seed spec: comma-separated list or inclusive range `a..b`.
fn parse_seeds(spec: &str) -> Result<Vec<u64>, CliError> {
    let bad = |m: String| CliError::Parse(m);
    if let Some((a, b)) = spec.split_once("..") {
        let a: u64 = a
            .trim()
            .parse()
            .map_err(|_| bad(format!("invalid range start {a:?} in --seeds")))?;
        let b: u64 = b
            .trim()
            .trim_start_matches('=')
            .parse()
            .map_err(|_| bad(format!("invalid range end {b:?} in --seeds")))?;
        if a > b {
            return Err(bad(format!("empty seed range {spec:?}")));
        }
        Ok((a..=b).collect())
    } else {
        spec.split(',')
            .map(|tok| {
                tok.trim()
                    .parse()
                    .map_err(|_| bad(format!("invalid seed {:?} in --seeds", tok.trim())))
            })
            .collect()
    }
}

fn cmd_run(args: RunArgs) -> Result<(), CliError> {
    let oracle = load_oracle(&args.problem)?;
    let spec = ExperimentSpec {
        problem: args.problem.problem.clone(),
        input: Some(args.problem.input.display().to_string()),
        algorithm: args.algo,
        k: args.k,
        budget: args.budget,
        seeds: parse_seeds(&args.seeds)?,
        epsilon: args.problem.epsilon,
        perturb: args.problem.perturb.clone(),
    };
    let mut record = run_experiment(oracle.as_ref(), &spec, args.trace.as_deref())?;
    // Cheap enough to enumerate: report the best value relative to the exact
    // optimum under the same constraint.
    if oracle.n() <= 14 {
        let bound = match args.k {
            Some(k) => SizeBound::AtMost(k),
            None => SizeBound::Unbounded,
        };
        let (opt, _) = brute_force_opt(oracle.as_ref(), bound, false)?;
        if opt > 0.0 && record.aggregate.max_best_value >= 0.0 {
            record.ratio_to_opt = Some(record.aggregate.max_best_value / opt);
        }
    }
    let json = serde_json::to_string_pretty(&record)
        .map_err(|e| CliError::Internal(e.to_string()))?;
    if let Some(out) = &args.out {
        std::fs::write(out, &json)
            .map_err(|e| CliError::Internal(format!("cannot write {}: {e}", out.display())))?;
    } else {
        println!("{json}");
    }
    println!(
        "{} on {}: {} record(s), best {:.6} / median {:.6} / min {:.6}",
        spec.problem,
        spec.input.as_deref().unwrap_or("<builtin>"),
        record.records.len(),
        record.aggregate.max_best_value,
        record.aggregate.median_best_value,
        record.aggregate.min_best_value,
    );
    Ok(())
}

fn cmd_verify(suite: Suite) -> Result<bool, CliError> {
    let outcomes = run_suite(suite);
    let mut all = true;
    for outcome in &outcomes {
        println!("{}", outcome.line());
        all &= outcome.passed;
    }
    Ok(all)
}

fn cmd_diagnose(args: DiagnoseArgs) -> Result<(), CliError> {
    let oracle = load_oracle(&args.problem)?;
    let report = diagnose(oracle.as_ref(), args.k, args.guard_override)?;
    let json = serde_json::to_string_pretty(&report)
        .map_err(|e| CliError::Internal(e.to_string()))?;
    match &args.out {
        Some(out) => std::fs::write(out, &json)
            .map_err(|e| CliError::Internal(format!("cannot write {}: {e}", out.display())))?,
        None => println!("{json}"),
    }
    Ok(())
}

fn cmd_opt(args: OptArgs) -> Result<(), CliError> {
    let oracle = load_oracle(&args.problem)?;
    let bound = match args.k {
        Some(k) => SizeBound::AtMost(k),
        None => SizeBound::Unbounded,
    };
    let (opt, arg) = brute_force_opt(oracle.as_ref(), bound, args.guard_override)?;
    println!("opt {opt:.12} subset {}", arg.bitstring());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run(args) => cmd_run(args).map(|()| true),
        Command::Verify { suite } => cmd_verify(suite),
        Command::Diagnose(args) => cmd_diagnose(args).map(|()| true),
        Command::Opt(args) => cmd_opt(args).map(|()| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.code()
        }
    }
}
