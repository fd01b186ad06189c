//! Command-line entry point.
//!
//! Subcommands: `list` (problem catalog), `run` (one algorithm on one
//! problem), `compare` (full experiment from a JSON config), `stats`
//! (regenerate reports from stored traces). Exit codes: 0 success, 1 usage
//! error, 2 runtime error.

mod config;
mod error;
mod persist;
mod report;
mod runner;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use config::{AlgorithmSpec, ExperimentConfig};
use error::{CliError, Result};
use report::{fmt_f64, ReportFormat};

#[derive(Parser)]
#[command(name = "mbgo", version, about = "Battle-game optimizer benchmark harness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the problem catalog (text or JSON manifest).
    List(ListArgs),
    /// Run one algorithm on one problem and write its trace.
    Run(RunArgs),
    /// Run a full experiment from a JSON config file.
    Compare(CompareArgs),
    /// Recompute the report files from traces stored by `compare`.
    Stats(StatsArgs),
}

#[derive(Args)]
struct ListArgs {
    /// Output format: text (default) or json.
    #[arg(long)]
    format: Option<String>,
    /// Benchmark dimension used in the manifest (default 10).
    #[arg(long)]
    dim: Option<usize>,
}

#[derive(Args)]
struct RunArgs {
    /// Algorithm: mbgo, de, pso, woa, random.
    algorithm: String,
    /// Catalog problem name.
    problem: String,
    /// Benchmark dimension (engineering problems have a fixed one).
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Evaluation budget; defaults to the per-problem rule.
    #[arg(long)]
    budget: Option<u64>,
    /// Output directory for the trace file.
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

#[derive(Args)]
struct CompareArgs {
    /// Experiment config (JSON).
    #[arg(long)]
    config: PathBuf,
    /// Output directory (overrides the config).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Base seed (overrides the config).
    #[arg(long)]
    seed: Option<u64>,
    /// Trials per (problem, algorithm) pair (overrides the config).
    #[arg(long)]
    trials: Option<u32>,
    /// Evaluation budget for every problem (overrides the config rule).
    #[arg(long)]
    budget: Option<u64>,
    /// Report format: csv, json, or markdown (default: write all three).
    #[arg(long)]
    format: Option<String>,
}

#[derive(Args)]
struct StatsArgs {
    /// Directory holding resolved_config.json and traces/ from `compare`.
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Significance level (default: the stored config's alpha).
    #[arg(long)]
    alpha: Option<f64>,
    /// Report format: csv, json, or markdown (default: write all three).
    #[arg(long)]
    format: Option<String>,
}

fn parse_format(arg: &Option<String>) -> Result<Option<ReportFormat>> {
    match arg {
        None => Ok(None),
        Some(name) => ReportFormat::from_name(name).map(Some).ok_or_else(|| {
            CliError::Usage(format!(
                "unknown report format: {name} (expected csv, json, or markdown)"
            ))
        }),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            eprint!("{e}");
            std::process::exit(1);
        }
    };
    let result = match cli.command {
        Command::List(args) => cmd_list(args),
        Command::Run(args) => cmd_run(args),
        Command::Compare(args) => cmd_compare(args),
        Command::Stats(args) => cmd_stats(args),
    };
    if let Err(e) = result {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}

fn cmd_list(args: ListArgs) -> Result<()> {
    let rows = mbgo_core::problems::problem_info(args.dim)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    match args.format.as_deref() {
        None | Some("text") => {
            println!(
                "{:<26} {:<12} {:>4}  {:>11} {:>7}  notes",
                "name", "kind", "dim", "constraints", "budget"
            );
            for row in rows {
                let dim = if row.dimension_fixed {
                    format!("{}", row.dimension)
                } else {
                    format!("{}*", row.dimension)
                };
                let discrete = row
                    .discrete_mask
                    .iter()
                    .any(|m| !matches!(m, mbgo_core::problems::DiscreteRule::Continuous));
                println!(
                    "{:<26} {:<12} {:>4}  {:>11} {:>7}  {}{}",
                    row.name,
                    row.kind,
                    dim,
                    row.constraint_count,
                    row.default_budget,
                    row.description,
                    if discrete { " [discrete]" } else { "" }
                );
            }
            println!("\n* benchmark dimension is configurable; shown at the default");
        }
        Some("json") => {
            let text = serde_json::to_string_pretty(&rows)
                .map_err(|e| CliError::Runtime(format!("serializing manifest: {e}")))?;
            println!("{text}");
        }
        Some(other) => {
            return Err(CliError::Usage(format!(
                "unknown list format: {other} (expected text or json)"
            )));
        }
    }
    Ok(())
}

fn cmd_run(args: RunArgs) -> Result<()> {
    let algorithm = AlgorithmSpec::from_kind(&args.algorithm)
        .ok_or_else(|| CliError::Usage(format!("unknown algorithm: {}", args.algorithm)))?;
    let spec = mbgo_core::problems::resolve(&args.problem, args.dim)?;
    let label = runner::problem_label(&args.problem, spec.dimension());
    let budget = args.budget.unwrap_or_else(|| spec.default_budget());

    let trace = runner::run_single(&spec, &algorithm, args.seed, budget, None, 1e9)?;
    let stored = persist::StoredRun {
        key: persist::RunKey {
            problem: label.clone(),
            algorithm: algorithm.label(),
            trial: 0,
        },
        population_size: algorithm.population_size(),
        penalty_coefficient: 1e9,
        trace,
    };
    let path = persist::write_trace(&args.out.join("traces"), &stored)?;

    println!("problem: {label}");
    println!("algorithm: {}", algorithm.label());
    println!("seed: {}", args.seed);
    println!("budget: {budget}");
    println!("evaluations used: {}", stored.trace.evaluations_used);
    println!("best fitness: {}", fmt_f64(stored.trace.final_best.fitness));
    let position = stored
        .trace
        .final_best
        .position
        .iter()
        .map(|x| fmt_f64(*x))
        .collect::<Vec<_>>()
        .join(", ");
    println!("best position: [{position}]");
    println!("trace: {}", path.display());
    Ok(())
}

fn cmd_compare(args: CompareArgs) -> Result<()> {
    let mut cfg = ExperimentConfig::load(&args.config)?;
    if let Some(seed) = args.seed {
        cfg.base_seed = seed;
    }
    if let Some(trials) = args.trials {
        cfg.trials = trials;
    }
    if let Some(budget) = args.budget {
        cfg.budget_override = Some(budget);
    }
    if let Some(out) = args.out {
        cfg.output_dir = Some(out);
    }
    let format = parse_format(&args.format)?;
    let dir = cfg
        .output_dir
        .clone()
        .unwrap_or_else(|| PathBuf::from("out"));

    let output = runner::run_experiment(&cfg)?;
    runner::persist_experiment(&dir, &cfg, &output, format)?;
    print_report_summary(&output);
    println!("outputs: {}", dir.display());
    Ok(())
}

fn cmd_stats(args: StatsArgs) -> Result<()> {
    let config_path = args.out.join("resolved_config.json");
    let cfg = ExperimentConfig::load(&config_path)?;
    let runs = persist::read_all_traces(&args.out.join("traces"))?;
    if runs.is_empty() {
        return Err(CliError::Usage(format!(
            "no traces under {}",
            args.out.join("traces").display()
        )));
    }
    let problem_labels: Vec<String> = cfg
        .problems
        .iter()
        .map(|p| -> Result<String> {
            let spec = mbgo_core::problems::resolve(&p.name, p.dimension)?;
            Ok(runner::problem_label(&p.name, spec.dimension()))
        })
        .collect::<Result<_>>()?;
    let algorithm_labels: Vec<String> = cfg.algorithms.iter().map(|a| a.label()).collect();
    let alpha = args.alpha.unwrap_or(cfg.alpha);

    let format = parse_format(&args.format)?;
    let report = report::build_report(&runs, &problem_labels, &algorithm_labels, alpha)?;
    let output = runner::ExperimentOutput {
        runs,
        report,
        problem_labels,
        algorithm_labels,
    };
    runner::persist_reports(&args.out, &output, format)?;
    print_report_summary(&output);
    println!("outputs: {}", args.out.display());
    Ok(())
}

fn print_report_summary(output: &runner::ExperimentOutput) {
    for problem in &output.report.problems {
        let cells: Vec<String> = problem
            .entries
            .iter()
            .map(|e| {
                let label = e
                    .versus_reference
                    .map(|r| format!(" ({})", r.label.symbol()))
                    .unwrap_or_default();
                format!("{}={:.6e}{}", e.algorithm, e.mean, label)
            })
            .collect();
        println!("{}: {}", problem.problem, cells.join("  "));
    }
    for tally in &output.report.tallies {
        println!(
            "{} vs {}: +{} ={} -{}",
            output.report.reference,
            tally.algorithm,
            tally.reference_wins,
            tally.ties,
            tally.reference_losses
        );
    }
}
