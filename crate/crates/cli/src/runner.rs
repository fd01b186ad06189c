//! Experiment orchestration: seed derivation, parallel trial execution, and
//! output persistence.
//!
//! Per-trial seeds are `stable_hash(base_seed, [problem_label,
//! algorithm_label], trial)`, so adding an algorithm or problem never
//! perturbs the streams of the others. Trials run in a worker pool; all
//! files are written by the aggregating thread after the pool joins.

use std::collections::HashSet;
use std::path::{Path, PathBuf};

use mbgo_core::baselines::{
    de_optimize, pso_optimize, random_search, woa_optimize, DeConfig, PsoConfig,
    RandomSearchConfig, WoaConfig,
};
use mbgo_core::mbgo::{optimize, MbgoConfig};
use mbgo_core::rng::stable_hash;
use mbgo_core::{PenaltyPolicy, ProblemSpec, RunOptions, RunTrace};
use rayon::prelude::*;

use crate::config::{AlgorithmSpec, ExperimentConfig};
use crate::error::{CliError, Result};
use crate::persist::{write_trace, RunKey, StoredRun};
use crate::report::{
    build_report, emit_convergence_csv, emit_report_table, ComparisonReport, ReportFormat,
};

/// Display label of a problem instance: engineering problems keep their
/// name, benchmarks carry the dimension.
pub fn problem_label(name: &str, dimension: usize) -> String {
    match mbgo_core::problems::engineering_names().contains(&name) {
        true => name.to_string(),
        false => format!("{name}_{dimension}d"),
    }
}

struct ProblemInstance {
    label: String,
    spec: ProblemSpec,
    budget: u64,
}

struct RunJob {
    problem_index: usize,
    algorithm_index: usize,
    trial: u32,
    seed: u64,
}

/// Runs one algorithm entry on one problem with an explicit seed/budget.
pub fn run_single(
    spec: &ProblemSpec,
    algorithm: &AlgorithmSpec,
    seed: u64,
    budget: u64,
    stride: Option<u64>,
    penalty_coefficient: f64,
) -> Result<RunTrace> {
    let opts = RunOptions {
        penalty: PenaltyPolicy {
            penalty_coefficient,
        },
        trace_stride: stride,
    };
    let trace = match algorithm {
        AlgorithmSpec::Mbgo {
            population_size,
            alpha_low,
            alpha_high,
            eps,
            ..
        } => optimize(
            spec,
            &MbgoConfig {
                population_size: *population_size,
                max_evaluations: budget,
                alpha_low: *alpha_low,
                alpha_high: *alpha_high,
                eps: *eps,
                seed,
            },
            &opts,
        ),
        AlgorithmSpec::De {
            population_size,
            weighting_factor,
            crossover_rate,
            ..
        } => de_optimize(
            spec,
            &DeConfig {
                population_size: *population_size,
                max_evaluations: budget,
                weighting_factor: *weighting_factor,
                crossover_rate: *crossover_rate,
                seed,
            },
            &opts,
        ),
        AlgorithmSpec::Pso {
            population_size,
            inertia_start,
            inertia_end,
            cognitive,
            social,
            velocity_clamp_fraction,
            ..
        } => pso_optimize(
            spec,
            &PsoConfig {
                population_size: *population_size,
                max_evaluations: budget,
                inertia_start: *inertia_start,
                inertia_end: *inertia_end,
                cognitive: *cognitive,
                social: *social,
                velocity_clamp_fraction: *velocity_clamp_fraction,
                seed,
            },
            &opts,
        ),
        AlgorithmSpec::Woa {
            population_size,
            spiral_constant,
            ..
        } => woa_optimize(
            spec,
            &WoaConfig {
                population_size: *population_size,
                max_evaluations: budget,
                spiral_constant: *spiral_constant,
                seed,
            },
            &opts,
        ),
        AlgorithmSpec::Random {
            population_size, ..
        } => random_search(
            spec,
            &RandomSearchConfig {
                population_size: *population_size,
                max_evaluations: budget,
                seed,
            },
            &opts,
        ),
    };
    trace.map_err(CliError::from)
}

/// Output of a full experiment, before/after persistence.
pub struct ExperimentOutput {
    pub runs: Vec<StoredRun>,
    pub report: ComparisonReport,
    pub problem_labels: Vec<String>,
    pub algorithm_labels: Vec<String>,
}

/// Executes every (problem, algorithm, trial) combination of the config.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentOutput> {
    cfg.validate()?;
    let problems: Vec<ProblemInstance> = cfg
        .problems
        .iter()
        .map(|p| -> Result<ProblemInstance> {
            let spec = mbgo_core::problems::resolve(&p.name, p.dimension)?;
            let label = problem_label(&p.name, spec.dimension());
            let budget = cfg.budget_override.unwrap_or_else(|| spec.default_budget());
            Ok(ProblemInstance {
                label,
                spec,
                budget,
            })
        })
        .collect::<Result<_>>()?;
    let algorithm_labels: Vec<String> = cfg.algorithms.iter().map(|a| a.label()).collect();

    // Derive all seeds up front and reject collisions.
    let mut jobs = Vec::new();
    let mut seen = HashSet::new();
    for (pi, problem) in problems.iter().enumerate() {
        for (ai, label) in algorithm_labels.iter().enumerate() {
            for trial in 0..cfg.trials {
                let seed = stable_hash(cfg.base_seed, &[&problem.label, label], trial as u64);
                if !seen.insert(seed) {
                    return Err(CliError::Runtime(format!(
                        "seed collision at {}/{label}/trial {trial}; change base_seed",
                        problem.label
                    )));
                }
                jobs.push(RunJob {
                    problem_index: pi,
                    algorithm_index: ai,
                    trial,
                    seed,
                });
            }
        }
    }

    let workers = cfg
        .workers
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
        .max(1);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| CliError::Runtime(format!("building worker pool: {e}")))?;

    let runs: Vec<StoredRun> = pool.install(|| {
        jobs.par_iter()
            .map(|job| -> Result<StoredRun> {
                let problem = &problems[job.problem_index];
                let algorithm = &cfg.algorithms[job.algorithm_index];
                let trace = run_single(
                    &problem.spec,
                    algorithm,
                    job.seed,
                    problem.budget,
                    cfg.trace_stride,
                    cfg.penalty_coefficient,
                )?;
                Ok(StoredRun {
                    key: RunKey {
                        problem: problem.label.clone(),
                        algorithm: algorithm_labels[job.algorithm_index].clone(),
                        trial: job.trial,
                    },
                    population_size: algorithm.population_size(),
                    penalty_coefficient: cfg.penalty_coefficient,
                    trace,
                })
            })
            .collect::<Result<Vec<_>>>()
    })?;

    let problem_labels: Vec<String> = problems.iter().map(|p| p.label.clone()).collect();
    let report = build_report(&runs, &problem_labels, &algorithm_labels, cfg.alpha)?;
    Ok(ExperimentOutput {
        runs,
        report,
        problem_labels,
        algorithm_labels,
    })
}

/// Persists traces, reports, convergence curves, and the resolved config
/// echo under `dir`. `format` restricts the report rendering; `None` writes
/// all three.
pub fn persist_experiment(
    dir: &Path,
    cfg: &ExperimentConfig,
    output: &ExperimentOutput,
    format: Option<ReportFormat>,
) -> Result<Vec<PathBuf>> {
    let mut written = Vec::new();
    std::fs::create_dir_all(dir).map_err(|e| CliError::runtime_io("creating output dir", e))?;

    let echo = serde_json::to_string_pretty(&cfg.resolved_echo())
        .map_err(|e| CliError::Runtime(format!("serializing config echo: {e}")))?;
    let echo_path = dir.join("resolved_config.json");
    std::fs::write(&echo_path, echo + "\n")
        .map_err(|e| CliError::runtime_io("writing config echo", e))?;
    written.push(echo_path);

    let trace_dir = dir.join("traces");
    for run in &output.runs {
        written.push(write_trace(&trace_dir, run)?);
    }

    written.extend(persist_reports(dir, output, format)?);
    Ok(written)
}

/// Writes report files and convergence curves from an in-memory output.
pub fn persist_reports(
    dir: &Path,
    output: &ExperimentOutput,
    format: Option<ReportFormat>,
) -> Result<Vec<PathBuf>> {
    let mut written = Vec::new();
    let formats = match format {
        Some(f) => vec![f],
        None => vec![ReportFormat::Csv, ReportFormat::Json, ReportFormat::Markdown],
    };
    for format in formats {
        let path = dir.join(format!("report.{}", format.extension()));
        emit_report_table(&output.report, format, &path)?;
        written.push(path);
    }
    let curve_dir = dir.join("convergence");
    std::fs::create_dir_all(&curve_dir)
        .map_err(|e| CliError::runtime_io("creating convergence dir", e))?;
    for label in &output.problem_labels {
        let runs: Vec<StoredRun> = output
            .runs
            .iter()
            .filter(|r| &r.key.problem == label)
            .cloned()
            .collect();
        let path = curve_dir.join(format!("{label}.csv"));
        emit_convergence_csv(&runs, &output.algorithm_labels, &path)?;
        written.push(path);
    }
    Ok(written)
}
