//! Comparison reports and their file renderings.
//!
//! The first algorithm in the experiment is the reference: every other
//! algorithm is tested against it with a two-sided Mann-Whitney U test, one
//! Holm family per problem, and labelled from the reference's point of view
//! (`+` reference better, `-` reference worse, `=` no significant
//! difference).

use std::path::Path;

use mbgo_core::stats::{label_family, summarize, Label, PairwiseResult, TrialSample};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};
use crate::persist::StoredRun;

/// 17 significant digits: enough for exact f64 round-trips in text formats.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct AlgorithmSummary {
    pub algorithm: String,
    pub trials: usize,
    pub mean: f64,
    pub std: f64,
    /// Best (lowest) final fitness across trials.
    pub best: f64,
    /// Test against the reference; absent for the reference row itself.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub versus_reference: Option<PairwiseResult>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ProblemReport {
    pub problem: String,
    pub dimension: usize,
    pub max_evaluations: u64,
    /// One entry per algorithm, in experiment order.
    pub entries: Vec<AlgorithmSummary>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct AlgorithmTally {
    pub algorithm: String,
    /// Problems where the reference was significantly better.
    pub reference_wins: usize,
    pub ties: usize,
    pub reference_losses: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ComparisonReport {
    pub reference: String,
    pub alpha: f64,
    pub problems: Vec<ProblemReport>,
    /// One tally per non-reference algorithm; entries sum to the problem
    /// count.
    pub tallies: Vec<AlgorithmTally>,
}

/// Builds the report from stored runs. `problem_order` and
/// `algorithm_order` fix row/column order (experiment order); the first
/// algorithm is the reference.
pub fn build_report(
    runs: &[StoredRun],
    problem_order: &[String],
    algorithm_order: &[String],
    alpha: f64,
) -> Result<ComparisonReport> {
    if algorithm_order.is_empty() || problem_order.is_empty() {
        return Err(CliError::Usage("nothing to report".into()));
    }
    let reference = algorithm_order[0].clone();
    let mut problems = Vec::new();
    let mut tallies: Vec<AlgorithmTally> = algorithm_order
        .iter()
        .skip(1)
        .map(|a| AlgorithmTally {
            algorithm: a.clone(),
            reference_wins: 0,
            ties: 0,
            reference_losses: 0,
        })
        .collect();

    for problem in problem_order {
        let mut samples = Vec::new();
        let mut dimension = 0;
        let mut budget = 0;
        for algorithm in algorithm_order {
            let mut finals: Vec<(u32, f64)> = runs
                .iter()
                .filter(|r| &r.key.problem == problem && &r.key.algorithm == algorithm)
                .map(|r| {
                    dimension = r.trace.final_best.position.len();
                    budget = r.trace.max_evaluations;
                    (r.key.trial, r.trace.final_best.fitness)
                })
                .collect();
            if finals.is_empty() {
                return Err(CliError::Runtime(format!(
                    "no runs stored for {problem}/{algorithm}"
                )));
            }
            finals.sort_by_key(|(trial, _)| *trial);
            let sample = TrialSample::new(finals.into_iter().map(|(_, f)| f).collect())
                .map_err(|e| CliError::Runtime(e.to_string()))?;
            samples.push(sample);
        }

        let comparisons: Vec<PairwiseResult> = {
            let others: Vec<&TrialSample> = samples[1..].iter().collect();
            if others.is_empty() {
                Vec::new()
            } else {
                label_family(&samples[0], &others, alpha)
            }
        };
        for (tally, result) in tallies.iter_mut().zip(&comparisons) {
            match result.label {
                Label::Plus => tally.reference_wins += 1,
                Label::Equal => tally.ties += 1,
                Label::Minus => tally.reference_losses += 1,
            }
        }

        let entries = algorithm_order
            .iter()
            .zip(&samples)
            .enumerate()
            .map(|(idx, (algorithm, sample))| {
                let (mean, std) = summarize(sample);
                let best = sample.values.iter().cloned().fold(f64::INFINITY, f64::min);
                AlgorithmSummary {
                    algorithm: algorithm.clone(),
                    trials: sample.len(),
                    mean,
                    std,
                    best,
                    versus_reference: if idx == 0 {
                        None
                    } else {
                        Some(comparisons[idx - 1])
                    },
                }
            })
            .collect();
        problems.push(ProblemReport {
            problem: problem.clone(),
            dimension,
            max_evaluations: budget,
            entries,
        });
    }

    Ok(ComparisonReport {
        reference,
        alpha,
        problems,
        tallies,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
    Markdown,
}

impl ReportFormat {
    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "csv" => Some(ReportFormat::Csv),
            "json" => Some(ReportFormat::Json),
            "markdown" | "md" => Some(ReportFormat::Markdown),
            _ => None,
        }
    }

    pub fn extension(&self) -> &'static str {
        match self {
            ReportFormat::Csv => "csv",
            ReportFormat::Json => "json",
            ReportFormat::Markdown => "md",
        }
    }
}

/// Renders the report in the requested format.
pub fn render_report(report: &ComparisonReport, format: ReportFormat) -> Result<String> {
    Ok(match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report)
                .map_err(|e| CliError::Runtime(format!("serializing report: {e}")))?;
            s.push('\n');
            s
        }
        ReportFormat::Csv => render_csv(report),
        ReportFormat::Markdown => render_markdown(report),
    })
}

/// Writes the report to `path`.
pub fn emit_report_table(
    report: &ComparisonReport,
    format: ReportFormat,
    path: &Path,
) -> Result<()> {
    let text = render_report(report, format)?;
    std::fs::write(path, text).map_err(|e| CliError::runtime_io("writing report", e))
}

fn render_csv(report: &ComparisonReport) -> String {
    let mut out = String::from(
        "problem,dimension,max_evaluations,algorithm,trials,mean,std,best,u_statistic,p_value,adjusted_p,label\n",
    );
    for problem in &report.problems {
        for entry in &problem.entries {
            let (u, p, adj, label) = match &entry.versus_reference {
                Some(r) => (
                    fmt_f64(r.u_statistic),
                    fmt_f64(r.p_value),
                    fmt_f64(r.adjusted_p),
                    r.label.symbol().to_string(),
                ),
                None => (String::new(), String::new(), String::new(), "ref".into()),
            };
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{},{}\n",
                problem.problem,
                problem.dimension,
                problem.max_evaluations,
                entry.algorithm,
                entry.trials,
                fmt_f64(entry.mean),
                fmt_f64(entry.std),
                fmt_f64(entry.best),
                u,
                p,
                adj,
                label
            ));
        }
    }
    out
}

fn render_markdown(report: &ComparisonReport) -> String {
    let algorithms: Vec<&str> = report
        .problems
        .first()
        .map(|p| p.entries.iter().map(|e| e.algorithm.as_str()).collect())
        .unwrap_or_default();

    let mut out = String::new();
    out.push_str(&format!(
        "# Comparison report (reference: {}, alpha = {})\n\n",
        report.reference, report.alpha
    ));
    out.push_str("| problem |");
    for a in &algorithms {
        out.push_str(&format!(" {a} mean | {a} std |"));
        if *a != report.reference {
            out.push_str(" vs ref |");
        }
    }
    out.push('\n');
    out.push_str("|---|");
    for a in &algorithms {
        out.push_str("---|---|");
        if *a != report.reference {
            out.push_str("---|");
        }
    }
    out.push('\n');

    for problem in &report.problems {
        let min_mean = problem
            .entries
            .iter()
            .map(|e| e.mean)
            .fold(f64::INFINITY, f64::min);
        out.push_str(&format!("| {} |", problem.problem));
        for entry in &problem.entries {
            let mean = if entry.mean == min_mean {
                format!("**{}**", fmt_f64(entry.mean))
            } else {
                fmt_f64(entry.mean)
            };
            out.push_str(&format!(" {mean} | {} |", fmt_f64(entry.std)));
            if let Some(r) = &entry.versus_reference {
                out.push_str(&format!(" {} |", r.label.symbol()));
            }
        }
        out.push('\n');
    }

    if !report.tallies.is_empty() {
        out.push_str("\n## Win/tie/loss of the reference\n\n");
        out.push_str("| opponent | + | = | - |\n|---|---|---|---|\n");
        for t in &report.tallies {
            out.push_str(&format!(
                "| {} | {} | {} | {} |\n",
                t.algorithm, t.reference_wins, t.ties, t.reference_losses
            ));
        }
    }
    out
}

/// Mean convergence curves of one problem, aligned on the union grid of all
/// checkpoint positions; each algorithm's best-so-far is carried forward
/// between its own checkpoints.
pub fn render_convergence_csv(runs: &[StoredRun], algorithm_order: &[String]) -> Result<String> {
    if runs.is_empty() {
        return Err(CliError::Usage("no traces to render".into()));
    }
    let problem = &runs[0].key.problem;
    if runs.iter().any(|r| &r.key.problem != problem) {
        return Err(CliError::Usage(
            "convergence curves need traces of a single problem".into(),
        ));
    }
    let mut grid: Vec<u64> = runs
        .iter()
        .flat_map(|r| r.trace.checkpoints.iter().map(|c| c.evaluations))
        .collect();
    grid.sort_unstable();
    grid.dedup();

    let mut out = String::from("evaluations");
    for a in algorithm_order {
        out.push_str(&format!(",{a}"));
    }
    out.push('\n');

    for &eval in &grid {
        out.push_str(&eval.to_string());
        for algorithm in algorithm_order {
            let mut sum = 0.0;
            let mut count = 0usize;
            for run in runs.iter().filter(|r| &r.key.algorithm == algorithm) {
                // Last checkpoint at or before this grid point.
                let best = run
                    .trace
                    .checkpoints
                    .iter()
                    .take_while(|c| c.evaluations <= eval)
                    .last()
                    .map(|c| c.best_fitness);
                if let Some(b) = best {
                    sum += b;
                    count += 1;
                }
            }
            if count == 0 {
                out.push(',');
            } else {
                out.push_str(&format!(",{}", fmt_f64(sum / count as f64)));
            }
        }
        out.push('\n');
    }
    Ok(out)
}

/// Writes one problem's convergence curves to `path`.
pub fn emit_convergence_csv(
    runs: &[StoredRun],
    algorithm_order: &[String],
    path: &Path,
) -> Result<()> {
    let text = render_convergence_csv(runs, algorithm_order)?;
    std::fs::write(path, text).map_err(|e| CliError::runtime_io("writing convergence csv", e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::persist::RunKey;
    use mbgo_core::{Checkpoint, Individual, RunTrace};

    fn run(problem: &str, algorithm: &str, trial: u32, finals: f64) -> StoredRun {
        StoredRun {
            key: RunKey {
                problem: problem.into(),
                algorithm: algorithm.into(),
                trial,
            },
            population_size: 10,
            penalty_coefficient: 1e9,
            trace: RunTrace {
                problem: problem.into(),
                algorithm: algorithm.into(),
                seed: trial as u64,
                max_evaluations: 100,
                trace_stride: 10,
                evaluations_used: 100,
                checkpoints: vec![
                    Checkpoint {
                        evaluations: 1,
                        best_fitness: finals * 10.0,
                    },
                    Checkpoint {
                        evaluations: 100,
                        best_fitness: finals,
                    },
                ],
                final_best: Individual::evaluated(vec![0.0, 0.0], finals),
            },
        }
    }

    fn two_algorithm_runs() -> Vec<StoredRun> {
        let mut runs = Vec::new();
        for trial in 0..6 {
            runs.push(run("tbtd", "mbgo", trial, 1.0 + trial as f64 * 0.01));
            runs.push(run("tbtd", "random", trial, 50.0 + trial as f64));
        }
        runs
    }

    #[test]
    fn report_has_single_row_per_algorithm() {
        let runs = two_algorithm_runs();
        let report = build_report(
            &runs,
            &["tbtd".into()],
            &["mbgo".into(), "random".into()],
            0.05,
        )
        .unwrap();
        assert_eq!(report.problems.len(), 1);
        assert_eq!(report.problems[0].entries.len(), 2);
        assert!(report.problems[0].entries[0].versus_reference.is_none());
        let vs = report.problems[0].entries[1].versus_reference.unwrap();
        assert_eq!(vs.label, Label::Plus);
        assert_eq!(report.tallies.len(), 1);
        assert_eq!(report.tallies[0].reference_wins, 1);
        assert_eq!(
            report.tallies[0].reference_wins
                + report.tallies[0].ties
                + report.tallies[0].reference_losses,
            report.problems.len()
        );
    }

    #[test]
    fn single_algorithm_report_has_no_labels() {
        let runs: Vec<StoredRun> = (0..3).map(|t| run("tbtd", "mbgo", t, 1.0)).collect();
        let report = build_report(&runs, &["tbtd".into()], &["mbgo".into()], 0.05).unwrap();
        assert_eq!(report.problems[0].entries.len(), 1);
        assert!(report.tallies.is_empty());
        let csv = render_report(&report, ReportFormat::Csv).unwrap();
        assert_eq!(csv.lines().count(), 2); // header + one data row
    }

    #[test]
    fn json_report_round_trips() {
        let runs = two_algorithm_runs();
        let report = build_report(
            &runs,
            &["tbtd".into()],
            &["mbgo".into(), "random".into()],
            0.05,
        )
        .unwrap();
        let text = render_report(&report, ReportFormat::Json).unwrap();
        let back: ComparisonReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn markdown_bolds_row_minimum() {
        let runs = two_algorithm_runs();
        let report = build_report(
            &runs,
            &["tbtd".into()],
            &["mbgo".into(), "random".into()],
            0.05,
        )
        .unwrap();
        let md = render_report(&report, ReportFormat::Markdown).unwrap();
        let row = md.lines().find(|l| l.starts_with("| tbtd")).unwrap();
        // The reference has the lower mean here.
        let mean = fmt_f64(report.problems[0].entries[0].mean);
        assert!(row.contains(&format!("**{mean}**")), "{row}");
        // Exactly one bolded cell in the row.
        assert_eq!(row.matches("**").count(), 2);
    }

    #[test]
    fn convergence_grid_aligns_and_averages() {
        // A single trace: the CSV mirrors its checkpoints.
        let single = vec![run("tbtd", "mbgo", 0, 2.0)];
        let csv = render_convergence_csv(&single, &["mbgo".into()]).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "evaluations,mbgo");
        assert_eq!(lines[1], format!("1,{}", fmt_f64(20.0)));
        assert_eq!(lines[2], format!("100,{}", fmt_f64(2.0)));

        // Two identical traces: the mean column equals either trace.
        let pair = vec![run("tbtd", "mbgo", 0, 2.0), run("tbtd", "mbgo", 1, 2.0)];
        let csv2 = render_convergence_csv(&pair, &["mbgo".into()]).unwrap();
        assert_eq!(csv2.lines().nth(2).unwrap(), format!("100,{}", fmt_f64(2.0)));
    }

    #[test]
    fn convergence_rejects_mixed_problems() {
        let mixed = vec![run("tbtd", "mbgo", 0, 2.0), run("cbd", "mbgo", 0, 2.0)];
        let err = render_convergence_csv(&mixed, &["mbgo".into()]).unwrap_err();
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn formats_use_17_significant_digits() {
        let x = 263.8958433764684;
        let s = fmt_f64(x);
        let back: f64 = s.parse().unwrap();
        assert_eq!(back, x);
    }
}
