//! Trace persistence: one JSON-lines file per run.
//!
//! Line 1 is a header record, followed by one point record per checkpoint,
//! closed by a final record carrying the best individual. The format is
//! append-only and diff-friendly; floats use serde_json's shortest exact
//! representation, which round-trips bit-for-bit.

use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use mbgo_core::{Checkpoint, Individual, RunTrace};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// Identification of one run within an experiment.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RunKey {
    /// Display label, e.g. `sphere_10d` or `tbtd`.
    pub problem: String,
    pub algorithm: String,
    pub trial: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
enum TraceLine {
    Header {
        problem: String,
        algorithm: String,
        trial: u32,
        seed: u64,
        dimension: usize,
        population_size: usize,
        max_evaluations: u64,
        trace_stride: u64,
        penalty_coefficient: f64,
    },
    Point {
        evaluations: u64,
        best_fitness: f64,
    },
    Final {
        evaluations_used: u64,
        fitness: f64,
        position: Vec<f64>,
    },
}

/// A trace together with the run metadata needed to regenerate reports.
#[derive(Debug, Clone, PartialEq)]
pub struct StoredRun {
    pub key: RunKey,
    pub population_size: usize,
    pub penalty_coefficient: f64,
    pub trace: RunTrace,
}

/// File name for a run: `<problem>__<algorithm>__t<trial>.jsonl`.
pub fn trace_file_name(key: &RunKey) -> String {
    format!(
        "{}__{}__t{:04}.jsonl",
        sanitize(&key.problem),
        sanitize(&key.algorithm),
        key.trial
    )
}

fn sanitize(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' })
        .collect()
}

pub fn write_trace(dir: &Path, run: &StoredRun) -> Result<PathBuf> {
    std::fs::create_dir_all(dir)
        .map_err(|e| CliError::runtime_io("creating trace directory", e))?;
    let path = dir.join(trace_file_name(&run.key));
    let mut lines = Vec::with_capacity(run.trace.checkpoints.len() + 2);
    lines.push(TraceLine::Header {
        problem: run.key.problem.clone(),
        algorithm: run.key.algorithm.clone(),
        trial: run.key.trial,
        seed: run.trace.seed,
        dimension: run.trace.final_best.position.len(),
        population_size: run.population_size,
        max_evaluations: run.trace.max_evaluations,
        trace_stride: run.trace.trace_stride,
        penalty_coefficient: run.penalty_coefficient,
    });
    for c in &run.trace.checkpoints {
        lines.push(TraceLine::Point {
            evaluations: c.evaluations,
            best_fitness: c.best_fitness,
        });
    }
    lines.push(TraceLine::Final {
        evaluations_used: run.trace.evaluations_used,
        fitness: run.trace.final_best.fitness,
        position: run.trace.final_best.position.clone(),
    });

    let mut out = Vec::new();
    for line in &lines {
        serde_json::to_writer(&mut out, line)
            .map_err(|e| CliError::Runtime(format!("serializing trace: {e}")))?;
        out.push(b'\n');
    }
    let mut file = std::fs::File::create(&path)
        .map_err(|e| CliError::runtime_io("creating trace file", e))?;
    file.write_all(&out)
        .map_err(|e| CliError::runtime_io("writing trace file", e))?;
    Ok(path)
}

pub fn read_trace(path: &Path) -> Result<StoredRun> {
    let file = std::fs::File::open(path)
        .map_err(|e| CliError::runtime_io("opening trace file", e))?;
    let reader = std::io::BufReader::new(file);
    let mut header: Option<TraceLine> = None;
    let mut checkpoints = Vec::new();
    let mut final_line: Option<TraceLine> = None;
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| CliError::runtime_io("reading trace file", e))?;
        if line.trim().is_empty() {
            continue;
        }
        let parsed: TraceLine = serde_json::from_str(&line).map_err(|e| {
            CliError::Runtime(format!("{}:{}: bad trace line: {e}", path.display(), i + 1))
        })?;
        match parsed {
            TraceLine::Header { .. } => header = Some(parsed),
            TraceLine::Point {
                evaluations,
                best_fitness,
            } => checkpoints.push(Checkpoint {
                evaluations,
                best_fitness,
            }),
            TraceLine::Final { .. } => final_line = Some(parsed),
        }
    }
    let Some(TraceLine::Header {
        problem,
        algorithm,
        trial,
        seed,
        population_size,
        max_evaluations,
        trace_stride,
        penalty_coefficient,
        ..
    }) = header
    else {
        return Err(CliError::Runtime(format!(
            "{}: missing header line",
            path.display()
        )));
    };
    let Some(TraceLine::Final {
        evaluations_used,
        fitness,
        position,
    }) = final_line
    else {
        return Err(CliError::Runtime(format!(
            "{}: missing final line",
            path.display()
        )));
    };
    Ok(StoredRun {
        key: RunKey {
            problem,
            algorithm,
            trial,
        },
        population_size,
        penalty_coefficient,
        trace: RunTrace {
            problem: String::new(),
            algorithm: String::new(),
            seed,
            max_evaluations,
            trace_stride,
            evaluations_used,
            checkpoints,
            final_best: Individual::evaluated(position, fitness),
        },
    })
}

/// Reads every `.jsonl` file in `dir`, sorted by file name.
pub fn read_all_traces(dir: &Path) -> Result<Vec<StoredRun>> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| CliError::runtime_io("listing trace directory", e))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "jsonl"))
        .collect();
    paths.sort();
    paths.iter().map(|p| read_trace(p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_run() -> StoredRun {
        StoredRun {
            key: RunKey {
                problem: "sphere_10d".into(),
                algorithm: "mbgo".into(),
                trial: 3,
            },
            population_size: 100,
            penalty_coefficient: 1e9,
            trace: RunTrace {
                problem: "sphere_10d".into(),
                algorithm: "mbgo".into(),
                seed: 99,
                max_evaluations: 1000,
                trace_stride: 100,
                evaluations_used: 1000,
                checkpoints: vec![
                    Checkpoint {
                        evaluations: 1,
                        best_fitness: 10.0,
                    },
                    Checkpoint {
                        evaluations: 100,
                        best_fitness: 0.125,
                    },
                    Checkpoint {
                        evaluations: 1000,
                        best_fitness: 0.0078125,
                    },
                ],
                final_best: Individual::evaluated(vec![0.1, -0.2], 0.0078125),
            },
        }
    }

    #[test]
    fn trace_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let run = sample_run();
        let path = write_trace(dir.path(), &run).unwrap();
        assert!(path.file_name().unwrap().to_str().unwrap().contains("t0003"));
        let loaded = read_trace(&path).unwrap();
        assert_eq!(loaded.key, run.key);
        assert_eq!(loaded.trace.seed, 99);
        assert_eq!(loaded.trace.checkpoints, run.trace.checkpoints);
        assert_eq!(loaded.trace.final_best, run.trace.final_best);
        assert_eq!(loaded.trace.evaluations_used, 1000);
        assert_eq!(loaded.population_size, 100);
    }

    #[test]
    fn writing_twice_is_byte_identical() {
        let dir = tempfile::tempdir().unwrap();
        let run = sample_run();
        let path = write_trace(dir.path(), &run).unwrap();
        let first = std::fs::read(&path).unwrap();
        write_trace(dir.path(), &run).unwrap();
        let second = std::fs::read(&path).unwrap();
        assert_eq!(first, second);
    }

    #[test]
    fn read_all_sorts_by_name() {
        let dir = tempfile::tempdir().unwrap();
        let mut a = sample_run();
        a.key.trial = 2;
        let mut b = sample_run();
        b.key.trial = 0;
        write_trace(dir.path(), &a).unwrap();
        write_trace(dir.path(), &b).unwrap();
        let all = read_all_traces(dir.path()).unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(all[0].key.trial, 0);
        assert_eq!(all[1].key.trial, 2);
    }

    #[test]
    fn missing_header_is_a_runtime_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("broken.jsonl");
        std::fs::write(&path, "{\"type\":\"point\",\"evaluations\":1,\"best_fitness\":2.0}\n")
            .unwrap();
        let err = read_trace(&path).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }
}
