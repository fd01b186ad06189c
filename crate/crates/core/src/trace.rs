//! Run traces: the time-ordered best-so-far record every optimizer emits.
//!
//! A [`TraceRecorder`] is fed once per objective evaluation. It tracks the
//! best fitness (and position) seen so far and stores checkpoints
//!
//! * after the first evaluation,
//! * at every `stride` multiple of the evaluation counter,
//! * at the budget maximum,
//!
//! all truncated at the maximum: evaluations a finishing phase performs past
//! the budget are counted but never recorded, so persisted traces of
//! different algorithms line up evaluation-for-evaluation.

use alloc::string::String;
use alloc::vec::Vec;

use crate::budget::EvaluationBudget;
use crate::error::Result;
use crate::population::Individual;

/// One `(evaluations_used, best_fitness_so_far)` sample.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Checkpoint {
    pub evaluations: u64,
    pub best_fitness: f64,
}

/// Complete record of one optimization run.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RunTrace {
    pub problem: String,
    pub algorithm: String,
    pub seed: u64,
    pub max_evaluations: u64,
    pub trace_stride: u64,
    /// Evaluations counted toward the record, capped at `max_evaluations`.
    pub evaluations_used: u64,
    pub checkpoints: Vec<Checkpoint>,
    /// Best individual as of the truncation point.
    pub final_best: Individual,
}

impl RunTrace {
    /// Final best fitness of the run.
    pub fn final_fitness(&self) -> f64 {
        self.final_best.fitness
    }
}

/// Accumulates checkpoints while an optimizer runs. See the module docs for
/// the recording rule.
#[derive(Debug, Clone)]
pub struct TraceRecorder {
    stride: u64,
    maximum: u64,
    checkpoints: Vec<Checkpoint>,
    best_fitness: f64,
    best_position: Vec<f64>,
}

impl TraceRecorder {
    pub fn new(maximum: u64, stride: u64) -> Self {
        TraceRecorder {
            stride: stride.max(1),
            maximum,
            checkpoints: Vec::new(),
            best_fitness: f64::INFINITY,
            best_position: Vec::new(),
        }
    }

    /// Registers the evaluation numbered `used` (1-based) with its fitness
    /// and position. Calls with `used` beyond the budget maximum are ignored.
    pub fn record(&mut self, used: u64, fitness: f64, position: &[f64]) {
        if used > self.maximum {
            return;
        }
        if fitness < self.best_fitness {
            self.best_fitness = fitness;
            self.best_position.clear();
            self.best_position.extend_from_slice(position);
        }
        if used == 1 || used.is_multiple_of(self.stride) || used == self.maximum {
            if self.checkpoints.last().map(|c| c.evaluations) == Some(used) {
                return;
            }
            self.checkpoints.push(Checkpoint {
                evaluations: used,
                best_fitness: self.best_fitness,
            });
        }
    }

    pub fn best_fitness(&self) -> f64 {
        self.best_fitness
    }

    /// Seals the recording into a [`RunTrace`].
    pub fn finish(
        self,
        problem: &str,
        algorithm: &str,
        seed: u64,
        budget: &EvaluationBudget,
    ) -> Result<RunTrace> {
        Ok(RunTrace {
            problem: String::from(problem),
            algorithm: String::from(algorithm),
            seed,
            max_evaluations: self.maximum,
            trace_stride: self.stride,
            evaluations_used: budget.used().min(self.maximum),
            checkpoints: self.checkpoints,
            final_best: Individual::evaluated(self.best_position, self.best_fitness),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record_series(rec: &mut TraceRecorder, fits: &[f64]) {
        for (i, &f) in fits.iter().enumerate() {
            rec.record(i as u64 + 1, f, &[f]);
        }
    }

    #[test]
    fn records_first_stride_and_final() {
        let mut rec = TraceRecorder::new(10, 4);
        record_series(&mut rec, &[9.0, 8.0, 9.5, 7.0, 7.0, 6.0, 9.0, 5.0, 5.0, 4.0]);
        let evals: Vec<u64> = rec.checkpoints.iter().map(|c| c.evaluations).collect();
        assert_eq!(evals, alloc::vec![1, 4, 8, 10]);
        let best: Vec<f64> = rec.checkpoints.iter().map(|c| c.best_fitness).collect();
        assert_eq!(best, alloc::vec![9.0, 7.0, 5.0, 4.0]);
    }

    #[test]
    fn truncates_beyond_maximum() {
        let mut rec = TraceRecorder::new(6, 2);
        record_series(&mut rec, &[5.0, 4.0, 3.0, 2.5, 2.0, 1.5, 0.5, 0.1]);
        assert_eq!(rec.checkpoints.last().unwrap().evaluations, 6);
        // Improvements found past the budget do not leak into the record.
        assert_eq!(rec.best_fitness(), 1.5);
        assert_eq!(rec.best_position, alloc::vec![1.5]);
    }

    #[test]
    fn stride_wider_than_budget_keeps_first_and_final() {
        let mut rec = TraceRecorder::new(5, 100);
        record_series(&mut rec, &[3.0, 2.0, 4.0, 1.0, 1.0]);
        let evals: Vec<u64> = rec.checkpoints.iter().map(|c| c.evaluations).collect();
        assert_eq!(evals, alloc::vec![1, 5]);
    }

    #[test]
    fn best_so_far_is_monotone() {
        let mut rec = TraceRecorder::new(50, 1);
        let mut rng = crate::rng::RngStream::new(11);
        use crate::rng::RandomSource;
        for i in 0..50 {
            rec.record(i + 1, rng.uniform(0.0, 100.0), &[0.0]);
        }
        for pair in rec.checkpoints.windows(2) {
            assert!(pair[1].best_fitness <= pair[0].best_fitness);
            assert!(pair[1].evaluations > pair[0].evaluations);
        }
    }
}
