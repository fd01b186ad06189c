//! Glue between a problem, the penalty policy, the evaluation budget, and
//! the trace recorder. Optimizers funnel every objective call through
//! [`Evaluator::evaluate`], which is what makes their budgets and traces
//! comparable.

use crate::budget::EvaluationBudget;
use crate::error::Result;
use crate::population::Individual;
use crate::problems::{PenaltyPolicy, ProblemSpec};
use crate::trace::{RunTrace, TraceRecorder};

/// Run-level knobs shared by every optimizer.
#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    /// Constraint penalty; default coefficient 1e9.
    pub penalty: PenaltyPolicy,
    /// Checkpoint spacing in evaluations; defaults to the population size so
    /// traces of equal-population algorithms align.
    pub trace_stride: Option<u64>,
}

/// Counts and records one run's objective evaluations.
pub struct Evaluator<'a> {
    problem: &'a ProblemSpec,
    policy: PenaltyPolicy,
    budget: EvaluationBudget,
    recorder: TraceRecorder,
}

impl<'a> Evaluator<'a> {
    pub fn new(
        problem: &'a ProblemSpec,
        policy: PenaltyPolicy,
        max_evaluations: u64,
        trace_stride: u64,
    ) -> Result<Self> {
        Ok(Evaluator {
            problem,
            policy,
            budget: EvaluationBudget::new(max_evaluations)?,
            recorder: TraceRecorder::new(max_evaluations, trace_stride),
        })
    }

    /// Penalized fitness of `position`; consumes one evaluation and feeds
    /// the trace.
    pub fn evaluate(&mut self, position: &[f64]) -> Result<f64> {
        let fitness = self.problem.fitness(position, &self.policy)?;
        self.budget.consume_one();
        self.recorder.record(self.budget.used(), fitness, position);
        Ok(fitness)
    }

    /// Evaluates and wraps the position into an [`Individual`].
    pub fn evaluate_individual(&mut self, position: alloc::vec::Vec<f64>) -> Result<Individual> {
        let fitness = self.evaluate(&position)?;
        Ok(Individual::evaluated(position, fitness))
    }

    pub fn exhausted(&self) -> bool {
        self.budget.exhausted()
    }

    pub fn used(&self) -> u64 {
        self.budget.used()
    }

    pub fn problem(&self) -> &ProblemSpec {
        self.problem
    }

    /// Seals the run into its trace.
    pub fn finish(self, algorithm: &str, seed: u64) -> Result<RunTrace> {
        self.recorder
            .finish(self.problem.name(), algorithm, seed, &self.budget)
    }
}
