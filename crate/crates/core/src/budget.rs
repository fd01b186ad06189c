//! Evaluation budgeting: the fairness currency for algorithm comparison.

use alloc::format;

use crate::error::{Error, Result};

/// Counts objective evaluations against a maximum.
///
/// Every objective call increments the counter by exactly one. Optimizers
/// check the budget at phase or generation boundaries, so a run may finish
/// an in-flight phase slightly past `maximum`; the allowed overshoot is
/// bounded by the per-phase evaluation count (at most the population size),
/// and recorded traces are truncated at `maximum` regardless.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvaluationBudget {
    used: u64,
    maximum: u64,
}

impl EvaluationBudget {
    pub fn new(maximum: u64) -> Result<Self> {
        if maximum == 0 {
            return Err(Error::Config(format!("budget must be positive, got {maximum}")));
        }
        Ok(EvaluationBudget { used: 0, maximum })
    }

    /// Registers one objective evaluation.
    pub fn consume_one(&mut self) {
        self.used += 1;
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn maximum(&self) -> u64 {
        self.maximum
    }

    /// True once `used >= maximum`; the next phase must not start.
    pub fn exhausted(&self) -> bool {
        self.used >= self.maximum
    }
}
