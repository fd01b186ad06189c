//! The objective-function catalog: unconstrained benchmarks, constrained
//! engineering design problems, and the additive penalty that folds
//! constraint violations into a single fitness value.

mod benchmarks;
mod catalog;
mod engineering;

pub use benchmarks::{BenchmarkFn, RotatedInstance};
pub use catalog::{
    benchmark_names, engineering_names, evaluate_benchmark, evaluate_engineering, problem_info,
    resolve, ProblemInfo,
};
pub use engineering::EngineeringId;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::population::Bounds;

/// Per-dimension rounding applied inside evaluation. The search itself stays
/// continuous; only the objective/constraint evaluation sees rounded values.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", content = "step", rename_all = "snake_case"))]
pub enum DiscreteRule {
    Continuous,
    Integer,
    MultipleOf(f64),
}

impl DiscreteRule {
    /// Rounds a coordinate according to the rule. Idempotent.
    pub fn apply(&self, x: f64) -> f64 {
        match self {
            DiscreteRule::Continuous => x,
            DiscreteRule::Integer => libm::round(x),
            DiscreteRule::MultipleOf(q) => libm::round(x / q) * q,
        }
    }
}

/// Additive constraint penalty. Violations are summed and scaled by a
/// coefficient chosen to be large against every catalog objective scale, so
/// infeasible candidates sort behind feasible ones while still ranking among
/// themselves by violation size.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PenaltyPolicy {
    pub penalty_coefficient: f64,
}

impl Default for PenaltyPolicy {
    fn default() -> Self {
        PenaltyPolicy {
            penalty_coefficient: 1e9,
        }
    }
}

/// Folds an objective value and non-negative violations into one fitness:
/// `objective + P * sum(violations)`. Feasible points pass through unchanged.
pub fn penalized_fitness(objective: f64, violations: &[f64], policy: &PenaltyPolicy) -> f64 {
    debug_assert!(violations.iter().all(|v| *v >= 0.0));
    let total: f64 = violations.iter().sum();
    objective + policy.penalty_coefficient * total
}

/// Violations above this cap are clipped, and non-finite constraint values
/// are mapped to it. Keeps every fitness finite even where a canonical
/// constraint expression has a pole inside the search box.
pub const VIOLATION_CAP: f64 = 1e6;

pub(crate) fn violation_of(g: f64) -> f64 {
    if !g.is_finite() || g > VIOLATION_CAP {
        VIOLATION_CAP
    } else if g > 0.0 {
        g
    } else {
        0.0
    }
}

/// Result of one raw problem evaluation, before penalty folding.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub objective: f64,
    /// `max(0, g_i)` per constraint, capped at [`VIOLATION_CAP`].
    pub violations: Vec<f64>,
}

impl Evaluation {
    pub fn is_feasible(&self) -> bool {
        self.violations.iter().all(|v| *v == 0.0)
    }
}

#[derive(Debug, Clone)]
enum ObjectiveKind {
    Benchmark(BenchmarkFn),
    Rotated(RotatedInstance),
    Engineering(EngineeringId),
    /// Plain function pointer, used for custom and instrumentation problems.
    Custom(fn(&[f64]) -> f64),
}

/// A fully specified optimization problem: name, box, discrete rules, the
/// objective, and (for engineering problems) inequality constraints with
/// feasibility `g_i <= 0`.
#[derive(Debug, Clone)]
pub struct ProblemSpec {
    name: String,
    bounds: Bounds,
    discrete: Vec<DiscreteRule>,
    kind: ObjectiveKind,
}

impl ProblemSpec {
    pub(crate) fn from_benchmark(name: String, bounds: Bounds, f: BenchmarkFn) -> Self {
        let dim = bounds.dimension();
        ProblemSpec {
            name,
            bounds,
            discrete: alloc::vec![DiscreteRule::Continuous; dim],
            kind: ObjectiveKind::Benchmark(f),
        }
    }

    pub(crate) fn from_rotated(name: String, bounds: Bounds, inst: RotatedInstance) -> Self {
        let dim = bounds.dimension();
        ProblemSpec {
            name,
            bounds,
            discrete: alloc::vec![DiscreteRule::Continuous; dim],
            kind: ObjectiveKind::Rotated(inst),
        }
    }

    pub(crate) fn from_engineering(id: EngineeringId) -> Self {
        ProblemSpec {
            name: String::from(id.name()),
            bounds: id.bounds(),
            discrete: id.discrete_rules(),
            kind: ObjectiveKind::Engineering(id),
        }
    }

    /// A custom problem from a plain objective function; unconstrained and
    /// continuous. Useful for tests and instrumentation.
    pub fn custom(name: &str, bounds: Bounds, objective: fn(&[f64]) -> f64) -> Self {
        let dim = bounds.dimension();
        ProblemSpec {
            name: String::from(name),
            bounds,
            discrete: alloc::vec![DiscreteRule::Continuous; dim],
            kind: ObjectiveKind::Custom(objective),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dimension(&self) -> usize {
        self.bounds.dimension()
    }

    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    pub fn discrete_rules(&self) -> &[DiscreteRule] {
        &self.discrete
    }

    pub fn constraint_count(&self) -> usize {
        match &self.kind {
            ObjectiveKind::Engineering(id) => id.constraint_count(),
            _ => 0,
        }
    }

    pub fn is_engineering(&self) -> bool {
        matches!(self.kind, ObjectiveKind::Engineering(_))
    }

    /// Default evaluation budget: `1000 * D` for benchmark functions and a
    /// flat `20_000` for the engineering problems.
    pub fn default_budget(&self) -> u64 {
        if self.is_engineering() {
            20_000
        } else {
            1000 * self.dimension() as u64
        }
    }

    fn check_dimension(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.dimension() {
            return Err(Error::Config(format!(
                "problem {} expects dimension {}, got {}",
                self.name,
                self.dimension(),
                x.len()
            )));
        }
        Ok(())
    }

    /// Applies the discrete rules to a copy of `x`.
    pub fn rounded(&self, x: &[f64]) -> Vec<f64> {
        x.iter()
            .zip(&self.discrete)
            .map(|(xi, rule)| rule.apply(*xi))
            .collect()
    }

    /// Raw evaluation: rounds, then computes the objective and capped
    /// constraint violations.
    pub fn evaluate(&self, x: &[f64]) -> Result<Evaluation> {
        self.check_dimension(x)?;
        let z = self.rounded(x);
        Ok(match &self.kind {
            ObjectiveKind::Benchmark(f) => Evaluation {
                objective: f.value(&z),
                violations: Vec::new(),
            },
            ObjectiveKind::Rotated(inst) => Evaluation {
                objective: inst.value(&z),
                violations: Vec::new(),
            },
            ObjectiveKind::Engineering(id) => {
                let (objective, constraints) = id.evaluate(&z);
                Evaluation {
                    objective,
                    violations: constraints.iter().map(|g| violation_of(*g)).collect(),
                }
            }
            ObjectiveKind::Custom(f) => Evaluation {
                objective: f(&z),
                violations: Vec::new(),
            },
        })
    }

    /// Penalized fitness at `x` under `policy`.
    pub fn fitness(&self, x: &[f64], policy: &PenaltyPolicy) -> Result<f64> {
        let eval = self.evaluate(x)?;
        Ok(penalized_fitness(eval.objective, &eval.violations, policy))
    }
}
