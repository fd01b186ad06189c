//! Pure random search: uniform samples from the box, best kept. The sanity
//! floor every population method must clear.

use alloc::format;

use crate::error::{Error, Result};
use crate::evaluator::{Evaluator, RunOptions};
use crate::problems::ProblemSpec;
use crate::rng::RngStream;
use crate::trace::RunTrace;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RandomSearchConfig {
    /// Only sets the default trace stride, for checkpoint alignment with the
    /// population methods.
    pub population_size: usize,
    pub max_evaluations: u64,
    pub seed: u64,
}

impl Default for RandomSearchConfig {
    fn default() -> Self {
        RandomSearchConfig {
            population_size: 100,
            max_evaluations: 20_000,
            seed: 0,
        }
    }
}

pub fn random_search(
    problem: &ProblemSpec,
    cfg: &RandomSearchConfig,
    opts: &RunOptions,
) -> Result<RunTrace> {
    if cfg.max_evaluations == 0 {
        return Err(Error::Config(format!(
            "budget must be positive, got {}",
            cfg.max_evaluations
        )));
    }
    let stride = opts.trace_stride.unwrap_or(cfg.population_size.max(1) as u64);
    let mut rng = RngStream::new(cfg.seed);
    let mut eval = Evaluator::new(problem, opts.penalty, cfg.max_evaluations, stride)?;
    while !eval.exhausted() {
        let candidate = problem.bounds().sample(&mut rng);
        eval.evaluate(&candidate)?;
    }
    eval.finish("random", cfg.seed)
}
