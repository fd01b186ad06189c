//! Whale optimization: encircling, spiral, and random-search branches with
//! the coefficient `a` decaying linearly from 2 to 0 over the budget.
//!
//! The update follows the original reference implementation: per individual
//! per generation the draws are `r1`, `r2` (giving `A = 2*a*r1 - a` and
//! `C = 2*r2`), the spiral parameter `l = (a2 - 1)*u + 1` with `a2` decaying
//! from -1 to -2, and the branch coin `p`; inside the `|A| >= 1` branch a
//! random leader index is drawn per dimension. Positions are updated in
//! place and evaluated after the whole population has moved.

use alloc::format;

use crate::error::{Error, Result};
use crate::evaluator::{Evaluator, RunOptions};
use crate::population::{clamp_to_bounds, uniform_init, Individual};
use crate::problems::ProblemSpec;
use crate::rng::{RandomSource, RngStream};
use crate::trace::RunTrace;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct WoaConfig {
    pub population_size: usize,
    pub max_evaluations: u64,
    /// Logarithmic spiral shape constant.
    pub spiral_constant: f64,
    pub seed: u64,
}

impl Default for WoaConfig {
    fn default() -> Self {
        WoaConfig {
            population_size: 100,
            max_evaluations: 20_000,
            spiral_constant: 1.0,
            seed: 0,
        }
    }
}

impl WoaConfig {
    pub fn validate(&self) -> Result<()> {
        if self.population_size < 2 {
            return Err(Error::Config(format!(
                "population size {} < 2",
                self.population_size
            )));
        }
        if self.max_evaluations < self.population_size as u64 {
            return Err(Error::Config(format!(
                "budget {} smaller than population {}",
                self.max_evaluations, self.population_size
            )));
        }
        Ok(())
    }
}

/// Encircling coefficient schedule: 2 at budget start, 0 at budget end.
pub fn a_schedule(used: u64, maximum: u64) -> f64 {
    2.0 * (1.0 - (used as f64 / maximum as f64).clamp(0.0, 1.0))
}

/// Spiral-range schedule: -1 at budget start, -2 at budget end.
fn a2_schedule(used: u64, maximum: u64) -> f64 {
    -1.0 - (used as f64 / maximum as f64).clamp(0.0, 1.0)
}

/// Encircling move toward `target` in one coordinate:
/// `target - A * |C*target - x|`.
pub fn encircle_step(target: f64, x: f64, a_coef: f64, c_coef: f64) -> f64 {
    target - a_coef * libm::fabs(c_coef * target - x)
}

/// Spiral move around `leader` in one coordinate:
/// `|leader - x| * e^(b*l) * cos(2*pi*l) + leader`.
pub fn spiral_step(leader: f64, x: f64, b: f64, l: f64) -> f64 {
    libm::fabs(leader - x) * libm::exp(b * l) * libm::cos(2.0 * core::f64::consts::PI * l) + leader
}

pub fn woa_optimize(problem: &ProblemSpec, cfg: &WoaConfig, opts: &RunOptions) -> Result<RunTrace> {
    cfg.validate()?;
    let n = cfg.population_size;
    let dim = problem.dimension();
    let stride = opts.trace_stride.unwrap_or(n as u64);
    let mut rng = RngStream::new(cfg.seed);
    let mut eval = Evaluator::new(problem, opts.penalty, cfg.max_evaluations, stride)?;
    let bounds = problem.bounds().clone();

    let mut whales = uniform_init(&bounds, n, &mut rng)?;
    for w in &mut whales {
        w.fitness = eval.evaluate(&w.position)?;
    }
    let mut leader: Individual = whales
        .iter()
        .min_by(|a, b| a.fitness.partial_cmp(&b.fitness).unwrap())
        .cloned()
        .expect("population is non-empty");

    while !eval.exhausted() {
        let a = a_schedule(eval.used(), cfg.max_evaluations);
        let a2 = a2_schedule(eval.used(), cfg.max_evaluations);
        for i in 0..n {
            let r1 = rng.uniform01();
            let r2 = rng.uniform01();
            let a_coef = 2.0 * a * r1 - a;
            let c_coef = 2.0 * r2;
            let l = (a2 - 1.0) * rng.uniform01() + 1.0;
            let p = rng.uniform01();
            for k in 0..dim {
                let x = whales[i].position[k];
                whales[i].position[k] = if p < 0.5 {
                    if libm::fabs(a_coef) >= 1.0 {
                        // Exploration: encircle a random member (possibly
                        // already moved this generation).
                        let rand_idx = rng.integer_below(n as u64) as usize;
                        encircle_step(whales[rand_idx].position[k], x, a_coef, c_coef)
                    } else {
                        encircle_step(leader.position[k], x, a_coef, c_coef)
                    }
                } else {
                    spiral_step(leader.position[k], x, cfg.spiral_constant, l)
                };
            }
            clamp_to_bounds(&mut whales[i].position, &bounds);
        }
        for w in &mut whales {
            w.fitness = eval.evaluate(&w.position)?;
            if w.fitness < leader.fitness {
                leader = w.clone();
            }
        }
    }
    eval.finish("woa", cfg.seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems;

    #[test]
    fn a_schedule_is_linear() {
        assert_eq!(a_schedule(0, 1000), 2.0);
        assert_eq!(a_schedule(500, 1000), 1.0);
        assert_eq!(a_schedule(1000, 1000), 0.0);
        assert_eq!(a_schedule(2000, 1000), 0.0);
        assert_eq!(a2_schedule(0, 1000), -1.0);
        assert_eq!(a2_schedule(1000, 1000), -2.0);
    }

    #[test]
    fn zero_a_collapses_encircling_onto_the_target() {
        // A = 0 removes the step entirely regardless of C and distance.
        assert_eq!(encircle_step(3.5, -20.0, 0.0, 1.7), 3.5);
    }

    #[test]
    fn spiral_at_zero_distance_stays_on_leader() {
        // e^(b*l) * cos(2*pi*l) = 1 at l = 0, and distance 0 kills the term
        // for every l.
        assert_eq!(spiral_step(2.0, 2.0, 1.0, 0.0), 2.0);
        assert_eq!(spiral_step(2.0, 2.0, 1.0, -0.7), 2.0);
        // l = 0 gives a full-distance step beyond the leader.
        assert_eq!(spiral_step(2.0, 1.0, 1.0, 0.0), 3.0);
    }

    #[test]
    fn woa_descends_on_sphere() {
        let problem = problems::resolve("sphere", Some(5)).unwrap();
        let cfg = WoaConfig {
            population_size: 20,
            max_evaluations: 4000,
            seed: 13,
            ..WoaConfig::default()
        };
        let trace = woa_optimize(&problem, &cfg, &RunOptions::default()).unwrap();
        assert!(trace.final_fitness() < 1.0, "got {}", trace.final_fitness());
        for pair in trace.checkpoints.windows(2) {
            assert!(pair[1].best_fitness <= pair[0].best_fitness);
        }
        assert!(problem.bounds().contains(&trace.final_best.position));
        assert_eq!(trace.evaluations_used, 4000);
    }

    #[test]
    fn woa_is_deterministic() {
        let problem = problems::resolve("griewank", Some(4)).unwrap();
        let cfg = WoaConfig {
            population_size: 10,
            max_evaluations: 600,
            seed: 5,
            ..WoaConfig::default()
        };
        let a = woa_optimize(&problem, &cfg, &RunOptions::default()).unwrap();
        let b = woa_optimize(&problem, &cfg, &RunOptions::default()).unwrap();
        assert_eq!(a, b);
    }
}
