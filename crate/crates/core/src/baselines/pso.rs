//! Global-best particle swarm with linearly decaying inertia and a velocity
//! clamp at a fraction of each dimension's range.
//!
//! Draw order per particle per generation: two uniforms per dimension
//! (cognitive `r1` then social `r2`).

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::evaluator::{Evaluator, RunOptions};
use crate::population::{clamp_to_bounds, uniform_init, Individual};
use crate::problems::ProblemSpec;
use crate::rng::{RandomSource, RngStream};
use crate::trace::RunTrace;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PsoConfig {
    pub population_size: usize,
    pub max_evaluations: u64,
    /// Inertia at the start of the budget.
    pub inertia_start: f64,
    /// Inertia at the end of the budget.
    pub inertia_end: f64,
    /// Cognitive acceleration c1.
    pub cognitive: f64,
    /// Social acceleration c2.
    pub social: f64,
    /// Velocity clamp as a fraction of each dimension's range.
    pub velocity_clamp_fraction: f64,
    pub seed: u64,
}

impl Default for PsoConfig {
    fn default() -> Self {
        PsoConfig {
            population_size: 100,
            max_evaluations: 20_000,
            inertia_start: 0.9,
            inertia_end: 0.4,
            cognitive: 2.05,
            social: 2.05,
            velocity_clamp_fraction: 0.2,
            seed: 0,
        }
    }
}

impl PsoConfig {
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
        if self.velocity_clamp_fraction.is_nan() || self.velocity_clamp_fraction <= 0.0 {
            return Err(Error::Config("velocity clamp must be positive".into()));
        }
        Ok(())
    }
}

/// Linear inertia schedule over the evaluation budget: `start` at zero used
/// evaluations, `end` at the full budget.
pub fn inertia_weight(used: u64, maximum: u64, start: f64, end: f64) -> f64 {
    let t = (used as f64 / maximum as f64).clamp(0.0, 1.0);
    start + (end - start) * t
}

/// One-coordinate velocity update:
/// `w*v + c1*r1*(pbest - x) + c2*r2*(gbest - x)`.
#[allow(clippy::too_many_arguments)]
pub fn velocity_update(
    v: f64,
    x: f64,
    pbest: f64,
    gbest: f64,
    w: f64,
    c1: f64,
    c2: f64,
    r1: f64,
    r2: f64,
) -> f64 {
    w * v + c1 * r1 * (pbest - x) + c2 * r2 * (gbest - x)
}

pub fn pso_optimize(problem: &ProblemSpec, cfg: &PsoConfig, opts: &RunOptions) -> Result<RunTrace> {
    cfg.validate()?;
    let n = cfg.population_size;
    let dim = problem.dimension();
    let stride = opts.trace_stride.unwrap_or(n as u64);
    let mut rng = RngStream::new(cfg.seed);
    let mut eval = Evaluator::new(problem, opts.penalty, cfg.max_evaluations, stride)?;
    let bounds = problem.bounds().clone();

    let vmax: Vec<f64> = (0..dim)
        .map(|k| cfg.velocity_clamp_fraction * bounds.range(k))
        .collect();

    let mut particles = uniform_init(&bounds, n, &mut rng)?;
    for p in &mut particles {
        p.fitness = eval.evaluate(&p.position)?;
    }
    // Velocities start at rest; the first generation moves on the social
    // pull alone.
    let mut velocities = alloc::vec![alloc::vec![0.0; dim]; n];
    let mut pbest: Vec<Individual> = particles.clone();
    let mut gbest = pbest
        .iter()
        .min_by(|a, b| a.fitness.partial_cmp(&b.fitness).unwrap())
        .cloned()
        .expect("population is non-empty");

    while !eval.exhausted() {
        let w = inertia_weight(eval.used(), cfg.max_evaluations, cfg.inertia_start, cfg.inertia_end);
        for i in 0..n {
            for k in 0..dim {
                let r1 = rng.uniform01();
                let r2 = rng.uniform01();
                let v = velocity_update(
                    velocities[i][k],
                    particles[i].position[k],
                    pbest[i].position[k],
                    gbest.position[k],
                    w,
                    cfg.cognitive,
                    cfg.social,
                    r1,
                    r2,
                );
                velocities[i][k] = v.clamp(-vmax[k], vmax[k]);
                particles[i].position[k] += velocities[i][k];
            }
            clamp_to_bounds(&mut particles[i].position, &bounds);
            particles[i].fitness = eval.evaluate(&particles[i].position)?;
            if particles[i].fitness < pbest[i].fitness {
                pbest[i] = particles[i].clone();
                if particles[i].fitness < gbest.fitness {
                    gbest = particles[i].clone();
                }
            }
        }
    }
    eval.finish("pso", cfg.seed)
}
