//! DE/rand/1/bin with greedy (strict-improvement) selection.
//!
//! Draw order per target `i`: three distinct donor indices by rejection
//! (one bounded integer each, redrawn on collision), one bounded integer for
//! the forced crossover coordinate, then one uniform per dimension for the
//! crossover mask.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::evaluator::{Evaluator, RunOptions};
use crate::population::{clamp_to_bounds, uniform_init, Population};
use crate::problems::ProblemSpec;
use crate::rng::{RandomSource, RngStream};
use crate::trace::RunTrace;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DeConfig {
    pub population_size: usize,
    pub max_evaluations: u64,
    /// Differential weight F.
    pub weighting_factor: f64,
    /// Crossover rate Cr.
    pub crossover_rate: f64,
    pub seed: u64,
}

impl Default for DeConfig {
    fn default() -> Self {
        DeConfig {
            population_size: 100,
            max_evaluations: 20_000,
            weighting_factor: 0.8,
            crossover_rate: 0.9,
            seed: 0,
        }
    }
}

impl DeConfig {
    pub fn validate(&self) -> Result<()> {
        if self.population_size < 4 {
            return Err(Error::Config(format!(
                "DE needs at least 4 members for distinct donors, got {}",
                self.population_size
            )));
        }
        if self.max_evaluations < self.population_size as u64 {
            return Err(Error::Config(format!(
                "budget {} smaller than population {}",
                self.max_evaluations, self.population_size
            )));
        }
        if !(0.0..=1.0).contains(&self.crossover_rate) {
            return Err(Error::Config(format!(
                "crossover rate {} outside [0, 1]",
                self.crossover_rate
            )));
        }
        Ok(())
    }
}

/// Donor combination `x_r1 + F * (x_r2 - x_r3)`.
pub fn mutant_vector(population: &Population, r1: usize, r2: usize, r3: usize, f: f64) -> Vec<f64> {
    let a = &population.member(r1).position;
    let b = &population.member(r2).position;
    let c = &population.member(r3).position;
    a.iter()
        .zip(b.iter().zip(c))
        .map(|(ai, (bi, ci))| ai + f * (bi - ci))
        .collect()
}

fn distinct_donors<R: RandomSource>(i: usize, n: usize, rng: &mut R) -> (usize, usize, usize) {
    let mut draw_not_in = |taken: &[usize]| loop {
        let r = rng.integer_below(n as u64) as usize;
        if !taken.contains(&r) {
            return r;
        }
    };
    let r1 = draw_not_in(&[i]);
    let r2 = draw_not_in(&[i, r1]);
    let r3 = draw_not_in(&[i, r1, r2]);
    (r1, r2, r3)
}

/// Binomial crossover: coordinate `j` comes from the mutant when
/// `u_j < Cr` or `j == j_rand`, otherwise from the target. One uniform per
/// dimension, always drawn.
fn crossover<R: RandomSource>(
    target: &[f64],
    mutant: &[f64],
    cr: f64,
    j_rand: usize,
    rng: &mut R,
) -> Vec<f64> {
    target
        .iter()
        .zip(mutant)
        .enumerate()
        .map(|(j, (t, m))| {
            if rng.uniform01() < cr || j == j_rand {
                *m
            } else {
                *t
            }
        })
        .collect()
}

pub fn de_optimize(problem: &ProblemSpec, cfg: &DeConfig, opts: &RunOptions) -> Result<RunTrace> {
    cfg.validate()?;
    let n = cfg.population_size;
    let dim = problem.dimension();
    let stride = opts.trace_stride.unwrap_or(n as u64);
    let mut rng = RngStream::new(cfg.seed);
    let mut eval = Evaluator::new(problem, opts.penalty, cfg.max_evaluations, stride)?;

    let mut members = uniform_init(problem.bounds(), n, &mut rng)?;
    for m in &mut members {
        m.fitness = eval.evaluate(&m.position)?;
    }
    let mut pop = Population::new(members)?;
    let bounds = problem.bounds().clone();

    while !eval.exhausted() {
        for i in 0..n {
            let (r1, r2, r3) = distinct_donors(i, n, &mut rng);
            let mutant = mutant_vector(&pop, r1, r2, r3, cfg.weighting_factor);
            let j_rand = rng.integer_below(dim as u64) as usize;
            let mut trial = crossover(
                &pop.member(i).position,
                &mutant,
                cfg.crossover_rate,
                j_rand,
                &mut rng,
            );
            clamp_to_bounds(&mut trial, &bounds);
            let candidate = eval.evaluate_individual(trial)?;
            pop.challenge(i, candidate);
        }
    }
    eval.finish("de", cfg.seed)
}
