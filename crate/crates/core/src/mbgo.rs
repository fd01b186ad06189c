//! The two-phase battle-game optimizer.
//!
//! Each generation runs a movement phase followed by a battle phase over the
//! whole population, with elite selection after every candidate. The
//! movement phase splits the space into a safe zone around the current best
//! individual — a hypersphere whose radius is the best-to-worst distance
//! scaled by a fresh random factor per individual — and updates members with
//! a sine-modulated step off the best inside the zone, or a per-dimension
//! mix of Gaussian perturbation and pull toward the best outside it. The
//! battle phase pits each member against a uniformly random opponent and
//! steps along the fitness-oriented difference vector, per dimension against
//! a stronger opponent and as a single cosine-modulated vector step
//! otherwise.
//!
//! Random draw order (fixed for reproducibility):
//!
//! * initialization — one uniform per coordinate, member by member;
//! * movement, per individual `i` — one uniform for the radius factor, then
//!   either one uniform angle (inside the zone) or per dimension one uniform
//!   branch coin followed by one normal or one uniform pull (outside);
//! * battle, per individual `i` — one bounded integer for the opponent,
//!   then per dimension one uniform coin followed by one uniform step
//!   multiplier (stronger opponent), or a single uniform angle (otherwise).

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::evaluator::{Evaluator, RunOptions};
use crate::population::{clamp_to_bounds, uniform_init, Individual, Population};
use crate::problems::ProblemSpec;
use crate::rng::{RandomSource, RngStream};
use crate::trace::RunTrace;

/// Configuration of one optimizer run.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MbgoConfig {
    pub population_size: usize,
    pub max_evaluations: u64,
    /// Lower edge of the safety-radius factor.
    pub alpha_low: f64,
    /// Upper edge of the safety-radius factor.
    pub alpha_high: f64,
    /// Keeps the safety radius positive when best and worst coincide.
    pub eps: f64,
    pub seed: u64,
}

impl Default for MbgoConfig {
    fn default() -> Self {
        MbgoConfig {
            population_size: 100,
            max_evaluations: 20_000,
            alpha_low: 0.8,
            alpha_high: 1.2,
            eps: 1e-12,
            seed: 0,
        }
    }
}

impl MbgoConfig {
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
        if !(self.alpha_low > 0.0 && self.alpha_low <= self.alpha_high) {
            return Err(Error::Config(format!(
                "invalid alpha range [{}, {}]",
                self.alpha_low, self.alpha_high
            )));
        }
        if self.eps.is_nan() || self.eps <= 0.0 {
            return Err(Error::Config(format!("eps must be positive, got {}", self.eps)));
        }
        Ok(())
    }
}

fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    libm::sqrt(
        a.iter()
            .zip(b)
            .map(|(x, y)| (x - y) * (x - y))
            .sum::<f64>(),
    )
}

/// Safety radius: `(||best - worst|| + eps) * alpha` with a fresh
/// `alpha ~ uniform(alpha_low, alpha_high)` per call. Always positive.
pub fn safety_radius<R: RandomSource>(
    best: &Individual,
    worst: &Individual,
    cfg: &MbgoConfig,
    rng: &mut R,
) -> f64 {
    let base = euclidean(&best.position, &worst.position) + cfg.eps;
    base * rng.uniform(cfg.alpha_low, cfg.alpha_high)
}

/// Zone membership is strict: distance to the best must be below the radius.
pub fn in_safe_zone(x: &Individual, best: &Individual, radius: f64) -> bool {
    debug_assert!(radius > 0.0);
    euclidean(&x.position, &best.position) < radius
}

/// In-zone movement: `x + best * sin(2*pi*u)` with one scalar angle draw
/// applied to the whole vector.
pub fn move_inside<R: RandomSource>(x: &Individual, best: &Individual, rng: &mut R) -> Vec<f64> {
    let s = libm::sin(2.0 * core::f64::consts::PI * rng.uniform01());
    x.position
        .iter()
        .zip(&best.position)
        .map(|(xi, bi)| xi + bi * s)
        .collect()
}

/// Out-of-zone movement: per dimension, an even coin picks between a
/// standard-normal perturbation and a uniform pull toward the best. The coin
/// is drawn first, then the perturbation or pull.
pub fn move_outside<R: RandomSource>(x: &Individual, best: &Individual, rng: &mut R) -> Vec<f64> {
    x.position
        .iter()
        .zip(&best.position)
        .map(|(xi, bi)| {
            if rng.uniform01() < 0.5 {
                xi + rng.standard_normal()
            } else {
                xi + (bi - xi) * rng.uniform01()
            }
        })
        .collect()
}

/// Difference vector oriented by fitness: from the worse individual's
/// position when `xi` is strictly better, and the reverse otherwise
/// (equality included).
pub fn direction_vector(xi: &Individual, opponent: &Individual) -> Vec<f64> {
    assert!(
        xi.is_evaluated() && opponent.is_evaluated(),
        "direction_vector needs evaluated individuals"
    );
    if xi.fitness < opponent.fitness {
        xi.position
            .iter()
            .zip(&opponent.position)
            .map(|(a, b)| a - b)
            .collect()
    } else {
        opponent
            .position
            .iter()
            .zip(&xi.position)
            .map(|(a, b)| a - b)
            .collect()
    }
}

/// Battle against a strictly better opponent: per dimension, an even coin
/// picks the anchor (own or opponent coordinate), then a fresh uniform
/// scales the direction step. Coin first, multiplier second.
pub fn battle_vs_stronger<R: RandomSource>(
    xi: &Individual,
    opponent: &Individual,
    dir: &[f64],
    rng: &mut R,
) -> Vec<f64> {
    debug_assert!(opponent.fitness < xi.fitness);
    (0..dir.len())
        .map(|k| {
            let anchor = if rng.uniform01() < 0.5 {
                xi.position[k]
            } else {
                opponent.position[k]
            };
            anchor + rng.uniform01() * dir[k]
        })
        .collect()
}

/// Battle against a not-stronger opponent: `xi + dir * cos(2*pi*u)` with one
/// scalar angle draw.
pub fn battle_vs_weaker<R: RandomSource>(xi: &Individual, dir: &[f64], rng: &mut R) -> Vec<f64> {
    let c = libm::cos(2.0 * core::f64::consts::PI * rng.uniform01());
    xi.position
        .iter()
        .zip(dir)
        .map(|(x, d)| x + d * c)
        .collect()
}

/// Uniform opponent index different from `i`; consumes exactly one bounded
/// integer draw.
pub fn opponent_index<R: RandomSource>(i: usize, n: usize, rng: &mut R) -> usize {
    debug_assert!(n >= 2 && i < n);
    let j = rng.integer_below(n as u64 - 1) as usize;
    if j >= i {
        j + 1
    } else {
        j
    }
}

/// One movement pass over the whole population (one candidate and one
/// evaluation per member). Exposed so a generation can be reproduced
/// step by step.
pub fn movement_phase<R: RandomSource>(
    pop: &mut Population,
    cfg: &MbgoConfig,
    rng: &mut R,
    eval: &mut Evaluator<'_>,
) -> Result<()> {
    let bounds = eval.problem().bounds().clone();
    for i in 0..pop.len() {
        // The radius is redrawn for every individual from the live extremes.
        let radius = safety_radius(pop.best(), pop.worst(), cfg, rng);
        let xi = pop.member(i);
        let mut candidate = if in_safe_zone(xi, pop.best(), radius) {
            move_inside(xi, pop.best(), rng)
        } else {
            move_outside(xi, pop.best(), rng)
        };
        clamp_to_bounds(&mut candidate, &bounds);
        let individual = eval.evaluate_individual(candidate)?;
        pop.challenge(i, individual);
    }
    Ok(())
}

/// One battle pass over the whole population.
pub fn battle_phase<R: RandomSource>(
    pop: &mut Population,
    rng: &mut R,
    eval: &mut Evaluator<'_>,
) -> Result<()> {
    let bounds = eval.problem().bounds().clone();
    for i in 0..pop.len() {
        let opp_idx = opponent_index(i, pop.len(), rng);
        let xi = pop.member(i);
        let opponent = pop.member(opp_idx);
        let dir = direction_vector(xi, opponent);
        let mut candidate = if opponent.fitness < xi.fitness {
            battle_vs_stronger(xi, opponent, &dir, rng)
        } else {
            battle_vs_weaker(xi, &dir, rng)
        };
        clamp_to_bounds(&mut candidate, &bounds);
        let individual = eval.evaluate_individual(candidate)?;
        pop.challenge(i, individual);
    }
    Ok(())
}

/// Runs the optimizer on `problem` and returns the run trace.
///
/// The budget is checked before each phase; a phase in flight when the
/// budget runs out finishes (overshooting by less than one population of
/// evaluations), but the recorded trace is truncated at the maximum.
pub fn optimize(problem: &ProblemSpec, cfg: &MbgoConfig, opts: &RunOptions) -> Result<RunTrace> {
    cfg.validate()?;
    let n = cfg.population_size;
    let stride = opts.trace_stride.unwrap_or(n as u64);
    let mut rng = RngStream::new(cfg.seed);
    let mut eval = Evaluator::new(problem, opts.penalty, cfg.max_evaluations, stride)?;

    let mut members = uniform_init(problem.bounds(), n, &mut rng)?;
    for m in &mut members {
        m.fitness = eval.evaluate(&m.position)?;
    }
    let mut pop = Population::new(members)?;

    while !eval.exhausted() {
        movement_phase(&mut pop, cfg, &mut rng, &mut eval)?;
        if eval.exhausted() {
            break;
        }
        battle_phase(&mut pop, &mut rng, &mut eval)?;
    }
    eval.finish("mbgo", cfg.seed)
}
