//! Domain types shared by every optimizer: the search box, evaluated
//! candidates, and the population with its tracked best/worst members.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::rng::RandomSource;

/// Axis-aligned search box: one `[lower, upper]` interval per dimension.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Bounds {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl Bounds {
    /// Builds a box from per-dimension lower and upper vectors.
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() || lower.len() != upper.len() {
            return Err(Error::Config(format!(
                "bounds need matching non-empty vectors, got {} and {}",
                lower.len(),
                upper.len()
            )));
        }
        for (k, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo.is_finite() && hi.is_finite()) || lo > hi {
                return Err(Error::Config(format!(
                    "invalid interval [{lo}, {hi}] in dimension {k}"
                )));
            }
        }
        Ok(Bounds { lower, upper })
    }

    /// Same interval `[lo, hi]` replicated over `dim` dimensions.
    pub fn symmetric(dim: usize, lo: f64, hi: f64) -> Result<Self> {
        Bounds::new(alloc::vec![lo; dim], alloc::vec![hi; dim])
    }

    pub fn dimension(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// Width `upper[k] - lower[k]` of dimension `k`.
    pub fn range(&self, k: usize) -> f64 {
        self.upper[k] - self.lower[k]
    }

    pub fn contains(&self, position: &[f64]) -> bool {
        position.len() == self.dimension()
            && position
                .iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(x, (lo, hi))| *x >= *lo && *x <= *hi)
    }

    /// One uniform point in the box; one `uniform01` draw per dimension, in
    /// dimension order.
    pub fn sample<R: RandomSource>(&self, rng: &mut R) -> Vec<f64> {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(lo, hi)| lo + rng.uniform01() * (hi - lo))
            .collect()
    }
}

/// Projects each coordinate onto its interval; interior points pass through
/// unchanged. Non-finite coordinates collapse to the nearer bound so a
/// runaway arithmetic step cannot poison the population.
pub fn clamp_to_bounds(position: &mut [f64], bounds: &Bounds) {
    debug_assert_eq!(position.len(), bounds.dimension());
    for (k, x) in position.iter_mut().enumerate() {
        let lo = bounds.lower[k];
        let hi = bounds.upper[k];
        if x.is_nan() || *x < lo {
            *x = lo;
        } else if *x > hi {
            *x = hi;
        }
    }
}

/// A candidate solution: a position and its cached penalized fitness
/// (lower is better).
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Individual {
    pub position: Vec<f64>,
    pub fitness: f64,
}

impl Individual {
    /// A not-yet-evaluated candidate. The fitness sentinel is `INFINITY`;
    /// every evaluated fitness in this crate is finite, so the two states
    /// cannot be confused.
    pub fn unevaluated(position: Vec<f64>) -> Self {
        Individual {
            position,
            fitness: f64::INFINITY,
        }
    }

    pub fn evaluated(position: Vec<f64>, fitness: f64) -> Self {
        Individual { position, fitness }
    }

    pub fn is_evaluated(&self) -> bool {
        self.fitness.is_finite()
    }
}

/// Survivor selection: the candidate wins only on strict improvement; ties
/// keep the incumbent.
///
/// Panics if either fitness is unset — callers must evaluate before
/// comparing.
pub fn elite_replace(incumbent: Individual, candidate: Individual) -> Individual {
    assert!(
        incumbent.is_evaluated() && candidate.is_evaluated(),
        "elite_replace called with unevaluated individual"
    );
    if candidate.fitness < incumbent.fitness {
        candidate
    } else {
        incumbent
    }
}

/// A population of at least two evaluated individuals with cached
/// best/worst indices.
#[derive(Debug, Clone)]
pub struct Population {
    members: Vec<Individual>,
    best_index: usize,
    worst_index: usize,
}

impl Population {
    /// Wraps evaluated members and computes the extreme indices.
    pub fn new(members: Vec<Individual>) -> Result<Self> {
        if members.len() < 2 {
            return Err(Error::Config(
                "population needs at least 2 members".to_string(),
            ));
        }
        if let Some(i) = members.iter().position(|m| !m.is_evaluated()) {
            return Err(Error::Config(format!("member {i} has no fitness")));
        }
        let mut pop = Population {
            members,
            best_index: 0,
            worst_index: 0,
        };
        refresh_extremes(&mut pop);
        Ok(pop)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Individual] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &Individual {
        &self.members[i]
    }

    pub fn best_index(&self) -> usize {
        self.best_index
    }

    pub fn worst_index(&self) -> usize {
        self.worst_index
    }

    pub fn best(&self) -> &Individual {
        &self.members[self.best_index]
    }

    pub fn worst(&self) -> &Individual {
        &self.members[self.worst_index]
    }

    /// Offers `candidate` to member `i` under elite selection. On strict
    /// improvement the member is replaced and the best/worst indices are
    /// updated immediately; otherwise the member is untouched. Returns
    /// whether the replacement happened.
    pub fn challenge(&mut self, i: usize, candidate: Individual) -> bool {
        assert!(candidate.is_evaluated(), "candidate has no fitness");
        if candidate.fitness >= self.members[i].fitness {
            return false;
        }
        self.members[i] = candidate;
        // A replacement can only lower member i's fitness, so the best index
        // moves to i at most; the worst only changes if i held it.
        if self.members[i].fitness < self.members[self.best_index].fitness {
            self.best_index = i;
        }
        if i == self.worst_index {
            refresh_extremes(self);
        }
        true
    }
}

/// Recomputes `best_index`/`worst_index` as argmin/argmax of fitness, ties
/// broken by the lowest index.
pub fn refresh_extremes(pop: &mut Population) {
    let mut best = 0;
    let mut worst = 0;
    for (i, m) in pop.members.iter().enumerate() {
        if m.fitness < pop.members[best].fitness {
            best = i;
        }
        if m.fitness > pop.members[worst].fitness {
            worst = i;
        }
    }
    pop.best_index = best;
    pop.worst_index = worst;
}

/// Generates `n` uniform members inside `bounds`: member by member, one
/// fresh `uniform01` draw per coordinate. Fitness fields stay unset.
pub fn uniform_init<R: RandomSource>(
    bounds: &Bounds,
    n: usize,
    rng: &mut R,
) -> Result<Vec<Individual>> {
    if n < 2 {
        return Err(Error::Config(format!("population size {n} < 2")));
    }
    Ok((0..n)
        .map(|_| Individual::unevaluated(bounds.sample(rng)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{RngStream, ScriptedSource};

    fn ind(fitness: f64) -> Individual {
        Individual::evaluated(alloc::vec![0.0], fitness)
    }

    #[test]
    fn bounds_reject_bad_input() {
        assert!(Bounds::new(alloc::vec![0.0], alloc::vec![]).is_err());
        assert!(Bounds::new(alloc::vec![1.0], alloc::vec![0.0]).is_err());
        assert!(Bounds::new(alloc::vec![f64::NAN], alloc::vec![1.0]).is_err());
        assert!(Bounds::new(alloc::vec![], alloc::vec![]).is_err());
        // A degenerate interval is allowed.
        assert!(Bounds::new(alloc::vec![2.0, 2.0], alloc::vec![2.0, 2.0]).is_ok());
    }

    #[test]
    fn uniform_init_uses_one_draw_per_coordinate() {
        let bounds = Bounds::symmetric(3, 0.0, 1.0).unwrap();
        let mut rng = ScriptedSource::new();
        rng.repeat_uniform(0.0, 6);
        let members = uniform_init(&bounds, 2, &mut rng).unwrap();
        for m in &members {
            assert_eq!(m.position, alloc::vec![0.0, 0.0, 0.0]);
            assert!(!m.is_evaluated());
        }
    }

    #[test]
    fn uniform_init_midpoint_and_degenerate_box() {
        let bounds = Bounds::symmetric(2, -5.0, 5.0).unwrap();
        let mut rng = ScriptedSource::new();
        rng.repeat_uniform(0.5, 4);
        let members = uniform_init(&bounds, 2, &mut rng).unwrap();
        for m in &members {
            assert_eq!(m.position, alloc::vec![0.0, 0.0]);
        }

        let point = Bounds::new(alloc::vec![2.0, 2.0], alloc::vec![2.0, 2.0]).unwrap();
        let mut rng = RngStream::new(3);
        for m in uniform_init(&point, 5, &mut rng).unwrap() {
            assert_eq!(m.position, alloc::vec![2.0, 2.0]);
        }
    }

    #[test]
    fn uniform_init_rejects_tiny_population() {
        let bounds = Bounds::symmetric(1, 0.0, 1.0).unwrap();
        let mut rng = RngStream::new(0);
        assert!(uniform_init(&bounds, 1, &mut rng).is_err());
    }

    #[test]
    fn clamp_projects_and_preserves_interior() {
        let bounds = Bounds::symmetric(2, -5.0, 5.0).unwrap();
        let mut p = alloc::vec![7.0, -7.0];
        clamp_to_bounds(&mut p, &bounds);
        assert_eq!(p, alloc::vec![5.0, -5.0]);

        let mut q = alloc::vec![0.0, 0.0];
        clamp_to_bounds(&mut q, &bounds);
        assert_eq!(q, alloc::vec![0.0, 0.0]);

        let mut r = alloc::vec![5.0, 5.0];
        clamp_to_bounds(&mut r, &bounds);
        assert_eq!(r, alloc::vec![5.0, 5.0]);

        let mut s = alloc::vec![f64::NAN, f64::INFINITY];
        clamp_to_bounds(&mut s, &bounds);
        assert_eq!(s, alloc::vec![-5.0, 5.0]);
    }

    #[test]
    fn elite_replace_is_strict() {
        assert_eq!(elite_replace(ind(3.0), ind(2.0)).fitness, 2.0);
        assert_eq!(elite_replace(ind(3.0), ind(3.0)).fitness, 3.0);
        let incumbent = Individual::evaluated(alloc::vec![1.0], 3.0);
        let survivor = elite_replace(incumbent.clone(), ind(4.0));
        assert_eq!(survivor, incumbent);
    }

    #[test]
    #[should_panic(expected = "unevaluated")]
    fn elite_replace_rejects_unset_fitness() {
        elite_replace(ind(1.0), Individual::unevaluated(alloc::vec![0.0]));
    }

    #[test]
    fn extremes_follow_argmin_argmax_with_low_index_ties() {
        let pop = Population::new(alloc::vec![ind(5.0), ind(1.0), ind(9.0)]).unwrap();
        assert_eq!(pop.best_index(), 1);
        assert_eq!(pop.worst_index(), 2);

        let tied = Population::new(alloc::vec![ind(2.0), ind(2.0), ind(2.0)]).unwrap();
        assert_eq!(tied.best_index(), 0);
        assert_eq!(tied.worst_index(), 0);

        let two = Population::new(alloc::vec![ind(1.0), ind(9.0)]).unwrap();
        assert_eq!(two.best_index(), 0);
        assert_eq!(two.worst_index(), 1);
    }

    #[test]
    fn tie_breaking_is_stable_under_equal_tail_permutation() {
        // Equal-fitness members after the extremes can be permuted without
        // moving the reported indices.
        let a = Population::new(alloc::vec![ind(1.0), ind(7.0), ind(3.0), ind(3.0)]).unwrap();
        let b = Population::new(alloc::vec![ind(1.0), ind(7.0), ind(3.0), ind(3.0)]).unwrap();
        assert_eq!(a.best_index(), b.best_index());
        assert_eq!(a.worst_index(), b.worst_index());
        assert_eq!(a.best_index(), 0);
        assert_eq!(a.worst_index(), 1);
    }

    #[test]
    fn challenge_applies_elite_rule_and_live_updates() {
        let mut pop = Population::new(alloc::vec![ind(5.0), ind(1.0), ind(9.0)]).unwrap();

        // Rejected candidate leaves the member bitwise untouched.
        let before = pop.member(0).clone();
        assert!(!pop.challenge(0, ind(5.0)));
        assert_eq!(*pop.member(0), before);

        // Improving the worst member reassigns the worst index.
        assert!(pop.challenge(2, ind(0.5)));
        assert_eq!(pop.best_index(), 2);
        assert_eq!(pop.worst_index(), 0);
    }
}
