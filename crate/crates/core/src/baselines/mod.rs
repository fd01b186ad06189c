//! Reference optimizers sharing the budget/trace machinery: differential
//! evolution, global-best particle swarm, whale optimization, and pure
//! random search. Parameter defaults follow the common literature settings
//! (DE `F = 0.8`, `Cr = 0.9`; PSO inertia 0.9 to 0.4 with `c1 = c2 = 2.05`;
//! WOA coefficient `a` from 2 to 0 with spiral constant `b = 1`).

mod de;
mod pso;
mod random;
mod woa;

pub use de::{de_optimize, mutant_vector, DeConfig};
pub use pso::{inertia_weight, pso_optimize, velocity_update, PsoConfig};
pub use random::{random_search, RandomSearchConfig};
pub use woa::{a_schedule, encircle_step, spiral_step, woa_optimize, WoaConfig};
