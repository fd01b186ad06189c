//! Population-based black-box optimization with a reproducible experiment core.
//!
//! The crate bundles four things that are usually scattered across a benchmark
//! study:
//!
//! * [`mbgo`] — a two-phase battle-game optimizer (safe-zone movement phase
//!   plus per-opponent battle phase with elite selection),
//! * [`baselines`] — DE/rand/1/bin, global-best PSO, whale optimization, and
//!   pure random search, all driven by the same budget and trace machinery,
//! * [`problems`] — classic and seeded shifted/rotated benchmark functions
//!   plus ten constrained engineering design problems with additive penalty
//!   handling,
//! * [`stats`] — Mann-Whitney U tests, Holm step-down adjustment, and the
//!   plus/equal/minus labelling used to compare algorithms per problem.
//!
//! Everything here is `no_std + alloc`: the crate does no IO and draws all
//! randomness from the seeded, platform-independent [`rng::RngStream`], so a
//! run is reproducible bit-for-bit from its configuration. File formats, the
//! CLI, and parallel experiment execution live in the companion `mbgo-cli`
//! crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod baselines;
pub mod budget;
pub mod error;
pub mod evaluator;
pub mod mbgo;
pub mod population;
pub mod problems;
pub mod rng;
pub mod stats;
pub mod trace;

pub use budget::EvaluationBudget;
pub use error::Error;
pub use evaluator::{Evaluator, RunOptions};
pub use population::{elite_replace, refresh_extremes, Bounds, Individual, Population};
pub use problems::{PenaltyPolicy, ProblemSpec};
pub use rng::{RandomSource, RngStream};
pub use trace::{Checkpoint, RunTrace};
