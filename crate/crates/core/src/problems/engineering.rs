//! Constrained engineering design problems.
//!
//! Formulations follow the standard versions circulating in the
//! engineering-optimization benchmark literature; `docs/problems.md` in the
//! repository root spells out every objective, constraint, and bound with
//! its constants. All problems are minimization with inequality constraints
//! `g_i(x) <= 0`.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use super::DiscreteRule;
use crate::population::Bounds;

/// Identifier of one of the ten engineering design problems.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EngineeringId {
    /// Welded beam: weld/beam sizing for minimum fabrication cost.
    Wbp,
    /// Pressure vessel: shell/head thickness and geometry for minimum cost.
    Pvp,
    /// Three-bar truss: member areas for minimum weight under stress limits.
    Tbtd,
    /// Gear train: four tooth counts matching a target transmission ratio.
    Gtd,
    /// Cantilever beam: five segment widths for minimum weight.
    Cbd,
    /// I-beam: section sizing minimizing vertical deflection.
    Ibd,
    /// Tubular column: diameter/thickness for minimum cost under load.
    Tcd,
    /// Piston lever: linkage geometry minimizing swept oil volume.
    Pld,
    /// Corrugated bulkhead: panel geometry for minimum weight.
    Cbhd,
    /// Reinforced concrete beam: reinforcement and section for minimum cost.
    Rcb,
}

pub const ALL_ENGINEERING: [EngineeringId; 10] = [
    EngineeringId::Wbp,
    EngineeringId::Pvp,
    EngineeringId::Tbtd,
    EngineeringId::Gtd,
    EngineeringId::Cbd,
    EngineeringId::Ibd,
    EngineeringId::Tcd,
    EngineeringId::Pld,
    EngineeringId::Cbhd,
    EngineeringId::Rcb,
];

impl EngineeringId {
    pub fn name(&self) -> &'static str {
        match self {
            EngineeringId::Wbp => "wbp",
            EngineeringId::Pvp => "pvp",
            EngineeringId::Tbtd => "tbtd",
            EngineeringId::Gtd => "gtd",
            EngineeringId::Cbd => "cbd",
            EngineeringId::Ibd => "ibd",
            EngineeringId::Tcd => "tcd",
            EngineeringId::Pld => "pld",
            EngineeringId::Cbhd => "cbhd",
            EngineeringId::Rcb => "rcb",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        ALL_ENGINEERING.into_iter().find(|id| id.name() == name)
    }

    pub fn description(&self) -> &'static str {
        match self {
            EngineeringId::Wbp => "welded beam fabrication cost",
            EngineeringId::Pvp => "pressure vessel total cost",
            EngineeringId::Tbtd => "three-bar truss weight",
            EngineeringId::Gtd => "gear train ratio error (discrete)",
            EngineeringId::Cbd => "cantilever beam weight",
            EngineeringId::Ibd => "I-beam vertical deflection",
            EngineeringId::Tcd => "tubular column cost",
            EngineeringId::Pld => "piston lever oil volume",
            EngineeringId::Cbhd => "corrugated bulkhead weight",
            EngineeringId::Rcb => "reinforced concrete beam cost",
        }
    }

    pub fn dimension(&self) -> usize {
        match self {
            EngineeringId::Wbp | EngineeringId::Pvp | EngineeringId::Gtd => 4,
            EngineeringId::Ibd | EngineeringId::Pld | EngineeringId::Cbhd => 4,
            EngineeringId::Tbtd | EngineeringId::Tcd => 2,
            EngineeringId::Cbd => 5,
            EngineeringId::Rcb => 3,
        }
    }

    pub fn constraint_count(&self) -> usize {
        match self {
            EngineeringId::Wbp => 7,
            EngineeringId::Pvp => 4,
            EngineeringId::Tbtd => 3,
            EngineeringId::Gtd => 0,
            EngineeringId::Cbd => 1,
            EngineeringId::Ibd => 1,
            EngineeringId::Tcd => 6,
            EngineeringId::Pld => 4,
            EngineeringId::Cbhd => 6,
            EngineeringId::Rcb => 2,
        }
    }

    pub fn bounds(&self) -> Bounds {
        let (lower, upper): (Vec<f64>, Vec<f64>) = match self {
            EngineeringId::Wbp => (vec![0.1, 0.1, 0.1, 0.1], vec![2.0, 10.0, 10.0, 2.0]),
            EngineeringId::Pvp => (
                vec![0.0625, 0.0625, 10.0, 10.0],
                vec![6.1875, 6.1875, 200.0, 200.0],
            ),
            EngineeringId::Tbtd => (vec![0.0, 0.0], vec![1.0, 1.0]),
            EngineeringId::Gtd => (vec![12.0; 4], vec![60.0; 4]),
            EngineeringId::Cbd => (vec![0.01; 5], vec![100.0; 5]),
            EngineeringId::Ibd => (vec![10.0, 10.0, 0.9, 0.9], vec![50.0, 80.0, 5.0, 5.0]),
            EngineeringId::Tcd => (vec![2.0, 0.2], vec![14.0, 0.8]),
            EngineeringId::Pld => (vec![0.05, 0.05, 0.05, 0.05], vec![500.0, 500.0, 120.0, 500.0]),
            // Lower bounds nudged off zero so the objective stays finite on
            // the whole box (the canonical statement allows a pole at b = 0
            // with l = h).
            EngineeringId::Cbhd => (vec![0.01, 0.01, 0.01, 0.01], vec![100.0, 100.0, 100.0, 5.0]),
            EngineeringId::Rcb => (vec![6.0, 28.0, 5.0], vec![8.4, 40.0, 10.0]),
        };
        Bounds::new(lower, upper).expect("static engineering bounds are valid")
    }

    pub fn discrete_rules(&self) -> Vec<DiscreteRule> {
        match self {
            // Gear teeth are integers.
            EngineeringId::Gtd => vec![DiscreteRule::Integer; 4],
            // Shell and head thickness come in 0.0625 in plate steps.
            EngineeringId::Pvp => vec![
                DiscreteRule::MultipleOf(0.0625),
                DiscreteRule::MultipleOf(0.0625),
                DiscreteRule::Continuous,
                DiscreteRule::Continuous,
            ],
            // Beam width in whole centimeters.
            EngineeringId::Rcb => vec![
                DiscreteRule::Continuous,
                DiscreteRule::Integer,
                DiscreteRule::Continuous,
            ],
            _ => vec![DiscreteRule::Continuous; self.dimension()],
        }
    }

    /// Objective and raw constraint values `g_i` (feasible iff `g_i <= 0`)
    /// at an already-rounded point.
    pub fn evaluate(&self, x: &[f64]) -> (f64, Vec<f64>) {
        debug_assert_eq!(x.len(), self.dimension());
        match self {
            EngineeringId::Wbp => welded_beam(x),
            EngineeringId::Pvp => pressure_vessel(x),
            EngineeringId::Tbtd => three_bar_truss(x),
            EngineeringId::Gtd => gear_train(x),
            EngineeringId::Cbd => cantilever_beam(x),
            EngineeringId::Ibd => i_beam(x),
            EngineeringId::Tcd => tubular_column(x),
            EngineeringId::Pld => piston_lever(x),
            EngineeringId::Cbhd => corrugated_bulkhead(x),
            EngineeringId::Rcb => reinforced_concrete_beam(x),
        }
    }
}

fn welded_beam(x: &[f64]) -> (f64, Vec<f64>) {
    let (h, l, t, b) = (x[0], x[1], x[2], x[3]);
    const P: f64 = 6000.0;
    const L: f64 = 14.0;
    const E: f64 = 30e6;
    const G: f64 = 12e6;
    const TAU_MAX: f64 = 13_600.0;
    const SIGMA_MAX: f64 = 30_000.0;
    const DELTA_MAX: f64 = 0.25;

    let cost = 1.10471 * h * h * l + 0.04811 * t * b * (14.0 + l);

    let tau_p = P / (libm::sqrt(2.0) * h * l);
    let m = P * (L + l / 2.0);
    let r = libm::sqrt(l * l / 4.0 + (h + t) * (h + t) / 4.0);
    let j = 2.0 * (libm::sqrt(2.0) * h * l * (l * l / 12.0 + (h + t) * (h + t) / 4.0));
    let tau_pp = m * r / j;
    let tau = libm::sqrt(tau_p * tau_p + 2.0 * tau_p * tau_pp * l / (2.0 * r) + tau_pp * tau_pp);
    let sigma = 6.0 * P * L / (b * t * t);
    let delta = 4.0 * P * L * L * L / (E * t * t * t * b);
    let p_c = 4.013 * E * libm::sqrt(t * t * libm::pow(b, 6.0) / 36.0) / (L * L)
        * (1.0 - t / (2.0 * L) * libm::sqrt(E / (4.0 * G)));

    let g = vec![
        tau - TAU_MAX,
        sigma - SIGMA_MAX,
        h - b,
        0.10471 * h * h + 0.04811 * t * b * (14.0 + l) - 5.0,
        0.125 - h,
        delta - DELTA_MAX,
        P - p_c,
    ];
    (cost, g)
}

fn pressure_vessel(x: &[f64]) -> (f64, Vec<f64>) {
    let (ts, th, r, l) = (x[0], x[1], x[2], x[3]);
    let cost = 0.6224 * ts * r * l
        + 1.7781 * th * r * r
        + 3.1661 * ts * ts * l
        + 19.84 * ts * ts * r;
    let g = vec![
        -ts + 0.0193 * r,
        -th + 0.00954 * r,
        -PI * r * r * l - 4.0 / 3.0 * PI * r * r * r + 1_296_000.0,
        l - 240.0,
    ];
    (cost, g)
}

fn three_bar_truss(x: &[f64]) -> (f64, Vec<f64>) {
    let (a1, a2) = (x[0], x[1]);
    const L: f64 = 100.0;
    const P: f64 = 2.0;
    const SIGMA: f64 = 2.0;
    let sqrt2 = libm::sqrt(2.0);

    let weight = (2.0 * sqrt2 * a1 + a2) * L;
    let denom = sqrt2 * a1 * a1 + 2.0 * a1 * a2;
    let g = vec![
        (sqrt2 * a1 + a2) / denom * P - SIGMA,
        a2 / denom * P - SIGMA,
        1.0 / (sqrt2 * a2 + a1) * P - SIGMA,
    ];
    (weight, g)
}

fn gear_train(x: &[f64]) -> (f64, Vec<f64>) {
    let ratio = (x[0] * x[1]) / (x[2] * x[3]);
    let err = 1.0 / 6.931 - ratio;
    (err * err, Vec::new())
}

fn cantilever_beam(x: &[f64]) -> (f64, Vec<f64>) {
    let weight = 0.0624 * x.iter().sum::<f64>();
    let cubes: Vec<f64> = x.iter().map(|v| v * v * v).collect();
    let g = vec![
        61.0 / cubes[0] + 37.0 / cubes[1] + 19.0 / cubes[2] + 7.0 / cubes[3] + 1.0 / cubes[4]
            - 1.0,
    ];
    (weight, g)
}

fn i_beam(x: &[f64]) -> (f64, Vec<f64>) {
    let (b, h, tw, tf) = (x[0], x[1], x[2], x[3]);
    let web = h - 2.0 * tf;
    let inertia =
        tw * web * web * web / 12.0 + b * tf * tf * tf / 6.0 + 2.0 * b * tf * (h - tf) * (h - tf) / 4.0;
    let deflection = 5000.0 / inertia;
    // Cross-section area capped at 300 cm^2.
    let g = vec![2.0 * b * tf + tw * web - 300.0];
    (deflection, g)
}

fn tubular_column(x: &[f64]) -> (f64, Vec<f64>) {
    let (d, t) = (x[0], x[1]);
    const P: f64 = 2500.0;
    const SIGMA_Y: f64 = 500.0;
    const E: f64 = 0.85e6;
    const L: f64 = 250.0;

    let cost = 9.8 * d * t + 2.0 * d;
    let g = vec![
        P / (PI * d * t * SIGMA_Y) - 1.0,
        8.0 * P * L * L / (PI * PI * PI * E * d * t * (d * d + t * t)) - 1.0,
        2.0 / d - 1.0,
        d / 14.0 - 1.0,
        0.2 / t - 1.0,
        t / 0.8 - 1.0,
    ];
    (cost, g)
}

fn piston_lever(x: &[f64]) -> (f64, Vec<f64>) {
    let (h, b, d, xp) = (x[0], x[1], x[2], x[3]);
    const P: f64 = 1500.0;
    const Q: f64 = 10_000.0;
    const L: f64 = 240.0;
    const M_MAX: f64 = 1.8e6;
    let theta = PI / 4.0;
    let (sin_t, cos_t) = (libm::sin(theta), libm::cos(theta));

    let l1 = libm::sqrt((xp - b) * (xp - b) + h * h);
    let l2 = libm::sqrt(
        (xp * sin_t + h) * (xp * sin_t + h) + (b - xp * cos_t) * (b - xp * cos_t),
    );
    let volume = PI / 4.0 * d * d * (l2 - l1);

    let force = PI * P * d * d / 4.0;
    let moment_arm = libm::fabs(-xp * (xp * sin_t + h) + h * (b - xp * cos_t)) / l1;
    let g = vec![
        Q * L * cos_t - moment_arm * force,
        Q * (L - xp) - M_MAX,
        1.2 * (l2 - l1) - l1,
        d / 2.0 - b,
    ];
    (volume, g)
}

fn corrugated_bulkhead(x: &[f64]) -> (f64, Vec<f64>) {
    let (b, h, l, t) = (x[0], x[1], x[2], x[3]);
    // The radical is clamped at zero: the l < h region it regularizes is
    // infeasible anyway (g6 requires h <= l).
    let rad = libm::sqrt((l * l - h * h).max(0.0));
    let weight = 5.885 * t * (b + l) / (b + rad);
    let g = vec![
        8.94 * (b + rad) - t * h * (0.4 * b + l / 6.0),
        2.2 * libm::pow(8.94 * (b + rad), 4.0 / 3.0) - t * h * h * (0.2 * b + l / 12.0),
        0.0156 * b + 0.15 - t,
        0.0156 * l + 0.15 - t,
        1.05 - t,
        h - l,
    ];
    (weight, g)
}

fn reinforced_concrete_beam(x: &[f64]) -> (f64, Vec<f64>) {
    let (area, width, depth) = (x[0], x[1], x[2]);
    let cost = 29.4 * area + 0.6 * width * depth;
    let g = vec![
        width / depth - 4.0,
        180.0 + 7.375 * area * area / depth - area * width,
    ];
    (cost, g)
}
