//! Unconstrained benchmark functions: six classics plus seeded
//! shifted/rotated variants built from a deterministic shift vector and a
//! random orthogonal matrix.

use alloc::vec::Vec;
use core::f64::consts::{E, PI};

use crate::population::Bounds;
use crate::rng::{RandomSource, RngStream};

/// The classic function families in the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchmarkFn {
    Sphere,
    Rosenbrock,
    Rastrigin,
    Ackley,
    Griewank,
    Schwefel226,
}

impl BenchmarkFn {
    pub fn value(&self, x: &[f64]) -> f64 {
        match self {
            BenchmarkFn::Sphere => x.iter().map(|v| v * v).sum(),
            BenchmarkFn::Rosenbrock => x
                .windows(2)
                .map(|w| {
                    let a = w[1] - w[0] * w[0];
                    let b = 1.0 - w[0];
                    100.0 * a * a + b * b
                })
                .sum(),
            BenchmarkFn::Rastrigin => {
                10.0 * x.len() as f64
                    + x.iter()
                        .map(|v| v * v - 10.0 * libm::cos(2.0 * PI * v))
                        .sum::<f64>()
            }
            BenchmarkFn::Ackley => {
                let n = x.len() as f64;
                let sum_sq: f64 = x.iter().map(|v| v * v).sum();
                let sum_cos: f64 = x.iter().map(|v| libm::cos(2.0 * PI * v)).sum();
                -20.0 * libm::exp(-0.2 * libm::sqrt(sum_sq / n)) - libm::exp(sum_cos / n)
                    + 20.0
                    + E
            }
            BenchmarkFn::Griewank => {
                let sum: f64 = x.iter().map(|v| v * v).sum::<f64>() / 4000.0;
                let prod: f64 = x
                    .iter()
                    .enumerate()
                    .map(|(i, v)| libm::cos(v / libm::sqrt(i as f64 + 1.0)))
                    .product();
                sum - prod + 1.0
            }
            BenchmarkFn::Schwefel226 => {
                418.9829 * x.len() as f64
                    - x.iter()
                        .map(|v| v * libm::sin(libm::sqrt(libm::fabs(*v))))
                        .sum::<f64>()
            }
        }
    }

    /// Customary search box of the family.
    pub fn default_bounds(&self, dim: usize) -> Bounds {
        let (lo, hi) = match self {
            BenchmarkFn::Sphere => (-100.0, 100.0),
            BenchmarkFn::Rosenbrock => (-30.0, 30.0),
            BenchmarkFn::Rastrigin => (-5.12, 5.12),
            BenchmarkFn::Ackley => (-32.768, 32.768),
            BenchmarkFn::Griewank => (-600.0, 600.0),
            BenchmarkFn::Schwefel226 => (-500.0, 500.0),
        };
        Bounds::symmetric(dim, lo, hi).expect("static benchmark bounds are valid")
    }
}

/// A shifted and rotated instance: `f(x) = base(R * (x - shift))`.
///
/// The shift and the orthogonal matrix `R` are generated from a stream
/// seeded by the instance name and dimension, so every run of the library
/// sees the same landscape for a given `(name, dim)` pair.
#[derive(Debug, Clone)]
pub struct RotatedInstance {
    base: BenchmarkFn,
    shift: Vec<f64>,
    /// Row-major `dim x dim` orthogonal matrix.
    rotation: Vec<f64>,
    dim: usize,
}

/// Seed root for synthetic instance construction; frozen so stored results
/// stay comparable across versions.
const INSTANCE_SEED: u64 = 0x00A1_B2C3_D4E5_F607;

impl RotatedInstance {
    /// Builds the deterministic instance for `(base, name, dim)`. The shift
    /// lies inside the central 80% of the box so the optimum never sits on
    /// the boundary.
    pub fn build(base: BenchmarkFn, name: &str, dim: usize) -> Self {
        let bounds = base.default_bounds(dim);
        let mut rng = RngStream::new(crate::rng::stable_hash(INSTANCE_SEED, &[name], dim as u64));
        let shift: Vec<f64> = (0..dim)
            .map(|k| rng.uniform(0.8 * bounds.lower()[k], 0.8 * bounds.upper()[k]))
            .collect();
        let rotation = random_orthogonal(dim, &mut rng);
        RotatedInstance {
            base,
            shift,
            rotation,
            dim,
        }
    }

    pub fn base(&self) -> BenchmarkFn {
        self.base
    }

    pub fn shift(&self) -> &[f64] {
        &self.shift
    }

    pub fn rotation(&self) -> &[f64] {
        &self.rotation
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    /// Applies `R * (x - shift)` into a fresh vector.
    pub fn transform(&self, x: &[f64]) -> Vec<f64> {
        self.rotation
            .chunks_exact(self.dim)
            .map(|row| {
                row.iter()
                    .zip(x.iter().zip(&self.shift))
                    .map(|(r, (xj, sj))| r * (xj - sj))
                    .sum()
            })
            .collect()
    }

    pub fn value(&self, x: &[f64]) -> f64 {
        self.base.value(&self.transform(x))
    }
}

/// Random orthogonal matrix from a QR factorization of a Gaussian matrix
/// (modified Gram-Schmidt with a re-orthogonalization pass), sign-fixed so
/// the factorization is unique. Row-major.
pub fn random_orthogonal<R: RandomSource>(dim: usize, rng: &mut R) -> Vec<f64> {
    // Columns of the Gaussian matrix, orthonormalized in order.
    let mut cols: Vec<Vec<f64>> = (0..dim)
        .map(|_| (0..dim).map(|_| rng.standard_normal()).collect())
        .collect();
    for j in 0..dim {
        // Two projection passes keep the loss of orthogonality near machine
        // precision even for larger dim.
        for _ in 0..2 {
            for i in 0..j {
                let dot: f64 = cols[i].iter().zip(&cols[j]).map(|(a, b)| a * b).sum();
                let (done, rest) = cols.split_at_mut(j);
                for (cj, ci) in rest[0].iter_mut().zip(&done[i]) {
                    *cj -= dot * ci;
                }
            }
        }
        let norm = libm::sqrt(cols[j].iter().map(|v| v * v).sum::<f64>());
        // A degenerate draw is essentially impossible; guard by re-seeding
        // the column with a deterministic unit vector.
        if norm < 1e-150 {
            for (k, cj) in cols[j].iter_mut().enumerate() {
                *cj = if k == j { 1.0 } else { 0.0 };
            }
        } else {
            // Sign convention: first entry of each column non-negative.
            let sign = if cols[j][0] < 0.0 { -1.0 } else { 1.0 };
            for cj in cols[j].iter_mut() {
                *cj *= sign / norm;
            }
        }
    }
    let mut m = alloc::vec![0.0; dim * dim];
    for (j, col) in cols.iter().enumerate() {
        for i in 0..dim {
            m[i * dim + j] = col[i];
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_optima() {
        assert_eq!(BenchmarkFn::Sphere.value(&[0.0; 3]), 0.0);
        assert_eq!(BenchmarkFn::Rosenbrock.value(&[1.0; 5]), 0.0);
        assert!(BenchmarkFn::Rastrigin.value(&[0.0; 10]).abs() < 1e-12);
        assert!(BenchmarkFn::Ackley.value(&[0.0; 10]).abs() < 1e-12);
        assert!(BenchmarkFn::Griewank.value(&[0.0; 4]).abs() < 1e-12);
        // Schwefel 2.26 bottoms out near 420.9687 per coordinate; the
        // published constant keeps the floor within 1e-3 of zero.
        let x = [420.9687; 6];
        assert!(BenchmarkFn::Schwefel226.value(&x).abs() < 1e-2);
    }

    #[test]
    fn rastrigin_is_nonnegative() {
        let mut rng = RngStream::new(5);
        for _ in 0..200 {
            let x: Vec<f64> = (0..6).map(|_| rng.uniform(-5.12, 5.12)).collect();
            assert!(BenchmarkFn::Rastrigin.value(&x) >= 0.0);
        }
    }

    #[test]
    fn rotation_is_orthogonal() {
        for dim in [2, 5, 17] {
            let mut rng = RngStream::new(100 + dim as u64);
            let m = random_orthogonal(dim, &mut rng);
            let mut max_err = 0.0f64;
            for i in 0..dim {
                for j in 0..dim {
                    let dot: f64 = (0..dim).map(|k| m[k * dim + i] * m[k * dim + j]).sum();
                    let expect = if i == j { 1.0 } else { 0.0 };
                    max_err = max_err.max((dot - expect).abs());
                }
            }
            assert!(max_err < 1e-10, "dim {dim}: orthogonality error {max_err}");
        }
    }

    #[test]
    fn rotated_instance_zero_at_shift_and_matches_base() {
        let inst = RotatedInstance::build(BenchmarkFn::Rastrigin, "shifted_rotated_rastrigin", 8);
        assert!(inst.value(inst.shift()).abs() < 1e-9);

        let mut rng = RngStream::new(77);
        for _ in 0..100 {
            let x: Vec<f64> = (0..8).map(|_| rng.uniform(-5.12, 5.12)).collect();
            let direct = inst.value(&x);
            let via_base = inst.base().value(&inst.transform(&x));
            assert_eq!(direct, via_base);
        }
    }

    #[test]
    fn rotated_instance_is_deterministic() {
        let a = RotatedInstance::build(BenchmarkFn::Ackley, "shifted_rotated_ackley", 6);
        let b = RotatedInstance::build(BenchmarkFn::Ackley, "shifted_rotated_ackley", 6);
        assert_eq!(a.shift(), b.shift());
        assert_eq!(a.rotation(), b.rotation());

        let c = RotatedInstance::build(BenchmarkFn::Ackley, "shifted_rotated_ackley", 7);
        assert_ne!(a.shift(), &c.shift()[..6]);
    }

    #[test]
    fn shift_stays_inside_the_central_box() {
        let inst = RotatedInstance::build(BenchmarkFn::Rastrigin, "shifted_rotated_rastrigin", 12);
        for &s in inst.shift() {
            assert!(s > -5.12 * 0.81 && s < 5.12 * 0.81);
        }
    }
}
