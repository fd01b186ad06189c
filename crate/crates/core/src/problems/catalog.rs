//! Name-based problem resolution and the machine-readable catalog manifest.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::benchmarks::{BenchmarkFn, RotatedInstance};
use super::engineering::{EngineeringId, ALL_ENGINEERING};
use super::{DiscreteRule, Evaluation, ProblemSpec};
use crate::error::{Error, Result};

const BENCHMARKS: [(&str, BenchmarkFn, bool); 8] = [
    ("sphere", BenchmarkFn::Sphere, false),
    ("rosenbrock", BenchmarkFn::Rosenbrock, false),
    ("rastrigin", BenchmarkFn::Rastrigin, false),
    ("ackley", BenchmarkFn::Ackley, false),
    ("griewank", BenchmarkFn::Griewank, false),
    ("schwefel226", BenchmarkFn::Schwefel226, false),
    ("shifted_rotated_rastrigin", BenchmarkFn::Rastrigin, true),
    ("shifted_rotated_ackley", BenchmarkFn::Ackley, true),
];

/// Default dimension used when a benchmark is requested without one.
pub const DEFAULT_BENCHMARK_DIMENSION: usize = 10;

/// Names of the benchmark functions, in catalog order.
pub fn benchmark_names() -> Vec<&'static str> {
    BENCHMARKS.iter().map(|(n, _, _)| *n).collect()
}

/// Names of the engineering problems, in catalog order.
pub fn engineering_names() -> Vec<&'static str> {
    ALL_ENGINEERING.iter().map(|id| id.name()).collect()
}

/// Resolves a problem by name. Benchmarks accept any dimension (default
/// [`DEFAULT_BENCHMARK_DIMENSION`]); engineering problems have a fixed
/// dimension and reject a conflicting request.
pub fn resolve(name: &str, dimension: Option<usize>) -> Result<ProblemSpec> {
    if let Some((_, f, rotated)) = BENCHMARKS.iter().find(|(n, _, _)| *n == name) {
        let dim = dimension.unwrap_or(DEFAULT_BENCHMARK_DIMENSION);
        if dim == 0 {
            return Err(Error::Config("dimension must be at least 1".to_string()));
        }
        let bounds = f.default_bounds(dim);
        return Ok(if *rotated {
            ProblemSpec::from_rotated(name.to_string(), bounds, RotatedInstance::build(*f, name, dim))
        } else {
            ProblemSpec::from_benchmark(name.to_string(), bounds, *f)
        });
    }
    if let Some(id) = EngineeringId::from_name(name) {
        if let Some(d) = dimension {
            if d != id.dimension() {
                return Err(Error::Config(format!(
                    "problem {name} has fixed dimension {}, got {d}",
                    id.dimension()
                )));
            }
        }
        return Ok(ProblemSpec::from_engineering(id));
    }
    Err(Error::Catalog(format!("unknown problem: {name}")))
}

/// Evaluates a named benchmark at `x`; the dimension is taken from `x`.
pub fn evaluate_benchmark(name: &str, x: &[f64]) -> Result<f64> {
    let spec = resolve(name, Some(x.len()))?;
    if spec.is_engineering() {
        return Err(Error::Catalog(format!("{name} is not a benchmark function")));
    }
    Ok(spec.evaluate(x)?.objective)
}

/// Evaluates a named engineering problem at `x`, returning the objective
/// and the capped violation vector. Discrete rules are applied before
/// evaluation.
pub fn evaluate_engineering(name: &str, x: &[f64]) -> Result<Evaluation> {
    let id = EngineeringId::from_name(name)
        .ok_or_else(|| Error::Catalog(format!("unknown engineering problem: {name}")))?;
    let spec = ProblemSpec::from_engineering(id);
    spec.evaluate(x)
}

/// One manifest row describing a catalog problem.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ProblemInfo {
    pub name: String,
    pub kind: String,
    pub dimension: usize,
    pub dimension_fixed: bool,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    pub constraint_count: usize,
    pub discrete_mask: Vec<DiscreteRule>,
    pub default_budget: u64,
    pub description: String,
}

/// The full catalog manifest. Benchmarks are described at `dimension`
/// (defaulting to [`DEFAULT_BENCHMARK_DIMENSION`]); engineering problems at
/// their fixed dimension.
pub fn problem_info(benchmark_dimension: Option<usize>) -> Result<Vec<ProblemInfo>> {
    let mut rows = Vec::new();
    for (name, _, _) in BENCHMARKS.iter() {
        let spec = resolve(name, benchmark_dimension)?;
        rows.push(info_row(&spec, "benchmark", false, benchmark_description(name)));
    }
    for id in ALL_ENGINEERING {
        let spec = ProblemSpec::from_engineering(id);
        rows.push(info_row(&spec, "engineering", true, id.description()));
    }
    Ok(rows)
}

fn info_row(spec: &ProblemSpec, kind: &str, fixed: bool, description: &str) -> ProblemInfo {
    ProblemInfo {
        name: spec.name().to_string(),
        kind: kind.to_string(),
        dimension: spec.dimension(),
        dimension_fixed: fixed,
        lower: spec.bounds().lower().to_vec(),
        upper: spec.bounds().upper().to_vec(),
        constraint_count: spec.constraint_count(),
        discrete_mask: spec.discrete_rules().to_vec(),
        default_budget: spec.default_budget(),
        description: description.to_string(),
    }
}

fn benchmark_description(name: &str) -> &'static str {
    match name {
        "sphere" => "sum of squares, unimodal",
        "rosenbrock" => "curved valley, unimodal for low dimensions",
        "rastrigin" => "highly multimodal, separable",
        "ackley" => "multimodal with a deep central funnel",
        "griewank" => "multimodal with product term",
        "schwefel226" => "deceptive multimodal, optimum far from center",
        "shifted_rotated_rastrigin" => "rastrigin under seeded shift and rotation",
        "shifted_rotated_ackley" => "ackley under seeded shift and rotation",
        _ => "",
    }
}
