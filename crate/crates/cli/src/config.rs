//! Experiment configuration: the JSON schema consumed by `mbgo compare`.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

fn default_population() -> usize {
    100
}

fn default_trials() -> u32 {
    30
}

fn default_alpha() -> f64 {
    0.05
}

fn default_penalty() -> f64 {
    1e9
}

/// One problem to run: a catalog name plus, for benchmarks, a dimension.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSelector {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
}

/// One algorithm entry. Parameters left out fall back to the standard
/// defaults; `label` allows several differently-tuned entries of the same
/// algorithm in one experiment.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "algorithm", rename_all = "lowercase", deny_unknown_fields)]
pub enum AlgorithmSpec {
    Mbgo {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
        #[serde(default = "default_population")]
        population_size: usize,
        #[serde(default = "defaults::mbgo_alpha_low")]
        alpha_low: f64,
        #[serde(default = "defaults::mbgo_alpha_high")]
        alpha_high: f64,
        #[serde(default = "defaults::mbgo_eps")]
        eps: f64,
    },
    De {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
        #[serde(default = "default_population")]
        population_size: usize,
        #[serde(default = "defaults::de_weighting_factor")]
        weighting_factor: f64,
        #[serde(default = "defaults::de_crossover_rate")]
        crossover_rate: f64,
    },
    Pso {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
        #[serde(default = "default_population")]
        population_size: usize,
        #[serde(default = "defaults::pso_inertia_start")]
        inertia_start: f64,
        #[serde(default = "defaults::pso_inertia_end")]
        inertia_end: f64,
        #[serde(default = "defaults::pso_cognitive")]
        cognitive: f64,
        #[serde(default = "defaults::pso_social")]
        social: f64,
        #[serde(default = "defaults::pso_velocity_clamp")]
        velocity_clamp_fraction: f64,
    },
    Woa {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
        #[serde(default = "default_population")]
        population_size: usize,
        #[serde(default = "defaults::woa_spiral_constant")]
        spiral_constant: f64,
    },
    Random {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
        #[serde(default = "default_population")]
        population_size: usize,
    },
}

mod defaults {
    pub fn mbgo_alpha_low() -> f64 {
        0.8
    }
    pub fn mbgo_alpha_high() -> f64 {
        1.2
    }
    pub fn mbgo_eps() -> f64 {
        1e-12
    }
    pub fn de_weighting_factor() -> f64 {
        0.8
    }
    pub fn de_crossover_rate() -> f64 {
        0.9
    }
    pub fn pso_inertia_start() -> f64 {
        0.9
    }
    pub fn pso_inertia_end() -> f64 {
        0.4
    }
    pub fn pso_cognitive() -> f64 {
        2.05
    }
    pub fn pso_social() -> f64 {
        2.05
    }
    pub fn pso_velocity_clamp() -> f64 {
        0.2
    }
    pub fn woa_spiral_constant() -> f64 {
        1.0
    }
}

impl AlgorithmSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            AlgorithmSpec::Mbgo { .. } => "mbgo",
            AlgorithmSpec::De { .. } => "de",
            AlgorithmSpec::Pso { .. } => "pso",
            AlgorithmSpec::Woa { .. } => "woa",
            AlgorithmSpec::Random { .. } => "random",
        }
    }

    /// Display/file label: explicit label or the algorithm kind.
    pub fn label(&self) -> String {
        let explicit = match self {
            AlgorithmSpec::Mbgo { label, .. }
            | AlgorithmSpec::De { label, .. }
            | AlgorithmSpec::Pso { label, .. }
            | AlgorithmSpec::Woa { label, .. }
            | AlgorithmSpec::Random { label, .. } => label,
        };
        explicit.clone().unwrap_or_else(|| self.kind().to_string())
    }

    pub fn population_size(&self) -> usize {
        match self {
            AlgorithmSpec::Mbgo { population_size, .. }
            | AlgorithmSpec::De { population_size, .. }
            | AlgorithmSpec::Pso { population_size, .. }
            | AlgorithmSpec::Woa { population_size, .. }
            | AlgorithmSpec::Random { population_size, .. } => *population_size,
        }
    }

    /// Builds the default-parameter entry for a kind name.
    pub fn from_kind(kind: &str) -> Option<Self> {
        match kind {
            "mbgo" => Some(AlgorithmSpec::Mbgo {
                label: None,
                population_size: default_population(),
                alpha_low: defaults::mbgo_alpha_low(),
                alpha_high: defaults::mbgo_alpha_high(),
                eps: defaults::mbgo_eps(),
            }),
            "de" => Some(AlgorithmSpec::De {
                label: None,
                population_size: default_population(),
                weighting_factor: defaults::de_weighting_factor(),
                crossover_rate: defaults::de_crossover_rate(),
            }),
            "pso" => Some(AlgorithmSpec::Pso {
                label: None,
                population_size: default_population(),
                inertia_start: defaults::pso_inertia_start(),
                inertia_end: defaults::pso_inertia_end(),
                cognitive: defaults::pso_cognitive(),
                social: defaults::pso_social(),
                velocity_clamp_fraction: defaults::pso_velocity_clamp(),
            }),
            "woa" => Some(AlgorithmSpec::Woa {
                label: None,
                population_size: default_population(),
                spiral_constant: defaults::woa_spiral_constant(),
            }),
            "random" => Some(AlgorithmSpec::Random {
                label: None,
                population_size: default_population(),
            }),
            _ => None,
        }
    }
}

/// The full experiment definition.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub problems: Vec<ProblemSelector>,
    pub algorithms: Vec<AlgorithmSpec>,
    #[serde(default = "default_trials")]
    pub trials: u32,
    #[serde(default)]
    pub base_seed: u64,
    /// Where outputs go; overridable with `--out`. Not part of the resolved
    /// config echo so identical experiments hash identically anywhere.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_dir: Option<PathBuf>,
    /// Checkpoint spacing; default is each algorithm's population size.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace_stride: Option<u64>,
    /// Replaces the per-problem budget rule (1000*D benchmarks, 20000
    /// engineering) when set.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget_override: Option<u64>,
    /// Worker pool size; default is the available parallelism.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub workers: Option<usize>,
    #[serde(default = "default_alpha")]
    pub alpha: f64,
    #[serde(default = "default_penalty")]
    pub penalty_coefficient: f64,
}

impl ExperimentConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            CliError::Usage(format!("cannot read config {}: {e}", path.display()))
        })?;
        let cfg: ExperimentConfig = serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("invalid config {}: {e}", path.display())))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.problems.is_empty() {
            return Err(CliError::Usage("config lists no problems".into()));
        }
        if self.algorithms.is_empty() {
            return Err(CliError::Usage("config lists no algorithms".into()));
        }
        if self.trials == 0 {
            return Err(CliError::Usage("trials must be at least 1".into()));
        }
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(CliError::Usage(format!(
                "alpha must lie in (0, 1), got {}",
                self.alpha
            )));
        }
        if self.penalty_coefficient.is_nan() || self.penalty_coefficient <= 0.0 {
            return Err(CliError::Usage("penalty coefficient must be positive".into()));
        }
        let mut labels = std::collections::HashSet::new();
        for a in &self.algorithms {
            if !labels.insert(a.label()) {
                return Err(CliError::Usage(format!(
                    "duplicate algorithm label: {}",
                    a.label()
                )));
            }
        }
        let mut problem_keys = std::collections::HashSet::new();
        for p in &self.problems {
            let spec = mbgo_core::problems::resolve(p.name.as_str(), p.dimension)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            if !problem_keys.insert(crate::runner::problem_label(&p.name, spec.dimension())) {
                return Err(CliError::Usage(format!(
                    "duplicate problem entry: {} (dimension {})",
                    p.name,
                    spec.dimension()
                )));
            }
        }
        Ok(())
    }

    /// The config echo written next to results: execution-site details
    /// (output dir, worker count) stripped.
    pub fn resolved_echo(&self) -> ExperimentConfig {
        let mut echo = self.clone();
        echo.output_dir = None;
        echo.workers = None;
        echo
    }
}
