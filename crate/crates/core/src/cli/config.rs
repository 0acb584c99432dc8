use std::f64::consts::TAU;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dynamics::{validate_time_grid, Modulation};
use crate::entanglement::Bipartition;
use crate::experiments::{coherent_amplitudes, FieldPreparation, Measure, DEFAULT_EVENT_THRESHOLD};
use crate::model::{full_layout, SimParams};

/// Run description read from TOML (or from the `config` key of a sidecar).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub model: ModelConfig,
    #[serde(default = "constant")]
    pub modulation: Modulation,
    pub measure: MeasureConfig,
    pub grid: GridConfig,
    #[serde(default)]
    pub run: RunSettings,
}

fn constant() -> Modulation {
    Modulation::Constant
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelConfig {
    /// `[re, im]`; must have unit modulus since it sets the time unit.
    pub lambda1: [f64; 2],
    pub lambda2: [f64; 2],
    pub eta: f64,
    pub epsilon: f64,
    pub nbar: f64,
    pub phi: f64,
    #[serde(default)]
    pub standard_matrix_element: bool,
    /// Fitted to `run.deficit` when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fock_cutoff: Option<usize>,
    #[serde(default)]
    pub nu: f64,
    #[serde(default)]
    pub omega1: f64,
    #[serde(default)]
    pub omega2: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeasureConfig {
    pub name: Measure,
    pub side_a: Vec<String>,
    pub side_b: Vec<String>,
}

impl MeasureConfig {
    pub fn cut(&self) -> Bipartition {
        Bipartition::new(self.side_a.clone(), self.side_b.clone())
    }
}

/// Either an explicit list or `points` evenly spaced values from `start` to `stop`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Axis {
    List(Vec<f64>),
    Range { start: f64, stop: f64, points: usize },
}

impl Axis {
    pub fn linspace(start: f64, stop: f64, points: usize) -> Self {
        Axis::Range { start, stop, points }
    }

    pub fn values(&self) -> Vec<f64> {
        match *self {
            Axis::List(ref v) => v.clone(),
            Axis::Range { start, stop, points } => match points {
                0 => Vec::new(),
                1 => vec![start],
                _ => {
                    let last = points - 1;
                    (0..points)
                        .map(|i| if i == last { stop } else { start + (stop - start) * i as f64 / last as f64 })
                        .collect()
                }
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub theta: Axis,
    pub time: Axis,
    #[serde(default = "zero_gamma")]
    pub gamma: Axis,
}

fn zero_gamma() -> Axis {
    Axis::List(vec![0.0])
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunSettings {
    #[serde(default = "default_output")]
    pub output: String,
    /// Poisson tail mass allowed beyond the Fock cutoff.
    #[serde(default = "default_deficit")]
    pub deficit: f64,
    #[serde(default = "default_threshold")]
    pub threshold: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub workers: Option<usize>,
}

fn default_output() -> String {
    "ionpair".into()
}

fn default_deficit() -> f64 {
    1e-10
}

fn default_threshold() -> f64 {
    DEFAULT_EVENT_THRESHOLD
}

impl Default for RunSettings {
    fn default() -> Self {
        Self { output: default_output(), deficit: default_deficit(), threshold: default_threshold(), workers: None }
    }
}

/// A config that failed to parse or validate; the message names the field.
#[derive(Clone, Debug, PartialEq, thiserror::Error)]
#[error("{0}")]
pub struct ConfigError(pub String);

fn field_error(field: &str, msg: impl std::fmt::Display) -> ConfigError {
    ConfigError(format!("{field}: {msg}"))
}

fn strictly_increasing(field: &str, values: &[f64]) -> Result<(), ConfigError> {
    if values.is_empty() {
        return Err(field_error(field, "grid is empty"));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(field_error(field, "grid values must be finite"));
    }
    if values.windows(2).any(|w| w[1] <= w[0]) {
        return Err(field_error(field, "grid must be strictly increasing"));
    }
    Ok(())
}

/// Validated grids and the parameter template every cell starts from.
#[derive(Clone, Debug, PartialEq)]
pub struct ResolvedRun {
    pub template: SimParams,
    pub field: FieldPreparation,
    pub thetas: Vec<f64>,
    pub gammas: Vec<f64>,
    pub times: Vec<f64>,
    pub measure: Measure,
    pub cut: Bipartition,
}

impl RunConfig {
    pub fn from_toml_str(text: &str) -> Result<Self, ConfigError> {
        toml::from_str(text).map_err(|e| ConfigError(e.to_string()))
    }

    /// Reads TOML, or the `config` key of a JSON sidecar when the path ends in `.json`.
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError(format!("{}: {e}", path.display())))?;
        if path.extension().is_some_and(|e| e == "json") {
            #[derive(Deserialize)]
            struct Sidecar {
                config: RunConfig,
            }
            let sidecar: Sidecar =
                serde_json::from_str(&text).map_err(|e| ConfigError(format!("{}: {e}", path.display())))?;
            return Ok(sidecar.config);
        }
        Self::from_toml_str(&text).map_err(|e| ConfigError(format!("{}: {e}", path.display())))
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    /// Checks every range and resolves the Fock cutoff.
    pub fn resolve(&self) -> Result<ResolvedRun, ConfigError> {
        let m = &self.model;
        let lambda1 = Complex64::new(m.lambda1[0], m.lambda1[1]);
        if (lambda1.norm() - 1.0).abs() > 1e-9 {
            return Err(field_error(
                "model.lambda1",
                format!("must have modulus 1 (it sets the time unit), got {}", lambda1.norm()),
            ));
        }
        if self.run.deficit.is_nan() || self.run.deficit <= 0.0 || self.run.deficit >= 1.0 {
            return Err(field_error("run.deficit", format!("must lie in (0, 1), got {}", self.run.deficit)));
        }
        if self.run.threshold.is_nan() || self.run.threshold <= 0.0 {
            return Err(field_error("run.threshold", format!("must be > 0, got {}", self.run.threshold)));
        }
        if self.run.workers == Some(0) {
            return Err(field_error("run.workers", "must be at least 1"));
        }
        self.modulation.validate().map_err(|e| field_error("modulation", e))?;

        let field = match m.fock_cutoff {
            Some(cutoff) => FieldPreparation::coherent_with_cutoff(m.nbar, cutoff),
            None => coherent_amplitudes(m.nbar, self.run.deficit),
        }
        .map_err(|e| field_error(if m.fock_cutoff.is_some() { "model.fock_cutoff" } else { "model.nbar" }, e))?;

        let template = SimParams {
            lambda1,
            lambda2: Complex64::new(m.lambda2[0], m.lambda2[1]),
            eta: m.eta,
            epsilon: m.epsilon,
            gamma: 0.0,
            nbar: m.nbar,
            theta: 0.0,
            phi: m.phi,
            modulation: self.modulation,
            fock_cutoff: field.cutoff(),
            standard_matrix_element: m.standard_matrix_element,
            nu: m.nu,
            omega1: m.omega1,
            omega2: m.omega2,
        };
        template.validate().map_err(|e| field_error("model", e))?;

        let thetas = self.grid.theta.values();
        strictly_increasing("grid.theta", &thetas)?;
        if thetas.iter().any(|t| !(0.0..=TAU).contains(t)) {
            return Err(field_error("grid.theta", "values must lie in [0, 2π]"));
        }
        let gammas = self.grid.gamma.values();
        strictly_increasing("grid.gamma", &gammas)?;
        if gammas.iter().any(|&g| g < 0.0) {
            return Err(field_error("grid.gamma", "values must be ≥ 0"));
        }
        let times = self.grid.time.values();
        validate_time_grid(&times).map_err(|e| field_error("grid.time", e))?;

        let cut = self.measure.cut();
        let layout = full_layout(field.cutoff());
        let keep: Vec<&str> = cut.labels().collect();
        let kept = layout.positions(&keep).map_err(|e| field_error("measure", e))?;
        let sub = Bipartition::new(cut.side_a.clone(), cut.side_b.clone());
        sub.validate(&layout.subset(&kept)).map_err(|e| field_error("measure", e))?;
        if self.measure.name == Measure::IConcurrence {
            if kept.len() != layout.len() {
                return Err(field_error("measure.name", "i_concurrence needs a cut covering ion1, ion2 and field"));
            }
            if gammas.iter().any(|&g| g > 0.0) {
                return Err(field_error(
                    "measure.name",
                    "i_concurrence is undefined for the mixed states produced by gamma > 0",
                ));
            }
        }

        Ok(ResolvedRun { template, field, thetas, gammas, times, measure: self.measure.name, cut })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"
[model]
lambda1 = [1.0, 0.0]
lambda2 = [0.01, 0.0]
eta = 0.202
epsilon = 0.01
nbar = 5.0
phi = 0.0

[measure]
name = "i_concurrence"
side_a = ["ion1"]
side_b = ["ion2", "field"]

[grid]
theta = [0.0]
time = { start = 0.0, stop = 1.0, points = 3 }
"#;

    #[test]
    fn minimal_config_resolves() {
        let cfg = RunConfig::from_toml_str(MINIMAL).unwrap();
        let run = cfg.resolve().unwrap();
        assert_eq!(run.times, vec![0.0, 0.5, 1.0]);
        assert_eq!(run.gammas, vec![0.0]);
        assert_eq!(run.template.fock_cutoff, coherent_amplitudes(5.0, 1e-10).unwrap().cutoff());
        assert_eq!(cfg.modulation, Modulation::Constant);
        assert_eq!(cfg.run, RunSettings::default());
    }

    #[test]
    fn unknown_keys_are_rejected_with_location() {
        let text = MINIMAL.replace("eta = 0.202", "eta = 0.202\ntheta0 = 1.0");
        let err = RunConfig::from_toml_str(&text).unwrap_err().0;
        assert!(err.contains("theta0") && err.contains("line"), "{err}");
    }

    #[test]
    fn semantic_errors_name_the_field() {
        let check = |from: &str, to: &str, field: &str| {
            let cfg = RunConfig::from_toml_str(&MINIMAL.replace(from, to)).unwrap();
            let err = cfg.resolve().unwrap_err().0;
            assert!(err.starts_with(field), "{err}");
        };
        check("lambda1 = [1.0, 0.0]", "lambda1 = [2.0, 0.0]", "model.lambda1");
        check("theta = [0.0]", "theta = [1.0, 0.5]", "grid.theta");
        check("theta = [0.0]", "theta = [7.0]", "grid.theta");
        check("start = 0.0, stop", "start = 0.5, stop", "grid.time");
        check("side_b = [\"ion2\", \"field\"]", "side_b = [\"ion2\"]", "measure.name");
        check("side_b = [\"ion2\", \"field\"]", "side_b = [\"ion3\"]", "measure");
        check("nbar = 5.0", "nbar = -1.0", "model.nbar");
        check("phi = 0.0", "phi = 4.0", "model");
    }

    #[test]
    fn toml_round_trip() {
        let cfg = RunConfig::from_toml_str(MINIMAL).unwrap();
        assert_eq!(RunConfig::from_toml_str(&cfg.to_toml_string()).unwrap(), cfg);
        let sech = RunConfig::from_toml_str(&format!("{MINIMAL}\n[modulation]\nkind = \"sech\"\ntau = 5.0\n")).unwrap();
        assert_eq!(sech.modulation, Modulation::Sech { tau: 5.0 });
    }

    #[test]
    fn linspace_endpoints() {
        let v = Axis::linspace(0.0, std::f64::consts::PI, 121).values();
        assert_eq!(v.len(), 121);
        assert_eq!(v[0], 0.0);
        assert_eq!(v[120], std::f64::consts::PI);
        assert_eq!(Axis::linspace(2.0, 3.0, 1).values(), vec![2.0]);
    }
}
