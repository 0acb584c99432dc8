use std::f64::consts::FRAC_PI_2;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::config::{ResolvedRun, RunConfig};
use crate::experiments::{run_sweep, MeasureSeries, EVENT_HYSTERESIS_POINTS};
use crate::Result;

pub const CSV_HEADER: &str = "theta,gamma,nbar,scaled_time,measure,value";

/// Twelve significant digits; `-0` is written as `0`.
pub fn format_value(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.11e}")
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Truncation {
    pub fock_cutoff: usize,
    pub norm_deficit: f64,
    pub deficit_target: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EventSettings {
    pub threshold: f64,
    pub hysteresis_points: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeriesSummary {
    pub theta: f64,
    pub gamma: f64,
    pub max_value: f64,
    pub births: Vec<f64>,
    pub deaths: Vec<f64>,
    pub first_birth: Option<f64>,
}

/// Start angles at a multiple of π/2, where the initial ionic state is a product.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeparableStart {
    pub theta: f64,
    pub gamma: f64,
    pub max_value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Sidecar {
    pub version: &'static str,
    pub preset: Option<String>,
    pub config: RunConfig,
    pub rows: usize,
    pub truncation: Truncation,
    pub events: EventSettings,
    pub time_origin: &'static str,
    pub series: Vec<SeriesSummary>,
    pub separable_starts: Vec<SeparableStart>,
    pub notes: Vec<String>,
}

/// Computed sweep ready to be written as CSV and sidecar.
#[derive(Clone, Debug)]
pub struct Dataset {
    pub series: Vec<MeasureSeries>,
    pub sidecar: Sidecar,
}

fn is_separable_angle(theta: f64) -> bool {
    let k = (theta / FRAC_PI_2).round();
    (theta - k * FRAC_PI_2).abs() <= 1e-12
}

impl Dataset {
    /// Runs the sweep on the current rayon pool.
    pub fn compute(config: &RunConfig, resolved: &ResolvedRun, preset: Option<&str>) -> Result<Self> {
        let series = run_sweep(
            &resolved.template,
            &resolved.thetas,
            &resolved.gammas,
            resolved.measure,
            &resolved.cut,
            &resolved.times,
        )?;
        let threshold = config.run.threshold;
        let mut summaries = Vec::with_capacity(series.len());
        for s in &series {
            let max_value = s.values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let (births, deaths) = match s.events(threshold) {
                Ok(ev) => (ev.births, ev.deaths),
                Err(_) => (Vec::new(), Vec::new()),
            };
            summaries.push(SeriesSummary {
                theta: s.params.theta,
                gamma: s.params.gamma,
                max_value,
                first_birth: births.first().copied(),
                births,
                deaths,
            });
        }
        let separable_starts = summaries
            .iter()
            .filter(|s| is_separable_angle(s.theta))
            .map(|s| SeparableStart { theta: s.theta, gamma: s.gamma, max_value: s.max_value })
            .collect();

        let mut notes = vec![
            "nu, omega1 and omega2 are recorded only; the resonant interaction-picture dynamics does not depend on them".to_owned(),
        ];
        if resolved.times.len() <= EVENT_HYSTERESIS_POINTS {
            notes.push("time grid too short for event detection; event lists are empty".into());
        }
        let sidecar = Sidecar {
            version: env!("CARGO_PKG_VERSION"),
            preset: preset.map(str::to_owned),
            config: config.clone(),
            rows: series.len() * resolved.times.len(),
            truncation: Truncation {
                fock_cutoff: resolved.field.cutoff(),
                norm_deficit: resolved.field.norm_deficit(),
                deficit_target: config.model.fock_cutoff.is_none().then_some(config.run.deficit),
            },
            events: EventSettings { threshold, hysteresis_points: EVENT_HYSTERESIS_POINTS },
            time_origin: "t = 0 is the peak of the coupling profile; evolution starts there",
            series: summaries,
            separable_starts,
            notes,
        };
        Ok(Self { series, sidecar })
    }

    /// CSV text, rows sorted by (theta, gamma, scaled_time).
    pub fn csv(&self) -> String {
        let mut out = String::with_capacity(64 * self.sidecar.rows + CSV_HEADER.len() + 1);
        out.push_str(CSV_HEADER);
        out.push('\n');
        for s in &self.series {
            let theta = format_value(s.params.theta);
            let gamma = format_value(s.params.gamma);
            let nbar = format_value(s.params.nbar);
            for (t, v) in s.times.iter().zip(&s.values) {
                let _ = writeln!(out, "{theta},{gamma},{nbar},{},{},{}", format_value(*t), s.measure, format_value(*v));
            }
        }
        out
    }

    pub fn sidecar_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.sidecar).expect("sidecar serializes");
        text.push('\n');
        text
    }

    /// Writes `<prefix>.csv` and `<prefix>.json`, returning both paths.
    pub fn write(&self, prefix: &Path) -> std::io::Result<(PathBuf, PathBuf)> {
        let csv = with_suffix(prefix, "csv");
        let json = with_suffix(prefix, "json");
        if let Some(dir) = csv.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir)?;
        }
        std::fs::write(&csv, self.csv())?;
        std::fs::write(&json, self.sidecar_json())?;
        Ok((csv, json))
    }
}

fn with_suffix(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_formatting() {
        assert_eq!(format_value(0.0), "0.00000000000e0");
        assert_eq!(format_value(-0.0), "0.00000000000e0");
        assert_eq!(format_value(std::f64::consts::FRAC_PI_4), "7.85398163397e-1");
        assert_eq!(format_value(-1234.5), "-1.23450000000e3");
        assert_eq!(format_value(f64::INFINITY), "inf");
    }

    #[test]
    fn separable_angles() {
        assert!(is_separable_angle(0.0));
        assert!(is_separable_angle(std::f64::consts::PI));
        assert!(!is_separable_angle(std::f64::consts::FRAC_PI_4));
    }

    #[test]
    fn suffixes_append() {
        assert_eq!(with_suffix(Path::new("out/fig1"), "csv"), PathBuf::from("out/fig1.csv"));
        assert_eq!(with_suffix(Path::new("a.b"), "json"), PathBuf::from("a.b.json"));
    }
}
