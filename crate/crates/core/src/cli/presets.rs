use std::f64::consts::{FRAC_PI_4, PI};
use std::fmt;
use std::str::FromStr;

use super::config::{Axis, GridConfig, MeasureConfig, ModelConfig, RunConfig, RunSettings};
use crate::dynamics::Modulation;
use crate::experiments::Measure;
use crate::model::{FIELD, ION1, ION2};

/// Canned sweeps mirroring the published figures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Figure {
    /// Concurrence over (θ, t) at n̄ = 5.
    Fig1,
    /// As `Fig1` with n̄ = 15.
    Fig2,
    /// Two-ion relative entropy over (γ, t) at θ = π/4.
    Fig3,
    /// As `Fig1` with a sech-shaped coupling.
    Fig4,
}

impl Figure {
    pub const ALL: [Figure; 4] = [Figure::Fig1, Figure::Fig2, Figure::Fig3, Figure::Fig4];

    pub fn name(self) -> &'static str {
        match self {
            Figure::Fig1 => "fig1",
            Figure::Fig2 => "fig2",
            Figure::Fig3 => "fig3",
            Figure::Fig4 => "fig4",
        }
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Figure {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Figure::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| format!("unknown figure `{s}`"))
    }
}

fn beryllium_model(nbar: f64) -> ModelConfig {
    ModelConfig {
        lambda1: [1.0, 0.0],
        lambda2: [0.01, 0.0],
        eta: 0.202,
        epsilon: 0.01,
        nbar,
        phi: 0.0,
        standard_matrix_element: false,
        fock_cutoff: None,
        nu: 0.0,
        omega1: 0.0,
        omega2: 0.0,
    }
}

fn theta_time_grid() -> GridConfig {
    GridConfig {
        theta: Axis::linspace(0.0, PI, 121),
        time: Axis::linspace(0.0, 30.0, 601),
        gamma: Axis::List(vec![0.0]),
    }
}

fn concurrence_cut() -> MeasureConfig {
    MeasureConfig { name: Measure::IConcurrence, side_a: vec![ION1.into()], side_b: vec![ION2.into(), FIELD.into()] }
}

/// Preset config. `Fig4` needs the sech width `tau`; the others ignore it.
pub fn figure_config(figure: Figure, tau: Option<f64>) -> Result<RunConfig, String> {
    let run = RunSettings { output: figure.name().into(), ..RunSettings::default() };
    let config = match figure {
        Figure::Fig1 | Figure::Fig2 => RunConfig {
            model: beryllium_model(if figure == Figure::Fig1 { 5.0 } else { 15.0 }),
            modulation: Modulation::Constant,
            measure: concurrence_cut(),
            grid: theta_time_grid(),
            run,
        },
        Figure::Fig3 => RunConfig {
            model: beryllium_model(5.0),
            modulation: Modulation::Constant,
            measure: MeasureConfig {
                name: Measure::RelativeEntropy,
                side_a: vec![ION1.into()],
                side_b: vec![ION2.into()],
            },
            grid: GridConfig {
                theta: Axis::List(vec![FRAC_PI_4]),
                time: Axis::linspace(0.0, 30.0, 601),
                gamma: Axis::linspace(0.0, 0.1, 11),
            },
            run,
        },
        Figure::Fig4 => {
            let tau = tau.ok_or("fig4 needs --tau: the sech width has no published value")?;
            RunConfig {
                model: beryllium_model(5.0),
                modulation: Modulation::Sech { tau },
                measure: concurrence_cut(),
                grid: theta_time_grid(),
                run,
            }
        }
    };
    Ok(config)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_resolve() {
        for fig in Figure::ALL {
            let cfg = figure_config(fig, Some(5.0)).unwrap();
            let run = cfg.resolve().unwrap();
            assert_eq!(fig.name().parse::<Figure>().unwrap(), fig);
            assert_eq!(run.times.len(), 601);
        }
    }

    #[test]
    fn fig2_differs_from_fig1_only_in_nbar() {
        let mut a = figure_config(Figure::Fig1, None).unwrap();
        let b = figure_config(Figure::Fig2, None).unwrap();
        assert_eq!(b.model.nbar, 15.0);
        a.model.nbar = 15.0;
        a.run.output = "fig2".into();
        assert_eq!(a, b);
    }

    #[test]
    fn fig4_requires_tau() {
        assert!(figure_config(Figure::Fig4, None).is_err());
        assert_eq!(figure_config(Figure::Fig4, Some(2.0)).unwrap().modulation, Modulation::Sech { tau: 2.0 });
    }
}
