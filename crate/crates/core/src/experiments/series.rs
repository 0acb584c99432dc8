use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::events::{detect_sudden_events, SuddenEvents};
use super::field::{prepare_initial, FieldPreparation};
use crate::dynamics::{validate_time_grid, BlockPropagator, MilburnBlockEvolution};
use crate::entanglement::{
    i_concurrence_pure, negativity, negativity_pure, relative_entropy_measure, relative_entropy_pure, Bipartition,
};
use crate::model::{full_layout, SimParams};
use crate::quantum::{DensityMatrix, PureState};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Measure {
    IConcurrence,
    Negativity,
    RelativeEntropy,
}

impl Measure {
    pub const ALL: [Measure; 3] = [Measure::IConcurrence, Measure::Negativity, Measure::RelativeEntropy];

    pub fn name(self) -> &'static str {
        match self {
            Measure::IConcurrence => "i_concurrence",
            Measure::Negativity => "negativity",
            Measure::RelativeEntropy => "relative_entropy",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Measure::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown measure `{s}`")))
    }
}

/// One measure evaluated along a time grid for fixed parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct MeasureSeries {
    pub params: SimParams,
    pub measure: Measure,
    pub cut: Bipartition,
    pub times: Vec<f64>,
    pub values: Vec<f64>,
    /// Coherent-state weight lost to the Fock cutoff.
    pub norm_deficit: f64,
}

impl MeasureSeries {
    pub fn events(&self, threshold: f64) -> Result<SuddenEvents> {
        detect_sudden_events(self, threshold)
    }

    /// Arithmetic mean over the grid points.
    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }
}

/// Factors kept before measuring, and whether that is the whole system.
fn reduction(cut: &Bipartition, params: &SimParams) -> Result<(Vec<String>, bool)> {
    let layout = full_layout(params.fock_cutoff);
    let mut keep = Vec::new();
    for label in cut.labels() {
        if layout.position(label).is_none() {
            return Err(Error::InvalidBipartition(format!("unknown label `{label}`")));
        }
        keep.push(label.to_owned());
    }
    let positions = layout.positions(&keep).map_err(|e| Error::InvalidBipartition(e.to_string()))?;
    if cut.side_a.is_empty() || cut.side_b.is_empty() {
        return Err(Error::InvalidBipartition("both sides must be nonempty".into()));
    }
    let keep = positions.iter().map(|&p| layout.labels().nth(p).unwrap().to_owned()).collect::<Vec<_>>();
    let global = keep.len() == layout.len();
    Ok((keep, global))
}

fn measure_pure(psi: &PureState, measure: Measure, cut: &Bipartition, keep: &[String], global: bool) -> Result<f64> {
    if global {
        return match measure {
            Measure::IConcurrence => i_concurrence_pure(psi, cut),
            Measure::Negativity => negativity_pure(psi, cut),
            Measure::RelativeEntropy => relative_entropy_pure(psi, cut),
        };
    }
    measure_mixed(&psi.reduced(keep)?, measure, cut)
}

fn measure_mixed(rho: &DensityMatrix, measure: Measure, cut: &Bipartition) -> Result<f64> {
    match measure {
        Measure::IConcurrence => Err(Error::IncompatibleMeasure {
            measure: measure.name().into(),
            reason: "defined for pure states only".into(),
        }),
        Measure::Negativity => negativity(rho, cut),
        Measure::RelativeEntropy => relative_entropy_measure(rho, cut),
    }
}

/// Prepares the initial state from `params` and evaluates `measure` across
/// `cut` at each of `times`.
///
/// Factors not named by the cut are traced out first. Without decoherence
/// the global state stays pure and is propagated block by block; with
/// `gamma > 0` the decohered state is built from the same block spectra.
pub fn run_series(params: &SimParams, measure: Measure, cut: &Bipartition, times: &[f64]) -> Result<MeasureSeries> {
    params.validate()?;
    validate_time_grid(times)?;
    let (keep, global) = reduction(cut, params)?;
    let mixed = params.gamma > 0.0 || !global;
    if measure == Measure::IConcurrence && mixed {
        let reason = if global { "decoherence leaves a mixed state" } else { "cut leaves a mixed reduced state" };
        return Err(Error::IncompatibleMeasure { measure: measure.name().into(), reason: reason.into() });
    }
    let field = FieldPreparation::coherent_with_cutoff(params.nbar, params.fock_cutoff)?;
    let psi0 = prepare_initial(params.theta, params.phi, &field)?;

    let values = if params.gamma > 0.0 {
        let evolution = MilburnBlockEvolution::new(&psi0, params)?;
        times
            .iter()
            .map(|&t| {
                let rho = evolution.state_at(t)?;
                let rho = if global { rho } else { crate::quantum::partial_trace(&rho, &keep)? };
                measure_mixed(&rho, measure, cut)
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        let propagator = BlockPropagator::new(params)?;
        times
            .iter()
            .map(|&t| measure_pure(&propagator.state_at(&psi0, t)?, measure, cut, &keep, global))
            .collect::<Result<Vec<_>>>()?
    };

    Ok(MeasureSeries {
        params: params.clone(),
        measure,
        cut: cut.clone(),
        times: times.to_vec(),
        values,
        norm_deficit: field.norm_deficit(),
    })
}

/// Series for every `(θ, γ)` pair, ordered by θ then γ. Cells run in
/// parallel on the current rayon pool; the output order does not depend on it.
pub fn run_sweep(
    template: &SimParams,
    thetas: &[f64],
    gammas: &[f64],
    measure: Measure,
    cut: &Bipartition,
    times: &[f64],
) -> Result<Vec<MeasureSeries>> {
    if thetas.is_empty() || gammas.is_empty() {
        return Err(Error::InvalidGrid("theta and gamma grids must be nonempty".into()));
    }
    let cells: Vec<(f64, f64)> = thetas.iter().flat_map(|&th| gammas.iter().map(move |&g| (th, g))).collect();
    cells
        .into_par_iter()
        .map(|(theta, gamma)| {
            let params = SimParams { theta, gamma, ..template.clone() };
            run_series(&params, measure, cut, times)
        })
        .collect()
}

/// [`run_sweep`] at the template's own `gamma`.
pub fn run_theta_sweep(
    template: &SimParams,
    thetas: &[f64],
    measure: Measure,
    cut: &Bipartition,
    times: &[f64],
) -> Result<Vec<MeasureSeries>> {
    run_sweep(template, thetas, &[template.gamma], measure, cut, times)
}
