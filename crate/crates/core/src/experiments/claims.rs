use std::f64::consts::FRAC_PI_4;

use serde::Serialize;

use super::field::coherent_amplitudes;
use super::series::{run_series, Measure};
use crate::dynamics::Modulation;
use crate::entanglement::Bipartition;
use crate::model::SimParams;
use crate::Result;

/// Outcome of a qualitative check on the simulated dynamics.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimReport {
    pub name: &'static str,
    pub claim: &'static str,
    pub holds: bool,
    pub numbers: Vec<(String, f64)>,
}

/// Time-averaged two-ion relative entropy should fall as `gamma` grows.
pub fn gamma_decay_report(base: &SimParams, gammas: &[f64], times: &[f64]) -> Result<ClaimReport> {
    let cut = Bipartition::ion1_vs_ion2();
    let mut numbers = Vec::new();
    for &gamma in gammas {
        let p = SimParams { gamma, modulation: Modulation::Constant, ..base.clone() };
        let s = run_series(&p, Measure::RelativeEntropy, &cut, times)?;
        numbers.push((format!("mean relative entropy at gamma={gamma}"), s.mean()));
    }
    let holds = numbers.windows(2).all(|w| w[1].1 <= w[0].1 + 1e-6);
    Ok(ClaimReport {
        name: "decoherence_suppresses_correlations",
        claim: "time-averaged two-ion relative entropy does not grow with gamma",
        holds,
        numbers,
    })
}

/// A sech-shaped coupling should not bring the first birth forward relative
/// to a constant one from the same near-separable start. One grid step of
/// slack absorbs the sampling of the crossing.
pub fn sech_delay_report(base: &SimParams, tau: f64, threshold: f64, times: &[f64]) -> Result<ClaimReport> {
    let cut = Bipartition::ion1_vs_rest();
    let births = |modulation: Modulation| -> Result<Option<f64>> {
        let p = SimParams { modulation, gamma: 0.0, ..base.clone() };
        Ok(run_series(&p, Measure::IConcurrence, &cut, times)?.events(threshold)?.first_birth())
    };
    let constant = births(Modulation::Constant)?;
    let sech = births(Modulation::Sech { tau })?;
    let step = times.get(1).map_or(0.0, |t| t - times[0]);
    let holds = match (constant, sech) {
        (Some(c), Some(s)) => s >= c - step,
        (Some(_), None) => true,
        _ => false,
    };
    let missing = f64::NAN;
    Ok(ClaimReport {
        name: "sech_delays_birth",
        claim: "sech modulation does not advance the first sudden birth",
        holds,
        numbers: vec![
            ("theta".into(), base.theta),
            ("tau".into(), tau),
            ("first birth, constant".into(), constant.unwrap_or(missing)),
            ("first birth, sech".into(), sech.unwrap_or(missing)),
        ],
    })
}

/// A larger mean phonon number should give fewer threshold crossings.
pub fn nbar_smoothing_report(
    base: &SimParams,
    nbars: (f64, f64),
    threshold: f64,
    times: &[f64],
    deficit: f64,
) -> Result<ClaimReport> {
    let cut = Bipartition::ion1_vs_rest();
    let crossings = |nbar: f64| -> Result<usize> {
        let cutoff = coherent_amplitudes(nbar, deficit)?.cutoff();
        let p = SimParams { nbar, fock_cutoff: cutoff, gamma: 0.0, ..base.clone() };
        Ok(run_series(&p, Measure::IConcurrence, &cut, times)?.events(threshold)?.crossings())
    };
    let low = crossings(nbars.0)?;
    let high = crossings(nbars.1)?;
    Ok(ClaimReport {
        name: "large_nbar_smooths_dynamics",
        claim: "larger nbar gives no more threshold crossings",
        holds: high <= low,
        numbers: vec![
            (format!("crossings at nbar={}", nbars.0), low as f64),
            (format!("crossings at nbar={}", nbars.1), high as f64),
        ],
    })
}

/// Sech width used when a caller does not choose one, in units of `1/|λ₁|`.
pub const DEFAULT_SECH_TAU: f64 = 5.0;

/// All three checks at the default physical parameters on `times`.
pub fn default_claim_reports(times: &[f64], threshold: f64) -> Result<Vec<ClaimReport>> {
    let base = SimParams { theta: FRAC_PI_4, ..SimParams::default() };
    let near_separable = SimParams { theta: 0.0, ..base.clone() };
    Ok(vec![
        gamma_decay_report(&base, &[0.0, 0.01, 0.05, 0.1], times)?,
        sech_delay_report(&near_separable, DEFAULT_SECH_TAU, threshold, times)?,
        nbar_smoothing_report(&base, (5.0, 15.0), threshold, times, 1e-10)?,
    ])
}
