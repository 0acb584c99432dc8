use std::f64::consts::PI;

use crate::dynamics::{evolve_pure, evolve_pure_dense, milburn_closed_form, milburn_kraus_adaptive, Modulation};
use crate::entanglement::{i_concurrence_pure, Bipartition};
use crate::experiments::{default_claim_reports, prepare_initial, FieldPreparation, DEFAULT_EVENT_THRESHOLD};
use crate::model::{build_full_hamiltonian, mode_strength, SimParams};
use crate::oracle::{adaptive_simpson, FROZEN_MODE_STRENGTH};
use crate::quantum::max_abs_diff;
use crate::Result;

/// Outcome of one oracle comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub deviation: f64,
    pub tolerance: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.deviation <= self.tolerance
    }
}

fn mode_strength_frozen() -> Result<f64> {
    let mut worst = 0.0f64;
    for (n, k, eta, epsilon, value) in FROZEN_MODE_STRENGTH {
        let p = SimParams { eta, epsilon, ..SimParams::with_cutoff(20) };
        worst = worst.max((mode_strength(n, k, &p)? - value).abs());
    }
    Ok(worst)
}

/// Largest amplitude gap between block and dense propagation.
pub fn block_vs_dense(cutoff: usize, nbar: f64, thetas: &[f64], times: &[f64]) -> Result<f64> {
    let mut worst = 0.0f64;
    let field = FieldPreparation::coherent_with_cutoff(nbar, cutoff)?;
    for &theta in thetas {
        let params = SimParams { nbar, theta, ..SimParams::with_cutoff(cutoff) };
        let psi0 = prepare_initial(theta, params.phi, &field)?;
        let blocks = evolve_pure(&psi0, &params, times)?;
        let dense = evolve_pure_dense(&psi0, &params, times)?;
        for (a, b) in blocks.pure_states().unwrap().iter().zip(dense.pure_states().unwrap()) {
            worst = worst.max((a.amplitudes() - b.amplitudes()).camax());
        }
    }
    Ok(worst)
}

/// Largest of the Kraus/closed-form gap and the Kraus completeness deficit.
pub fn kraus_vs_closed_form(cutoff: usize, gamma: f64, times: &[f64]) -> Result<f64> {
    let params = SimParams { nbar: 2.0, ..SimParams::with_cutoff(cutoff) };
    let h = build_full_hamiltonian(&params);
    let field = FieldPreparation::coherent_with_cutoff(params.nbar, cutoff)?;
    let rho0 = prepare_initial(params.theta, params.phi, &field)?.projector();
    let mut worst = 0.0f64;
    for &t in times {
        let exact = milburn_closed_form(&rho0, &h, gamma, t)?;
        let kraus = milburn_kraus_adaptive(&rho0, &h, gamma, t)?;
        worst = worst.max(kraus.deficit).max(max_abs_diff(&kraus.matrix, exact.matrix()));
    }
    Ok(worst)
}

fn initial_concurrence(points: usize) -> Result<f64> {
    let field = FieldPreparation::coherent_with_cutoff(5.0, 20)?;
    let cut = Bipartition::ion1_vs_rest();
    let mut worst = 0.0f64;
    for k in 0..points {
        let theta = PI * k as f64 / (points - 1) as f64;
        let value = i_concurrence_pure(&prepare_initial(theta, 0.0, &field)?, &cut)?;
        worst = worst.max((value - (2.0 * theta).sin().abs()).abs());
    }
    Ok(worst)
}

fn sech_area() -> f64 {
    let mut worst = 0.0f64;
    for tau in [0.5, 1.0, 5.0] {
        let m = Modulation::Sech { tau };
        worst = worst.max((m.integral(100.0 * tau) - PI * tau).abs());
        for t in [1.0, 7.5, 20.0, 50.0] {
            let quad = adaptive_simpson(|s| m.value(s), 0.0, t, 1e-14);
            worst = worst.max((m.integral(t) - quad).abs());
        }
    }
    worst
}

type Oracle = Box<dyn Fn() -> Result<f64>>;

/// Runs every oracle comparison. Errors inside a check count as failures.
pub fn run_checks() -> Vec<Check> {
    let times: Vec<f64> = (0..51).map(|i| 0.1 * i as f64).collect();
    let checks: [(&'static str, f64, Oracle); 5] = [
        ("mode_strength_frozen", 1e-14, Box::new(mode_strength_frozen)),
        ("block_vs_dense", 1e-8, Box::new(move || block_vs_dense(12, 2.0, &[0.0, PI / 6.0, PI / 4.0], &times))),
        ("kraus_vs_closed_form", 1e-10, Box::new(|| kraus_vs_closed_form(8, 1.0, &[0.1, 1.0, 5.0]))),
        ("initial_concurrence", 1e-10, Box::new(|| initial_concurrence(13))),
        ("sech_area", 1e-10, Box::new(|| Ok(sech_area()))),
    ];
    checks
        .into_iter()
        .map(|(name, tolerance, f)| Check { name, deviation: f().unwrap_or(f64::INFINITY), tolerance })
        .collect()
}

/// Prints one line per check plus WARN lines for unconfirmed qualitative
/// claims; returns whether every check passed.
pub fn selftest(out: &mut impl std::io::Write) -> std::io::Result<bool> {
    let mut ok = true;
    for check in run_checks() {
        let status = if check.passed() { "PASS" } else { "FAIL" };
        ok &= check.passed();
        writeln!(out, "{status} {:<22} max_dev={:.3e} tol={:.0e}", check.name, check.deviation, check.tolerance)?;
    }
    let times: Vec<f64> = (0..301).map(|i| 0.1 * i as f64).collect();
    match default_claim_reports(&times, DEFAULT_EVENT_THRESHOLD) {
        Ok(reports) => {
            for r in reports {
                let numbers: Vec<String> = r.numbers.iter().map(|(k, v)| format!("{k}={v:.6e}")).collect();
                let status = if r.holds { "INFO" } else { "WARN" };
                writeln!(out, "{status} {}: {} [{}]", r.name, r.claim, numbers.join(", "))?;
            }
        }
        Err(e) => writeln!(out, "WARN qualitative reports could not run: {e}")?,
    }
    Ok(ok)
}
