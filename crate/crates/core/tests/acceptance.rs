//! One line per acceptance criterion. Criterion 7 reports but never fails.

use std::f64::consts::{FRAC_PI_4, PI};
use std::time::Instant;

use ionpair::cli::{block_vs_dense, figure_config, run_config, Figure};
use ionpair::dynamics::{milburn_closed_form, milburn_kraus_adaptive, BlockPropagator, Modulation};
use ionpair::entanglement::{i_concurrence_pure, relative_entropy_measure, Bipartition};
use ionpair::experiments::{
    coherent_amplitudes, default_claim_reports, prepare_initial, run_series, FieldPreparation, Measure,
    DEFAULT_EVENT_THRESHOLD,
};
use ionpair::model::{build_full_hamiltonian, SimParams, ION1};
use ionpair::oracle::adaptive_simpson;
use ionpair::quantum::{hermitian_spectrum, max_abs_diff, von_neumann_entropy};
use num_complex::Complex64;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn linspace(start: f64, stop: f64, points: usize) -> Vec<f64> {
    (0..points).map(|i| start + (stop - start) * i as f64 / (points - 1) as f64).collect()
}

fn fig1_params() -> SimParams {
    let cutoff = coherent_amplitudes(5.0, 1e-10).unwrap().cutoff();
    SimParams { nbar: 5.0, theta: FRAC_PI_4, ..SimParams::with_cutoff(cutoff) }
}

fn block_dense_equivalence() -> Outcome {
    let start = Instant::now();
    let dev = block_vs_dense(12, 2.0, &[0.0, PI / 6.0, FRAC_PI_4], &linspace(0.0, 5.0, 51)).unwrap();
    let secs = start.elapsed().as_secs_f64();
    outcome(
        dev <= 1e-8 && secs < 60.0,
        format!("max amplitude deviation {dev:.2e} (tol 1e-8) in {secs:.2} s (limit 60 s)"),
    )
}

fn milburn_consistency() -> Outcome {
    let params = SimParams { nbar: 2.0, ..SimParams::with_cutoff(8) };
    let h = build_full_hamiltonian(&params);
    let field = FieldPreparation::coherent_with_cutoff(2.0, 8).unwrap();
    let rho0 = prepare_initial(params.theta, params.phi, &field).unwrap().projector();
    let gamma = 0.5;
    let (mut gap, mut deficit, mut terms) = (0.0f64, 0.0f64, Vec::new());
    for gt in [0.1, 1.0, 5.0] {
        let t = gt / gamma;
        let exact = milburn_closed_form(&rho0, &h, gamma, t).unwrap();
        let kraus = milburn_kraus_adaptive(&rho0, &h, gamma, t).unwrap();
        gap = gap.max(max_abs_diff(&kraus.matrix, exact.matrix()));
        deficit = deficit.max(kraus.deficit);
        terms.push(kraus.terms);
    }
    outcome(
        gap <= 1e-10 && deficit <= 1e-10,
        format!("max gap {gap:.2e}, completeness deficit {deficit:.2e} (tol 1e-10), Kraus terms {terms:?}"),
    )
}

fn initial_concurrence() -> Outcome {
    let field = FieldPreparation::coherent_with_cutoff(5.0, 20).unwrap();
    let cut = Bipartition::ion1_vs_rest();
    let thetas = linspace(0.0, PI, 25);
    let values: Vec<f64> = thetas
        .iter()
        .map(|&th| i_concurrence_pure(&prepare_initial(th, 0.0, &field).unwrap(), &cut).unwrap())
        .collect();
    let dev = thetas.iter().zip(&values).map(|(th, v)| (v - (2.0 * th).sin().abs()).abs()).fold(0.0, f64::max);
    let zeros = [0, 12, 24].iter().all(|&k| values[k] <= 1e-10);
    let best = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let argmax: Vec<f64> =
        thetas.iter().zip(&values).filter(|(_, &v)| v == best).map(|(&th, _)| th / FRAC_PI_4).collect();
    let odd = argmax.iter().all(|m| (m - m.round()).abs() < 1e-9 && m.round() as i64 % 2 == 1);
    outcome(
        dev <= 1e-10 && zeros && odd,
        format!("max |I − |sin 2θ|| = {dev:.2e} (tol 1e-10), zeros at nπ/2: {zeros}, argmax θ/(π/4) = {argmax:?}"),
    )
}

fn modulation_integral() -> Outcome {
    let (mut quad_gap, mut limit_gap) = (0.0f64, 0.0f64);
    for tau in [0.5, 1.0, 5.0] {
        let m = Modulation::Sech { tau };
        for t in linspace(0.0, 50.0, 101) {
            let quad = adaptive_simpson(|s| m.value(s), 0.0, t, 1e-15);
            quad_gap = quad_gap.max((m.integral(t) - quad).abs());
        }
        limit_gap = limit_gap.max((m.integral(100.0 * tau) - PI * tau).abs());
    }
    outcome(
        quad_gap <= 1e-12 && limit_gap <= 1e-10,
        format!("vs quadrature {quad_gap:.2e} (tol 1e-12), Θ(100τ) − πτ = {limit_gap:.2e} (tol 1e-10)"),
    )
}

fn channel_sanity() -> Outcome {
    let gamma = 0.05;
    let mut worst_trace = 0.0f64;
    let mut worst_eig = f64::INFINITY;
    let mut worst_factor = 0.0f64;
    for epsilon in [0.01, 1.0] {
        let params = SimParams { nbar: 2.0, epsilon, ..SimParams::with_cutoff(8) };
        let h = build_full_hamiltonian(&params);
        let spectrum = hermitian_spectrum(&h).unwrap();
        let (e, v) = (spectrum.eigenvalues(), spectrum.eigenvectors());
        let field = FieldPreparation::coherent_with_cutoff(2.0, 8).unwrap();
        let rho0 = prepare_initial(0.6, 0.4, &field).unwrap().projector();
        let before = v.adjoint() * rho0.matrix() * v;
        for t in [1.0, 10.0, 30.0] {
            let rho = milburn_closed_form(&rho0, &h, gamma, t).unwrap();
            worst_trace = worst_trace.max((rho.trace() - 1.0).abs());
            worst_eig = worst_eig.min(rho.min_eigenvalue().unwrap());
            let after = v.adjoint() * rho.matrix() * v;
            for m in 0..e.len() {
                for n in 0..e.len() {
                    let d = e[m] - e[n];
                    let factor = Complex64::from_polar((-gamma * t * d * d / 2.0).exp(), -d * t);
                    worst_factor = worst_factor.max((after[(m, n)] - before[(m, n)] * factor).norm());
                }
            }
        }
    }
    outcome(
        worst_trace <= 1e-10 && worst_eig >= -1e-9 && worst_factor <= 1e-10,
        format!(
            "|tr − 1| {worst_trace:.2e}, min eigenvalue {worst_eig:.2e}, coherence factor error {worst_factor:.2e}"
        ),
    )
}

fn ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut r = vec![0.0; values.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        let avg = (i + j) as f64 / 2.0;
        for &k in &order[i..=j] {
            r[k] = avg;
        }
        i = j + 1;
    }
    r
}

fn spearman(a: &[f64], b: &[f64]) -> f64 {
    let (ra, rb) = (ranks(a), ranks(b));
    let mean = (a.len() - 1) as f64 / 2.0;
    let (mut num, mut da, mut db) = (0.0, 0.0, 0.0);
    for (x, y) in ra.iter().zip(&rb) {
        num += (x - mean) * (y - mean);
        da += (x - mean).powi(2);
        db += (y - mean).powi(2);
    }
    num / (da * db).sqrt()
}

fn pure_state_identity() -> Outcome {
    let params = fig1_params();
    let field = FieldPreparation::coherent_with_cutoff(params.nbar, params.fock_cutoff).unwrap();
    let psi0 = prepare_initial(params.theta, params.phi, &field).unwrap();
    let propagator = BlockPropagator::new(&params).unwrap();
    let cut = Bipartition::ion1_vs_rest();
    let mut gap = 0.0f64;
    for t in linspace(0.0, 30.0, 10) {
        let psi = propagator.state_at(&psi0, t).unwrap();
        let r = relative_entropy_measure(&psi.projector(), &cut).unwrap();
        let s = von_neumann_entropy(&psi.reduced(&[ION1]).unwrap()).unwrap();
        gap = gap.max((r - 2.0 * s).abs());
    }
    let times = linspace(0.0, 30.0, 601);
    let conc = run_series(&params, Measure::IConcurrence, &cut, &times).unwrap();
    let rel = run_series(&params, Measure::RelativeEntropy, &cut, &times).unwrap();
    let rho = spearman(&conc.values, &rel.values);
    outcome(
        gap <= 1e-9 && rho >= 0.9,
        format!("max |R − 2S| = {gap:.2e} (tol 1e-9), rank correlation {rho:.4} (min 0.9)"),
    )
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let config = figure_config(Figure::Fig1, None).unwrap();
    let one = dir.path().join("w1");
    let eight = dir.path().join("w8");
    let (_, csv1, _) = run_config(&config, Some("fig1"), Some(&one), Some(1)).map_err(|f| f.message).unwrap();
    let (_, csv8, _) = run_config(&config, Some("fig1"), Some(&eight), Some(8)).map_err(|f| f.message).unwrap();
    let (a, b) = (std::fs::read(csv1).unwrap(), std::fs::read(csv8).unwrap());
    outcome(a == b, format!("fig1 CSV with 1 and 8 workers: {} vs {} bytes, identical: {}", a.len(), b.len(), a == b))
}

type Criterion = (&'static str, fn() -> Outcome);

fn report(name: &str, o: Outcome, failed: &mut Vec<String>) {
    println!("{} [{name}] {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    if !o.pass {
        failed.push(name.to_owned());
    }
}

#[test]
fn acceptance_criteria() {
    println!();
    let criteria: [Criterion; 6] = [
        ("1 block/dense equivalence", block_dense_equivalence),
        ("2 Kraus sum vs closed-form channel", milburn_consistency),
        ("3 initial concurrence |sin 2θ|", initial_concurrence),
        ("4 sech modulation integral", modulation_integral),
        ("5 channel trace, positivity, coherence decay", channel_sanity),
        ("6 pure-state relative entropy identity", pure_state_identity),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        report(name, check(), &mut failed);
    }

    // qualitative reports are recorded with their numbers but never fail the run
    let reports = default_claim_reports(&linspace(0.0, 30.0, 601), DEFAULT_EVENT_THRESHOLD).unwrap();
    for r in reports {
        let numbers: Vec<String> = r.numbers.iter().map(|(k, v)| format!("{k}={v:.6e}")).collect();
        println!("{} [7 {}] {} [{}]", if r.holds { "PASS" } else { "WARN" }, r.name, r.claim, numbers.join(", "));
    }

    report("8 worker-count determinism", determinism(), &mut failed);
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
