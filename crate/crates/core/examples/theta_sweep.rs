// Concurrence over a grid of initial mixing angles, run in parallel with a
// deterministic output order.

use std::error::Error;
use std::f64::consts::PI;

use ionpair::entanglement::Bipartition;
use ionpair::experiments::{coherent_amplitudes, run_theta_sweep, Measure};
use ionpair::model::SimParams;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let field = coherent_amplitudes(5.0, 1e-10)?;
    let template = SimParams { nbar: 5.0, epsilon: 0.2, ..SimParams::with_cutoff(field.cutoff()) };
    let thetas: Vec<f64> = (0..=8).map(|k| PI * k as f64 / 8.0).collect();
    let times: Vec<f64> = (0..=20).map(|i| 0.5 * i as f64).collect();

    let sweep = run_theta_sweep(&template, &thetas, Measure::IConcurrence, &Bipartition::ion1_vs_rest(), &times)?;
    println!("{:>8} {:>8} {:>8} {:>8}", "θ/π", "I(0)", "I(5)", "I(10)");
    for s in &sweep {
        println!("{:>8.3} {:>8.4} {:>8.4} {:>8.4}", s.params.theta / PI, s.values[0], s.values[10], s.values[20]);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
