// Threshold crossings of the concurrence for a separable start, with a
// constant and a sech-shaped coupling.

use std::error::Error;

use ionpair::dynamics::Modulation;
use ionpair::entanglement::Bipartition;
use ionpair::experiments::{coherent_amplitudes, run_series, Measure, DEFAULT_EVENT_THRESHOLD};
use ionpair::model::SimParams;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let field = coherent_amplitudes(2.0, 1e-10)?;
    let base = SimParams { nbar: 2.0, theta: 0.0, epsilon: 0.05, ..SimParams::with_cutoff(field.cutoff()) };
    let times: Vec<f64> = (0..=1000).map(|i| 0.01 * i as f64).collect();
    let cut = Bipartition::ion1_vs_rest();

    for modulation in [Modulation::Constant, Modulation::Sech { tau: 0.5 }] {
        let params = SimParams { modulation, ..base.clone() };
        let series = run_series(&params, Measure::IConcurrence, &cut, &times)?;
        let events = series.events(DEFAULT_EVENT_THRESHOLD)?;
        println!("{modulation:?}");
        println!("  births: {:?}", events.births);
        println!("  deaths: {:?}", events.deaths);
        println!("  peak I = {:.4}", series.values.iter().copied().fold(0.0, f64::max));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
