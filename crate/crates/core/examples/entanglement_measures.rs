// I-concurrence, negativity and relative entropy on the same evolved state,
// globally and for the two-ion reduced state.

use std::error::Error;

use ionpair::dynamics::BlockPropagator;
use ionpair::entanglement::{
    i_concurrence_pure, negativity, negativity_pure, relative_entropy_measure, relative_entropy_pure, Bipartition,
};
use ionpair::experiments::{prepare_initial, FieldPreparation};
use ionpair::model::{SimParams, ION1, ION2};
use ionpair::quantum::von_neumann_entropy;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cutoff = 14;
    let params = SimParams { nbar: 3.0, epsilon: 1.0, theta: 0.5, ..SimParams::with_cutoff(cutoff) };
    let field = FieldPreparation::coherent_with_cutoff(params.nbar, cutoff)?;
    let psi0 = prepare_initial(params.theta, params.phi, &field)?;
    let propagator = BlockPropagator::new(&params)?;

    let global = Bipartition::ion1_vs_rest();
    let ions = Bipartition::ion1_vs_ion2();
    println!("{:>4} {:>9} {:>9} {:>9} {:>9} {:>9}", "t", "I", "N", "R", "N_ions", "R_ions");
    for t in [0.0, 1.0, 2.0, 4.0, 8.0] {
        let psi = propagator.state_at(&psi0, t)?;
        let two_ions = psi.reduced(&[ION1, ION2])?;
        println!(
            "{t:>4.1} {:>9.5} {:>9.5} {:>9.5} {:>9.5} {:>9.5}",
            i_concurrence_pure(&psi, &global)?,
            negativity_pure(&psi, &global)?,
            relative_entropy_pure(&psi, &global)?,
            negativity(&two_ions, &ions)?,
            relative_entropy_measure(&two_ions, &ions)?,
        );
    }

    // for a pure state the relative entropy to the product of marginals is 2S(ρ_A)
    let psi = propagator.state_at(&psi0, 3.0)?;
    let s = von_neumann_entropy(&psi.reduced(&[ION1])?)?;
    println!("2S(ρ_ion1) = {:.9}, R = {:.9}", 2.0 * s, relative_entropy_measure(&psi.projector(), &global)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
