// Intrinsic decoherence: the closed-form channel against its Kraus sum, and
// the Gaussian damping of coherences in the energy basis.

use std::error::Error;

use ionpair::dynamics::{milburn_closed_form, milburn_kraus_adaptive, MilburnChannel};
use ionpair::experiments::{prepare_initial, FieldPreparation};
use ionpair::model::{build_full_hamiltonian, SimParams};
use ionpair::quantum::max_abs_diff;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cutoff = 8;
    let params = SimParams { nbar: 2.0, ..SimParams::with_cutoff(cutoff) };
    let h = build_full_hamiltonian(&params);
    let field = FieldPreparation::coherent_with_cutoff(params.nbar, cutoff)?;
    let rho0 = prepare_initial(params.theta, params.phi, &field)?.projector();

    let gamma = 1.0;
    for t in [0.1, 1.0, 5.0] {
        let exact = milburn_closed_form(&rho0, &h, gamma, t)?;
        let kraus = milburn_kraus_adaptive(&rho0, &h, gamma, t)?;
        println!(
            "γt = {:>4}: {} Kraus terms, deficit {:.1e}, max gap {:.1e}",
            gamma * t,
            kraus.terms,
            kraus.deficit,
            max_abs_diff(&kraus.matrix, exact.matrix())
        );
    }

    // coherence between two energy levels decays as exp(−γt ΔE²/2)
    let channel = MilburnChannel::new(&h, 0.05)?;
    let e = channel.spectrum().eigenvalues();
    println!("spread of the spectrum: {:.4}", e[e.len() - 1] - e[0]);
    let rho = channel.apply(&rho0, 10.0)?;
    println!("trace after t = 10: {:.12}", rho.trace());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
