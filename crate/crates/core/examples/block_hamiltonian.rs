// The interaction Hamiltonian splits into 9×9 blocks labeled by the
// conserved excitation number. This prints one block and checks that the
// blocks reassemble the dense operator.

use std::error::Error;

use ionpair::model::{build_block, build_full_hamiltonian, BlockSystem, SimParams};
use ionpair::quantum::CMatrix;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let params = SimParams { epsilon: 1.0, ..SimParams::with_cutoff(10) };

    let block = build_block(3, &params)?;
    println!("block n = 3 basis:");
    for (j, state) in block.basis().states().iter().enumerate() {
        println!("  {j}: {state}");
    }
    let spectrum = block.spectrum().eigenvalues();
    println!("eigenvalues: {:?}", spectrum.iter().map(|e| format!("{e:+.4}")).collect::<Vec<_>>());

    let system = BlockSystem::new(&params)?;
    let dims: Vec<usize> = system.blocks().iter().map(|b| b.basis().dim()).collect();
    println!("block dimensions for cutoff {}: {dims:?}", system.cutoff());

    let dense = build_full_hamiltonian(&params);
    let mut assembled = CMatrix::zeros(dense.nrows(), dense.ncols());
    for b in system.blocks() {
        let idx: Vec<usize> = b.basis().full_indices().collect();
        for (j, &fj) in idx.iter().enumerate() {
            for (k, &fk) in idx.iter().enumerate() {
                assembled[(fj, fk)] = b.coupling()[(j, k)];
            }
        }
    }
    let gap = (assembled - &dense).camax();
    println!("max |direct sum − dense| = {gap:.2e}");
    assert!(gap < 1e-12);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
