// Reduced states and entropies of a small labeled tensor product.

use std::error::Error;

use ionpair::quantum::{partial_trace, purity, von_neumann_entropy, CVector, HilbertLayout, PureState};
use num_complex::Complex64;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let layout = HilbertLayout::new([("ion1", 3), ("ion2", 3)])?;
    let c = |x: f64| Complex64::new(x, 0.0);

    // (|ab⟩ + |ba⟩)/√2 on two qutrits
    let mut v = CVector::zeros(9);
    v[1] = c(1.0);
    v[3] = c(1.0);
    let psi = PureState::normalized(layout, v)?;
    let rho = psi.projector();
    let rho_1 = partial_trace(&rho, &["ion1"])?;

    println!("S(ρ)      = {:.6}", von_neumann_entropy(&rho)?);
    println!("S(ρ_ion1) = {:.6}  (ln 2 = {:.6})", von_neumann_entropy(&rho_1)?, std::f64::consts::LN_2);
    println!("Tr ρ_ion1² = {:.6}", purity(&rho_1));
    println!("ρ_ion1 eigenvalues: {:?}", rho_1.eigenvalues()?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
