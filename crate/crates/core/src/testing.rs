use nalgebra::DVector;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::quantum::{hermitian_spectrum, CMatrix, CVector, DensityMatrix, HilbertLayout, PureState};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_vector(rng: &mut impl Rng, dim: usize) -> CVector {
    DVector::from_fn(dim, |_, _| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
}

pub fn random_pure(rng: &mut impl Rng, layout: &HilbertLayout) -> PureState {
    PureState::normalized(layout.clone(), random_vector(rng, layout.total_dim())).unwrap()
}

pub fn random_hermitian(rng: &mut impl Rng, dim: usize) -> CMatrix {
    let m = CMatrix::from_fn(dim, dim, |_, _| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
    (&m + m.adjoint()).scale(0.5)
}

pub fn random_unitary(rng: &mut impl Rng, dim: usize) -> CMatrix {
    hermitian_spectrum(&random_hermitian(rng, dim)).unwrap().map(|e| Complex64::from_polar(1.0, 3.0 * e))
}

/// Full-rank mixed state `G G† / Tr(G G†)`.
pub fn random_mixed(rng: &mut impl Rng, layout: &HilbertLayout) -> DensityMatrix {
    let d = layout.total_dim();
    let g = CMatrix::from_fn(d, d, |_, _| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
    let m = &g * g.adjoint();
    let tr = m.trace().re;
    let m = m.unscale(tr);
    DensityMatrix::new(layout.clone(), (&m + m.adjoint()).scale(0.5)).unwrap()
}
