//! Dense state and operator containers over a labelled tensor-product space,
//! with partial traces, Hermitian spectra and entropy primitives.
//!
//! Storage is dense throughout. Basis indices are row-major over the layout's
//! factors: the last factor varies fastest.

mod layout;
mod spectrum;
mod state;
mod trace;

pub use layout::{Factor, HilbertLayout};
pub use spectrum::{hermitian_spectrum, hermiticity_defect, Spectrum};
pub(crate) use state::entropy_of;
pub use state::{purity, von_neumann_entropy, DensityMatrix, PureState};
pub use trace::{partial_trace, IndexSplit};

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

/// Eigenvalues below this magnitude count as exact zeros in `x ln x` sums.
pub const ZERO_EIGENVALUE: f64 = 1e-14;

/// Eigenvalues in `[-CLIP_TOLERANCE, 0)` are clipped to zero; anything more
/// negative is reported as an error.
pub const CLIP_TOLERANCE: f64 = 1e-9;

/// Largest elementwise modulus of `a - b`.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape(), "max_abs_diff: shape mismatch");
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Clip a real spectrum of a density operator: small negatives become zero.
pub(crate) fn clip_eigenvalues(values: &[f64]) -> crate::Result<Vec<f64>> {
    values
        .iter()
        .map(|&v| {
            if v >= 0.0 {
                Ok(v)
            } else if v >= -CLIP_TOLERANCE {
                Ok(0.0)
            } else {
                Err(crate::Error::NegativeEigenvalue(v))
            }
        })
        .collect()
}
