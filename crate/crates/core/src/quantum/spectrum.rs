use nalgebra::SymmetricEigen;
use num_complex::Complex64;

use super::CMatrix;
use crate::{Error, Result};

/// Accepted Hermiticity defect for spectral input, relative to `max(1, max|H_ij|)`.
const HERMITIAN_TOLERANCE: f64 = 1e-10;

/// Eigendecomposition `H = V diag(e) V†` with ascending real eigenvalues.
#[derive(Clone, Debug)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    eigenvectors: CMatrix,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Unitary matrix whose columns are the eigenvectors.
    pub fn eigenvectors(&self) -> &CMatrix {
        &self.eigenvectors
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// `V diag(f(e)) V†`.
    pub fn map<F>(&self, f: F) -> CMatrix
    where
        F: Fn(f64) -> Complex64,
    {
        let v = &self.eigenvectors;
        let mut scaled = v.clone();
        for (j, &e) in self.eigenvalues.iter().enumerate() {
            let fe = f(e);
            scaled.column_mut(j).iter_mut().for_each(|x| *x *= fe);
        }
        scaled * v.adjoint()
    }

    pub fn reconstruct(&self) -> CMatrix {
        self.map(Complex64::from)
    }
}

/// Largest elementwise `|H - H†|`.
pub fn hermiticity_defect(h: &CMatrix) -> f64 {
    let n = h.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i..n {
            worst = worst.max((h[(i, j)] - h[(j, i)].conj()).norm());
        }
    }
    worst
}

/// Eigendecomposition of a Hermitian matrix, eigenvalues sorted ascending.
pub fn hermitian_spectrum(h: &CMatrix) -> Result<Spectrum> {
    if !h.is_square() {
        return Err(Error::DimensionMismatch { expected: h.nrows(), got: h.ncols() });
    }
    let n = h.nrows();
    if n == 0 {
        return Ok(Spectrum { eigenvalues: Vec::new(), eigenvectors: CMatrix::zeros(0, 0) });
    }
    let scale = h.iter().map(|x| x.norm()).fold(1.0, f64::max);
    let defect = hermiticity_defect(h);
    if defect > HERMITIAN_TOLERANCE * scale {
        return Err(Error::NotHermitian(defect));
    }
    let sym = (h + h.adjoint()).scale(0.5);
    let eig = SymmetricEigen::new(sym);

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let eigenvalues = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let eigenvectors = CMatrix::from_fn(n, n, |i, j| eig.eigenvectors[(i, order[j])]);
    Ok(Spectrum { eigenvalues, eigenvectors })
}
