use num_complex::Complex64;

use super::trace::kept_positions;
use super::{
    clip_eigenvalues, hermitian_spectrum, hermiticity_defect, CMatrix, CVector, HilbertLayout, IndexSplit,
    ZERO_EIGENVALUE,
};
use crate::{Error, Result};

const NORM_TOLERANCE: f64 = 1e-10;
const HERMITIAN_TOLERANCE: f64 = 1e-12;
const TRACE_TOLERANCE: f64 = 1e-10;

/// Normalized state vector on a labelled layout.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState {
    layout: HilbertLayout,
    amplitudes: CVector,
}

impl PureState {
    pub fn new(layout: HilbertLayout, amplitudes: CVector) -> Result<Self> {
        check_len(&layout, amplitudes.len())?;
        let norm = amplitudes.norm_squared();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self { layout, amplitudes })
    }

    /// Rescales `amplitudes` to unit norm. Fails on a zero vector.
    pub fn normalized(layout: HilbertLayout, amplitudes: CVector) -> Result<Self> {
        check_len(&layout, amplitudes.len())?;
        let norm = amplitudes.norm();
        if !norm.is_finite() || norm <= 0.0 {
            return Err(Error::NotNormalized(norm * norm));
        }
        Ok(Self { layout, amplitudes: amplitudes.unscale(norm) })
    }

    pub(crate) fn from_trusted(layout: HilbertLayout, amplitudes: CVector) -> Self {
        debug_assert_eq!(layout.total_dim(), amplitudes.len());
        debug_assert!((amplitudes.norm_squared() - 1.0).abs() <= NORM_TOLERANCE);
        Self { layout, amplitudes }
    }

    pub fn layout(&self) -> &HilbertLayout {
        &self.layout
    }

    pub fn amplitudes(&self) -> &CVector {
        &self.amplitudes
    }

    pub fn norm_squared(&self) -> f64 {
        self.amplitudes.norm_squared()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &PureState) -> Complex64 {
        self.amplitudes.dotc(&other.amplitudes)
    }

    pub fn projector(&self) -> DensityMatrix {
        let m = &self.amplitudes * self.amplitudes.adjoint();
        DensityMatrix::from_trusted(self.layout.clone(), m)
    }

    /// Reduced density matrix on `keep`, without forming the full projector.
    pub fn reduced<S: AsRef<str>>(&self, keep: &[S]) -> Result<DensityMatrix> {
        let positions = kept_positions(&self.layout, keep)?;
        let split = IndexSplit::new(&self.layout, &positions);
        let psi = split.amplitude_matrix(self.amplitudes.as_slice());
        let rho = &psi * psi.adjoint();
        Ok(DensityMatrix::from_trusted(split.kept().clone(), rho))
    }
}

/// Hermitian, unit-trace, positive semidefinite operator on a labelled layout.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    layout: HilbertLayout,
    matrix: CMatrix,
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positivity (min eigenvalue ≥ −1e-9).
    pub fn new(layout: HilbertLayout, matrix: CMatrix) -> Result<Self> {
        check_len(&layout, matrix.nrows())?;
        check_len(&layout, matrix.ncols())?;
        let defect = hermiticity_defect(&matrix);
        if defect > HERMITIAN_TOLERANCE {
            return Err(Error::NotHermitian(defect));
        }
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > TRACE_TOLERANCE || trace.im.abs() > TRACE_TOLERANCE {
            return Err(Error::InvalidDensity(format!("trace {trace} differs from 1")));
        }
        let spectrum = hermitian_spectrum(&matrix)?;
        clip_eigenvalues(&spectrum.eigenvalues()[..1.min(spectrum.dim())])?;
        Ok(Self { layout, matrix })
    }

    /// For outputs of trace-preserving maps. Hermitian part is taken; the
    /// remaining invariants are checked in debug builds only.
    pub(crate) fn from_trusted(layout: HilbertLayout, matrix: CMatrix) -> Self {
        debug_assert_eq!(layout.total_dim(), matrix.nrows());
        debug_assert!(hermiticity_defect(&matrix) <= 1e-10);
        debug_assert!((matrix.trace().re - 1.0).abs() <= 1e-8);
        let matrix = (&matrix + matrix.adjoint()).scale(0.5);
        Self { layout, matrix }
    }

    pub fn maximally_mixed(layout: HilbertLayout) -> Self {
        let d = layout.total_dim();
        let matrix = CMatrix::identity(d, d).unscale(d as f64);
        Self { layout, matrix }
    }

    pub fn layout(&self) -> &HilbertLayout {
        &self.layout
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    /// Eigenvalues after the clipping rule, ascending.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        let spectrum = hermitian_spectrum(&self.matrix)?;
        clip_eigenvalues(spectrum.eigenvalues())
    }

    pub fn min_eigenvalue(&self) -> Result<f64> {
        let spectrum = hermitian_spectrum(&self.matrix)?;
        Ok(spectrum.eigenvalues().first().copied().unwrap_or(0.0))
    }
}

fn check_len(layout: &HilbertLayout, got: usize) -> Result<()> {
    let expected = layout.total_dim();
    if expected != got {
        return Err(Error::DimensionMismatch { expected, got });
    }
    Ok(())
}

/// `-Σ p ln p` in nats over clipped eigenvalues; `0 ln 0 = 0`.
pub(crate) fn entropy_of(eigenvalues: &[f64]) -> f64 {
    eigenvalues.iter().filter(|&&p| p > ZERO_EIGENVALUE).map(|&p| -p * p.ln()).sum()
}

/// Von Neumann entropy in nats.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    Ok(entropy_of(&rho.eigenvalues()?))
}

/// `Tr ρ²`.
pub fn purity(rho: &DensityMatrix) -> f64 {
    rho.matrix.iter().map(|x| x.norm_sqr()).sum()
}
