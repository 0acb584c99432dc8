use num_complex::Complex64;

use super::{CMatrix, DensityMatrix, HilbertLayout};
use crate::{Error, Result};

/// Bijection between flat indices of a layout and `(kept, traced)` index pairs,
/// where both halves keep the layout's factor order.
#[derive(Clone, Debug)]
pub struct IndexSplit {
    kept: HilbertLayout,
    traced: Option<HilbertLayout>,
    kept_dim: usize,
    traced_dim: usize,
    full: Vec<usize>,
}

impl IndexSplit {
    /// `kept_positions` must be distinct valid factor positions; may be all of them.
    pub fn new(layout: &HilbertLayout, kept_positions: &[usize]) -> Self {
        let mut kept_positions = kept_positions.to_vec();
        kept_positions.sort_unstable();
        kept_positions.dedup();
        let traced_positions: Vec<usize> = (0..layout.len()).filter(|p| !kept_positions.contains(p)).collect();
        let kept = layout.subset(&kept_positions);
        let traced = (!traced_positions.is_empty()).then(|| layout.subset(&traced_positions));
        let kept_dim = kept.total_dim();
        let traced_dim = traced.as_ref().map_or(1, HilbertLayout::total_dim);

        let mut full = vec![0; layout.total_dim()];
        for (i, digits) in (0..layout.total_dim()).map(|i| (i, layout.digits(i))) {
            let k = kept_positions.iter().fold(0, |acc, &p| acc * layout.factors()[p].dim + digits[p]);
            let t = traced_positions.iter().fold(0, |acc, &p| acc * layout.factors()[p].dim + digits[p]);
            full[k * traced_dim + t] = i;
        }
        Self { kept, traced, kept_dim, traced_dim, full }
    }

    pub fn kept(&self) -> &HilbertLayout {
        &self.kept
    }

    pub fn traced(&self) -> Option<&HilbertLayout> {
        self.traced.as_ref()
    }

    pub fn kept_dim(&self) -> usize {
        self.kept_dim
    }

    pub fn traced_dim(&self) -> usize {
        self.traced_dim
    }

    #[inline]
    pub fn full_index(&self, kept: usize, traced: usize) -> usize {
        self.full[kept * self.traced_dim + traced]
    }

    /// Amplitudes reshaped to a `kept_dim × traced_dim` matrix.
    pub fn amplitude_matrix(&self, amplitudes: &[Complex64]) -> CMatrix {
        CMatrix::from_fn(self.kept_dim, self.traced_dim, |k, t| amplitudes[self.full_index(k, t)])
    }

    /// Trace a full-space operator over the traced factors.
    pub fn trace_out(&self, m: &CMatrix) -> CMatrix {
        let mut out = CMatrix::zeros(self.kept_dim, self.kept_dim);
        for k1 in 0..self.kept_dim {
            for k2 in 0..self.kept_dim {
                let mut acc = Complex64::new(0.0, 0.0);
                for t in 0..self.traced_dim {
                    acc += m[(self.full_index(k1, t), self.full_index(k2, t))];
                }
                out[(k1, k2)] = acc;
            }
        }
        out
    }

    /// The operator re-indexed so that kept factors come first: rows and
    /// columns are `k * traced_dim + t`.
    pub fn reorder(&self, m: &CMatrix) -> CMatrix {
        let n = self.full.len();
        CMatrix::from_fn(n, n, |i, j| m[(self.full[i], self.full[j])])
    }
}

pub(crate) fn kept_positions<S: AsRef<str>>(layout: &HilbertLayout, keep: &[S]) -> Result<Vec<usize>> {
    if keep.is_empty() {
        return Err(Error::TrivialTrace);
    }
    let positions = layout.positions(keep)?;
    if positions.len() == layout.len() {
        return Err(Error::TrivialTrace);
    }
    Ok(positions)
}

/// Reduced state on the factors named in `keep`, in layout order.
pub fn partial_trace<S: AsRef<str>>(rho: &DensityMatrix, keep: &[S]) -> Result<DensityMatrix> {
    let positions = kept_positions(rho.layout(), keep)?;
    let split = IndexSplit::new(rho.layout(), &positions);
    let reduced = split.trace_out(rho.matrix());
    Ok(DensityMatrix::from_trusted(split.kept().clone(), reduced))
}
