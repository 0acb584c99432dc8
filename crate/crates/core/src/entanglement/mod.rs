//! Bipartite entanglement and correlation measures.
//!
//! * I-concurrence `√(2(1 − Tr ρ_A²))` of a pure state,
//! * negativity, the summed magnitude of negative eigenvalues of `ρ^{T_B}`,
//! * the relative entropy `Tr ρ (ln ρ − ln ρ_A ⊗ ρ_B)` to the product of marginals.
//!
//! All logarithms are natural.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::quantum::{
    clip_eigenvalues, entropy_of, hermitian_spectrum, CMatrix, DensityMatrix, HilbertLayout, IndexSplit, PureState,
    ZERO_EIGENVALUE,
};
use crate::{Error, Result};

/// Weight of `ρ` outside the support of `ρ_A ⊗ ρ_B` above which the relative
/// entropy is reported as `+∞`.
const SUPPORT_TOLERANCE: f64 = 1e-12;

/// Split of a layout's factors into two nonempty complementary sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bipartition {
    pub side_a: Vec<String>,
    pub side_b: Vec<String>,
}

impl Bipartition {
    pub fn new<A, B, S1, S2>(side_a: A, side_b: B) -> Self
    where
        A: IntoIterator<Item = S1>,
        B: IntoIterator<Item = S2>,
        S1: Into<String>,
        S2: Into<String>,
    {
        Self {
            side_a: side_a.into_iter().map(Into::into).collect(),
            side_b: side_b.into_iter().map(Into::into).collect(),
        }
    }

    /// `{ion1} | {ion2, field}`.
    pub fn ion1_vs_rest() -> Self {
        Self::new([crate::model::ION1], [crate::model::ION2, crate::model::FIELD])
    }

    /// `{ion1} | {ion2}`, on the two-ion state with the field traced out.
    pub fn ion1_vs_ion2() -> Self {
        Self::new([crate::model::ION1], [crate::model::ION2])
    }

    pub fn swapped(&self) -> Self {
        Self { side_a: self.side_b.clone(), side_b: self.side_a.clone() }
    }

    /// Both sides, in no particular order.
    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.side_a.iter().chain(&self.side_b).map(String::as_str)
    }

    /// Checks the cut against `layout`: nonempty, disjoint, covering.
    pub fn validate(&self, layout: &HilbertLayout) -> Result<()> {
        if self.side_a.is_empty() || self.side_b.is_empty() {
            return Err(Error::InvalidBipartition("both sides must be nonempty".into()));
        }
        for label in self.labels() {
            if layout.position(label).is_none() {
                return Err(Error::InvalidBipartition(format!("unknown label `{label}`")));
            }
        }
        let mut all: Vec<&str> = self.labels().collect();
        all.sort_unstable();
        let before = all.len();
        all.dedup();
        if all.len() != before {
            return Err(Error::InvalidBipartition("sides overlap or repeat a label".into()));
        }
        if all.len() != layout.len() {
            return Err(Error::InvalidBipartition(format!("sides cover {} of {} factors", all.len(), layout.len())));
        }
        Ok(())
    }

    /// Split with side A as the kept half.
    fn split(&self, layout: &HilbertLayout) -> Result<IndexSplit> {
        self.validate(layout)?;
        let positions = layout.positions(&self.side_a)?;
        Ok(IndexSplit::new(layout, &positions))
    }
}

fn marginals_pure(psi: &PureState, cut: &Bipartition) -> Result<(IndexSplit, CMatrix)> {
    let split = cut.split(psi.layout())?;
    let schmidt = split.amplitude_matrix(psi.amplitudes().as_slice());
    Ok((split, schmidt))
}

/// I-concurrence of a pure state across `cut`, `√(2(1 − Tr ρ_A²))`.
///
/// For unit trace `1 − Tr ρ_A² = 2 Σ_{i<j} (ρ_ii ρ_jj − |ρ_ij|²)`; summing the
/// principal 2×2 minors avoids the cancellation of `1 − purity` near product
/// states, where the square root would amplify it.
pub fn i_concurrence_pure(psi: &PureState, cut: &Bipartition) -> Result<f64> {
    let (_, schmidt) = marginals_pure(psi, cut)?;
    let rho_a = &schmidt * schmidt.adjoint();
    let mut minors = 0.0;
    for i in 0..rho_a.nrows() {
        for j in i + 1..rho_a.nrows() {
            minors += rho_a[(i, i)].re * rho_a[(j, j)].re - rho_a[(i, j)].norm_sqr();
        }
    }
    Ok(2.0 * minors.max(0.0).sqrt())
}

/// Largest I-concurrence possible across `cut`, `√(2(d−1)/d)` with `d = min(d_A, d_B)`.
pub fn i_concurrence_ceiling(layout: &HilbertLayout, cut: &Bipartition) -> Result<f64> {
    let split = cut.split(layout)?;
    let d = split.kept_dim().min(split.traced_dim()) as f64;
    Ok((2.0 * (d - 1.0) / d).sqrt())
}

/// Negativity across `cut`: `Σ |λ|` over negative eigenvalues of the partial
/// transpose on side B.
pub fn negativity(rho: &DensityMatrix, cut: &Bipartition) -> Result<f64> {
    let split = cut.split(rho.layout())?;
    let reordered = split.reorder(rho.matrix());
    let (da, db) = (split.kept_dim(), split.traced_dim());
    let transposed = CMatrix::from_fn(da * db, da * db, |i, j| {
        let (a, b) = (i / db, i % db);
        let (a2, b2) = (j / db, j % db);
        reordered[(a * db + b2, a2 * db + b)]
    });
    let spectrum = hermitian_spectrum(&transposed)?;
    Ok(spectrum.eigenvalues().iter().filter(|&&e| e < 0.0).map(|e| -e).sum())
}

/// Negativity of a pure state from its Schmidt coefficients,
/// `((Σ √p_i)² − 1) / 2`.
pub fn negativity_pure(psi: &PureState, cut: &Bipartition) -> Result<f64> {
    let (_, schmidt) = marginals_pure(psi, cut)?;
    let p = clip_eigenvalues(hermitian_spectrum(&(&schmidt * schmidt.adjoint()))?.eigenvalues())?;
    let root_sum: f64 = p.iter().map(|x| x.sqrt()).sum();
    Ok(((root_sum * root_sum - 1.0) / 2.0).max(0.0))
}

/// `−Σ_ij w_ij ln(a_i b_j)` over the product eigenbasis of `ρ_A ⊗ ρ_B`, where
/// `w_ij = ⟨u_i v_j|ρ|u_i v_j⟩`. Returns `+∞` when `ρ` has weight on the
/// kernel of the product.
fn cross_entropy(weights: &CMatrix, a: &[f64], b: &[f64]) -> f64 {
    let mut total = 0.0;
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            let w = weights[(i, j)].re;
            if ai <= ZERO_EIGENVALUE || bj <= ZERO_EIGENVALUE {
                if w > SUPPORT_TOLERANCE {
                    return f64::INFINITY;
                }
                continue;
            }
            total -= w * (ai * bj).ln();
        }
    }
    total
}

/// `I = Tr ρ (ln ρ − ln(ρ_A ⊗ ρ_B))` in nats; `+∞` when the support of `ρ`
/// is not contained in that of `ρ_A ⊗ ρ_B`.
pub fn relative_entropy_measure(rho: &DensityMatrix, cut: &Bipartition) -> Result<f64> {
    let split = cut.split(rho.layout())?;
    let reordered = split.reorder(rho.matrix());
    let (da, db) = (split.kept_dim(), split.traced_dim());

    let rho_a = CMatrix::from_fn(da, da, |i, j| (0..db).map(|b| reordered[(i * db + b, j * db + b)]).sum());
    let rho_b = CMatrix::from_fn(db, db, |i, j| (0..da).map(|a| reordered[(a * db + i, a * db + j)]).sum());
    let sa = hermitian_spectrum(&rho_a)?;
    let sb = hermitian_spectrum(&rho_b)?;
    let a = clip_eigenvalues(sa.eigenvalues())?;
    let b = clip_eigenvalues(sb.eigenvalues())?;

    let product_basis = sa.eigenvectors().kronecker(sb.eigenvectors());
    let rotated = product_basis.adjoint() * &reordered * &product_basis;
    let weights = CMatrix::from_fn(da, db, |i, j| rotated[(i * db + j, i * db + j)]);

    let neg_entropy = -entropy_of(&clip_eigenvalues(hermitian_spectrum(&reordered)?.eigenvalues())?);
    Ok(neg_entropy + cross_entropy(&weights, &a, &b))
}

/// [`relative_entropy_measure`] of `|ψ⟩⟨ψ|`, without forming the projector.
pub fn relative_entropy_pure(psi: &PureState, cut: &Bipartition) -> Result<f64> {
    let (_, schmidt) = marginals_pure(psi, cut)?;
    let sa = hermitian_spectrum(&(&schmidt * schmidt.adjoint()))?;
    let sb = hermitian_spectrum(&(schmidt.transpose() * schmidt.conjugate()))?;
    let a = clip_eigenvalues(sa.eigenvalues())?;
    let b = clip_eigenvalues(sb.eigenvalues())?;
    // ⟨u_i v_j|ψ⟩ = (U† Ψ V̄)_ij
    let overlaps = sa.eigenvectors().adjoint() * &schmidt * sb.eigenvectors().conjugate();
    let weights = overlaps.map(|z| Complex64::new(z.norm_sqr(), 0.0));
    Ok(cross_entropy(&weights, &a, &b))
}
