use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::model::{full_index, full_layout, Level};
use crate::quantum::{CVector, PureState};
use crate::{Error, Result};

/// Real coherent-state amplitudes `q_n = e^{−n̄/2} n̄^{n/2} / √n!`, truncated
/// and renormalized.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldPreparation {
    nbar: f64,
    cutoff: usize,
    amplitudes: Vec<f64>,
    norm_deficit: f64,
}

/// Poisson weights `p_m` for `m = 0..len`, evaluated in log space.
fn poisson_weights(nbar: f64, len: usize) -> Vec<f64> {
    if nbar == 0.0 {
        let mut p = vec![0.0; len];
        p[0] = 1.0;
        return p;
    }
    let ln_nbar = nbar.ln();
    let mut ln_fact = 0.0;
    (0..len)
        .map(|m| {
            if m > 0 {
                ln_fact += (m as f64).ln();
            }
            (-nbar + m as f64 * ln_nbar - ln_fact).exp()
        })
        .collect()
}

/// Number of weights needed so that everything beyond is far below any useful tail target.
fn weight_span(nbar: f64, at_least: usize) -> usize {
    let span = nbar + 40.0 * (nbar + 1.0).sqrt() + 60.0;
    (span.ceil() as usize).max(at_least + 1)
}

fn check_nbar(nbar: f64) -> Result<()> {
    if !nbar.is_finite() || nbar < 0.0 {
        return Err(Error::InvalidParameter(format!("nbar must be ≥ 0, got {nbar}")));
    }
    Ok(())
}

impl FieldPreparation {
    fn from_weights(nbar: f64, weights: &[f64], support: usize) -> Self {
        let kept: f64 = weights[..=support].iter().sum();
        let norm_deficit = weights[support + 1..].iter().sum::<f64>().max(0.0);
        let cutoff = support + 2;
        let mut amplitudes = vec![0.0; cutoff + 1];
        for (q, p) in amplitudes.iter_mut().zip(&weights[..=support]) {
            *q = (p / kept).sqrt();
        }
        Self { nbar, cutoff, amplitudes, norm_deficit }
    }

    /// Coherent field with support `0..=cutoff−2`, leaving two phonons of headroom.
    pub fn coherent_with_cutoff(nbar: f64, cutoff: usize) -> Result<Self> {
        check_nbar(nbar)?;
        if cutoff < 2 {
            return Err(Error::Cutoff { cutoff, reason: "need at least two phonons of headroom".into() });
        }
        let weights = poisson_weights(nbar, weight_span(nbar, cutoff));
        Ok(Self::from_weights(nbar, &weights, cutoff - 2))
    }

    pub fn nbar(&self) -> f64 {
        self.nbar
    }

    /// Largest Fock index of the space the field lives in.
    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    /// `q_n` for `n = 0..=cutoff`, unit norm.
    pub fn amplitudes(&self) -> &[f64] {
        &self.amplitudes
    }

    /// Poisson mass dropped by the truncation, `1 − Σ q_n²` before renormalization.
    pub fn norm_deficit(&self) -> f64 {
        self.norm_deficit
    }

    /// `Σ n q_n²` after renormalization.
    pub fn mean_phonons(&self) -> f64 {
        self.amplitudes.iter().enumerate().map(|(n, q)| n as f64 * q * q).sum()
    }
}

/// Coherent field truncated at the smallest `N` whose Poisson tail beyond `N`
/// is at most `target_deficit`; the cutoff is `N + 2`.
pub fn coherent_amplitudes(nbar: f64, target_deficit: f64) -> Result<FieldPreparation> {
    check_nbar(nbar)?;
    if target_deficit.is_nan() || target_deficit <= 0.0 {
        return Err(Error::InvalidParameter(format!("truncation deficit must be > 0, got {target_deficit}")));
    }
    let weights = poisson_weights(nbar, weight_span(nbar, 0));
    // tails[n] = Σ_{m>n} p_m, summed from the top for accuracy
    let mut tails = vec![0.0; weights.len()];
    let mut acc = 0.0;
    for n in (0..weights.len()).rev() {
        tails[n] = acc;
        acc += weights[n];
    }
    let support = tails.iter().position(|&t| t <= target_deficit).unwrap_or(weights.len() - 1);
    Ok(FieldPreparation::from_weights(nbar, &weights, support))
}

/// `(cos θ |a₁b₂⟩ + sin θ e^{iφ} |b₁a₂⟩) ⊗ Σ q_n |n⟩` on the full layout.
pub fn prepare_initial(theta: f64, phi: f64, field: &FieldPreparation) -> Result<PureState> {
    if !(0.0..=TAU).contains(&theta) {
        return Err(Error::InvalidParameter(format!("theta must lie in [0, 2π], got {theta}")));
    }
    if !(0.0..=PI).contains(&phi) {
        return Err(Error::InvalidParameter(format!("phi must lie in [0, π], got {phi}")));
    }
    let cutoff = field.cutoff();
    let layout = full_layout(cutoff);
    let mut v = CVector::zeros(layout.total_dim());
    let ab = Complex64::new(theta.cos(), 0.0);
    let ba = Complex64::from_polar(theta.sin(), phi);
    for (n, &q) in field.amplitudes().iter().enumerate() {
        v[full_index(cutoff, n, Level::A, Level::B)] = ab * q;
        v[full_index(cutoff, n, Level::B, Level::A)] = ba * q;
    }
    PureState::new(layout, v)
}
