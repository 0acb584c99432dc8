use num_complex::Complex64;

use super::{validate_time_grid, EvolutionResult, Method, States};
use crate::model::{BlockSystem, SimParams};
use crate::quantum::{hermitian_spectrum, CMatrix, CVector, DensityMatrix, HilbertLayout, PureState, Spectrum};
use crate::{Error, Result};

/// Completeness deficit the adaptive Kraus sum stops at.
pub const KRAUS_DEFICIT_TARGET: f64 = 1e-10;
/// Hard cap on the number of Kraus terms.
pub const KRAUS_MAX_TERMS: usize = 512;

fn check_rate_and_time(gamma: f64, t: f64) -> Result<()> {
    if !gamma.is_finite() || gamma < 0.0 {
        return Err(Error::InvalidParameter(format!("decoherence rate gamma must be ≥ 0, got {gamma}")));
    }
    if !t.is_finite() || t < 0.0 {
        return Err(Error::InvalidParameter(format!("time must be ≥ 0, got {t}")));
    }
    Ok(())
}

/// Eigenbasis factor of `ρ_mn`: `exp(−iΔt − γtΔ²/2)` with `Δ = E_m − E_n`.
#[inline]
fn coherence_factor(delta: f64, gamma: f64, t: f64) -> Complex64 {
    Complex64::from_polar((-0.5 * gamma * t * delta * delta).exp(), -delta * t)
}

/// Intrinsic-decoherence channel of a fixed Hamiltonian, solved in its eigenbasis:
/// `ρ_mn(t) = ρ_mn(0) e^{−i(E_m−E_n)t} e^{−γt(E_m−E_n)²/2}`.
#[derive(Clone, Debug)]
pub struct MilburnChannel {
    spectrum: Spectrum,
    gamma: f64,
}

impl MilburnChannel {
    pub fn new(h: &CMatrix, gamma: f64) -> Result<Self> {
        check_rate_and_time(gamma, 0.0)?;
        Ok(Self { spectrum: hermitian_spectrum(h)?, gamma })
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn apply(&self, rho0: &DensityMatrix, t: f64) -> Result<DensityMatrix> {
        check_rate_and_time(self.gamma, t)?;
        if rho0.dim() != self.spectrum.dim() {
            return Err(Error::DimensionMismatch { expected: self.spectrum.dim(), got: rho0.dim() });
        }
        let v = self.spectrum.eigenvectors();
        let e = self.spectrum.eigenvalues();
        let mut x = v.adjoint() * rho0.matrix() * v;
        for m in 0..x.nrows() {
            for n in 0..x.ncols() {
                x[(m, n)] *= coherence_factor(e[m] - e[n], self.gamma, t);
            }
        }
        Ok(DensityMatrix::from_trusted(rho0.layout().clone(), v * x * v.adjoint()))
    }
}

/// Closed-form intrinsic-decoherence evolution of `rho0` under `h` for time `t`.
pub fn milburn_closed_form(rho0: &DensityMatrix, h: &CMatrix, gamma: f64, t: f64) -> Result<DensityMatrix> {
    MilburnChannel::new(h, gamma)?.apply(rho0, t)
}

/// Truncated Kraus sum and its completeness deficit.
#[derive(Clone, Debug)]
pub struct KrausOutcome {
    pub layout: HilbertLayout,
    /// `Σ_{k<K} M_k ρ M_k†`; its trace falls short of 1 by at most the deficit.
    pub matrix: CMatrix,
    /// `max |Σ_{k<K} M_k M_k† − I|`.
    pub deficit: f64,
    pub terms: usize,
}

impl KrausOutcome {
    pub fn into_density(self) -> Result<DensityMatrix> {
        DensityMatrix::new(self.layout, self.matrix)
    }
}

struct KrausSum<'a> {
    rho0: &'a DensityMatrix,
    h: &'a CMatrix,
    gamma_t: f64,
    next: CMatrix,
    k: usize,
    state: CMatrix,
    completeness: CMatrix,
}

impl<'a> KrausSum<'a> {
    fn new(rho0: &'a DensityMatrix, h: &'a CMatrix, gamma: f64, t: f64) -> Result<Self> {
        check_rate_and_time(gamma, t)?;
        if rho0.dim() != h.nrows() {
            return Err(Error::DimensionMismatch { expected: h.nrows(), got: rho0.dim() });
        }
        let gamma_t = gamma * t;
        // M_0 = e^{−iHt} e^{−γtH²/2}
        let m0 = hermitian_spectrum(h)?.map(|e| Complex64::from_polar((-0.5 * gamma_t * e * e).exp(), -e * t));
        let d = h.nrows();
        Ok(Self { rho0, h, gamma_t, next: m0, k: 0, state: CMatrix::zeros(d, d), completeness: CMatrix::zeros(d, d) })
    }

    /// Adds `M_k`, then prepares `M_{k+1} = √(γt/(k+1)) H M_k`.
    fn push(&mut self) {
        let m = &self.next;
        let m_adj = m.adjoint();
        self.state += m * self.rho0.matrix() * &m_adj;
        self.completeness += m * &m_adj;
        self.k += 1;
        let scale = (self.gamma_t / self.k as f64).sqrt();
        self.next = (self.h * m).scale(scale);
    }

    fn deficit(&self) -> f64 {
        let d = self.completeness.nrows();
        let mut worst = 0.0f64;
        for i in 0..d {
            for j in 0..d {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((self.completeness[(i, j)] - target).norm());
            }
        }
        worst
    }

    fn finish(self) -> KrausOutcome {
        let deficit = self.deficit();
        KrausOutcome { layout: self.rho0.layout().clone(), matrix: self.state, deficit, terms: self.k }
    }
}

/// `Σ_{k<terms} M_k ρ₀ M_k†` with `M_k = (γt)^{k/2}/√k! · H^k e^{−iHt} e^{−γtH²/2}`.
pub fn milburn_kraus(rho0: &DensityMatrix, h: &CMatrix, gamma: f64, t: f64, terms: usize) -> Result<KrausOutcome> {
    if terms == 0 {
        return Err(Error::InvalidParameter("Kraus sum needs at least one term".into()));
    }
    let mut sum = KrausSum::new(rho0, h, gamma, t)?;
    for _ in 0..terms {
        sum.push();
    }
    Ok(sum.finish())
}

/// Kraus sum grown until the completeness deficit is at most
/// [`KRAUS_DEFICIT_TARGET`] or [`KRAUS_MAX_TERMS`] terms are used.
pub fn milburn_kraus_adaptive(rho0: &DensityMatrix, h: &CMatrix, gamma: f64, t: f64) -> Result<KrausOutcome> {
    let mut sum = KrausSum::new(rho0, h, gamma, t)?;
    loop {
        sum.push();
        if sum.k >= KRAUS_MAX_TERMS || sum.deficit() <= KRAUS_DEFICIT_TARGET {
            return Ok(sum.finish());
        }
    }
}

/// Closed-form intrinsic decoherence from a pure initial state, exploiting the
/// block structure of the Hamiltonian: each pair of blocks evolves in the
/// product of their eigenbases.
#[derive(Clone, Debug)]
pub struct MilburnBlockEvolution {
    system: BlockSystem,
    gamma: f64,
    /// eigenbasis coefficients per block; `None` for blocks without support
    coefficients: Vec<Option<CVector>>,
    indices: Vec<Vec<usize>>,
}

impl MilburnBlockEvolution {
    pub fn new(psi0: &PureState, params: &SimParams) -> Result<Self> {
        params.validate()?;
        if !params.modulation.is_constant() {
            return Err(Error::TimeDependentDecoherence);
        }
        let system = BlockSystem::new(params)?;
        if psi0.layout() != system.layout() {
            return Err(Error::DimensionMismatch {
                expected: system.layout().total_dim(),
                got: psi0.layout().total_dim(),
            });
        }
        system.check_support(psi0.amplitudes())?;
        let coefficients = system
            .scatter(psi0.amplitudes())
            .into_iter()
            .zip(system.blocks())
            .map(|(part, block)| (part.norm() > 0.0).then(|| block.spectrum().eigenvectors().ad_mul(&part)))
            .collect();
        let indices = system.blocks().iter().map(|b| b.basis().full_indices().collect()).collect();
        Ok(Self { system, gamma: params.gamma, coefficients, indices })
    }

    pub fn system(&self) -> &BlockSystem {
        &self.system
    }

    pub fn state_at(&self, t: f64) -> Result<DensityMatrix> {
        check_rate_and_time(self.gamma, t)?;
        let d = self.system.layout().total_dim();
        let mut rho = CMatrix::zeros(d, d);
        let blocks = self.system.blocks();
        for (b1, c1) in self.coefficients.iter().enumerate() {
            let Some(c1) = c1 else { continue };
            let s1 = blocks[b1].spectrum();
            for (b2, c2) in self.coefficients.iter().enumerate() {
                let Some(c2) = c2 else { continue };
                let s2 = blocks[b2].spectrum();
                let x = CMatrix::from_fn(c1.len(), c2.len(), |m, n| {
                    let delta = s1.eigenvalues()[m] - s2.eigenvalues()[n];
                    c1[m] * c2[n].conj() * coherence_factor(delta, self.gamma, t)
                });
                let y = s1.eigenvectors() * x * s2.eigenvectors().adjoint();
                for (j, &row) in self.indices[b1].iter().enumerate() {
                    for (k, &col) in self.indices[b2].iter().enumerate() {
                        rho[(row, col)] = y[(j, k)];
                    }
                }
            }
        }
        Ok(DensityMatrix::from_trusted(self.system.layout().clone(), rho))
    }
}

/// Intrinsic-decoherence evolution of a pure initial state on `times`.
/// Refuses modulated couplings.
pub fn evolve_milburn(psi0: &PureState, params: &SimParams, times: &[f64]) -> Result<EvolutionResult> {
    validate_time_grid(times)?;
    let evolution = MilburnBlockEvolution::new(psi0, params)?;
    let states = times.iter().map(|&t| evolution.state_at(t)).collect::<Result<Vec<_>>>()?;
    Ok(EvolutionResult { times: times.to_vec(), states: States::Mixed(states), method: Method::MilburnClosed })
}
