use num_complex::Complex64;

use super::{validate_time_grid, EvolutionResult, Method, Modulation, States};
use crate::model::{build_full_hamiltonian, full_layout, BlockSystem, SimParams};
use crate::quantum::{hermitian_spectrum, CVector, HilbertLayout, PureState, Spectrum};
use crate::{Error, Result};

fn check_layout(psi: &PureState, expected: &HilbertLayout) -> Result<()> {
    if psi.layout() != expected {
        return Err(Error::DimensionMismatch { expected: expected.total_dim(), got: psi.layout().total_dim() });
    }
    Ok(())
}

/// Exact propagation block by block, `A(n,t) = V e^{−iZΘ(t)} V† A(n,0)`.
#[derive(Clone, Debug)]
pub struct BlockPropagator {
    system: BlockSystem,
    modulation: Modulation,
}

impl BlockPropagator {
    pub fn new(params: &SimParams) -> Result<Self> {
        Ok(Self { system: BlockSystem::new(params)?, modulation: params.modulation })
    }

    pub fn system(&self) -> &BlockSystem {
        &self.system
    }

    /// Propagate by an accumulated phase `Θ`.
    pub fn evolve_by(&self, psi: &PureState, phase: f64) -> Result<PureState> {
        check_layout(psi, self.system.layout())?;
        self.system.check_support(psi.amplitudes())?;
        let parts: Vec<CVector> = self
            .system
            .scatter(psi.amplitudes())
            .iter()
            .zip(self.system.blocks())
            .map(|(part, block)| block.propagate(part, phase))
            .collect();
        Ok(PureState::from_trusted(psi.layout().clone(), self.system.gather(&parts)))
    }

    pub fn state_at(&self, psi0: &PureState, t: f64) -> Result<PureState> {
        self.evolve_by(psi0, self.modulation.integral(t))
    }
}

/// Full-space propagator `exp(−i H Θ(t))` from one dense eigendecomposition.
#[derive(Clone, Debug)]
pub struct DensePropagator {
    layout: HilbertLayout,
    cutoff: usize,
    spectrum: Spectrum,
    modulation: Modulation,
}

impl DensePropagator {
    pub fn new(params: &SimParams) -> Result<Self> {
        params.validate()?;
        let spectrum = hermitian_spectrum(&build_full_hamiltonian(params))?;
        Ok(Self {
            layout: full_layout(params.fock_cutoff),
            cutoff: params.fock_cutoff,
            spectrum,
            modulation: params.modulation,
        })
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    fn check_support(&self, psi: &PureState) -> Result<()> {
        for (i, amp) in psi.amplitudes().iter().enumerate() {
            if amp.norm() == 0.0 {
                continue;
            }
            let digits = self.layout.digits(i);
            let excited = (digits[0] != 0) as i64 + (digits[1] != 0) as i64;
            let block = digits[2] as i64 - excited;
            if block + 2 > self.cutoff as i64 {
                return Err(Error::SupportExceedsCutoff { block, cutoff: self.cutoff });
            }
        }
        Ok(())
    }

    pub fn evolve_by(&self, psi: &PureState, phase: f64) -> Result<PureState> {
        check_layout(psi, &self.layout)?;
        self.check_support(psi)?;
        let v = self.spectrum.eigenvectors();
        let mut coeffs = v.ad_mul(psi.amplitudes());
        for (c, &e) in coeffs.iter_mut().zip(self.spectrum.eigenvalues()) {
            *c *= Complex64::from_polar(1.0, -e * phase);
        }
        Ok(PureState::from_trusted(self.layout.clone(), v * coeffs))
    }

    pub fn state_at(&self, psi0: &PureState, t: f64) -> Result<PureState> {
        self.evolve_by(psi0, self.modulation.integral(t))
    }
}

/// Pure-state evolution on `times` via per-block eigendecomposition.
pub fn evolve_pure(psi0: &PureState, params: &SimParams, times: &[f64]) -> Result<EvolutionResult> {
    validate_time_grid(times)?;
    let propagator = BlockPropagator::new(params)?;
    let states = times.iter().map(|&t| propagator.state_at(psi0, t)).collect::<Result<Vec<_>>>()?;
    Ok(EvolutionResult { times: times.to_vec(), states: States::Pure(states), method: Method::BlockEigen })
}

/// Same contract as [`evolve_pure`], via the dense full-space propagator.
pub fn evolve_pure_dense(psi0: &PureState, params: &SimParams, times: &[f64]) -> Result<EvolutionResult> {
    validate_time_grid(times)?;
    let propagator = DensePropagator::new(params)?;
    let states = times.iter().map(|&t| propagator.state_at(psi0, t)).collect::<Result<Vec<_>>>()?;
    Ok(EvolutionResult { times: times.to_vec(), states: States::Pure(states), method: Method::DenseOracle })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{full_index, Level};

    fn basis_state(cutoff: usize, fock: usize, ion1: Level, ion2: Level) -> PureState {
        let mut v = CVector::zeros(9 * (cutoff + 1));
        v[full_index(cutoff, fock, ion1, ion2)] = Complex64::new(1.0, 0.0);
        PureState::new(full_layout(cutoff), v).unwrap()
    }

    #[test]
    fn zero_coupling_is_stationary() {
        let mut p = SimParams::with_cutoff(6);
        p.lambda1 = Complex64::new(0.0, 0.0);
        p.lambda2 = Complex64::new(0.0, 0.0);
        let psi = basis_state(6, 2, Level::A, Level::B);
        let r = evolve_pure(&psi, &p, &[0.0, 1.0, 10.0]).unwrap();
        for s in r.pure_states().unwrap() {
            assert_eq!(s, &psi);
        }
    }

    #[test]
    fn support_beyond_headroom_is_rejected() {
        let p = SimParams::with_cutoff(6);
        // |6;aa⟩ sits in block 6 > cutoff - 2
        let psi = basis_state(6, 6, Level::A, Level::A);
        assert!(matches!(evolve_pure(&psi, &p, &[0.0]), Err(Error::SupportExceedsCutoff { block: 6, .. })));
        assert!(matches!(evolve_pure_dense(&psi, &p, &[0.0]), Err(Error::SupportExceedsCutoff { block: 6, .. })));
        // |6;bb⟩ is block 4 = cutoff - 2, fine
        assert!(evolve_pure(&basis_state(6, 6, Level::B, Level::B), &p, &[0.0]).is_ok());
    }

    #[test]
    fn layout_mismatch_is_rejected() {
        let p = SimParams::with_cutoff(6);
        let psi = basis_state(5, 0, Level::A, Level::B);
        assert!(evolve_pure(&psi, &p, &[0.0]).is_err());
    }

    #[test]
    fn dense_is_identity_at_zero_and_unitary() {
        let p = SimParams { epsilon: 1.0, ..SimParams::with_cutoff(6) };
        let psi = basis_state(6, 1, Level::B, Level::A);
        let r = evolve_pure_dense(&psi, &p, &[0.0, 0.7, 3.0]).unwrap();
        let states = r.pure_states().unwrap();
        assert!((states[0].amplitudes() - psi.amplitudes()).norm() < 1e-13);
        for s in states {
            assert!((s.inner(s).norm() - 1.0).abs() < 1e-12);
        }
    }
}
