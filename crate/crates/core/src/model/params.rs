use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::dynamics::Modulation;
use crate::{Error, Result};

/// Electronic level of one ion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    A,
    B,
    C,
}

impl Level {
    pub const ALL: [Level; 3] = [Level::A, Level::B, Level::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn is_excited(self) -> bool {
        self != Level::A
    }

    pub fn symbol(self) -> char {
        match self {
            Level::A => 'a',
            Level::B => 'b',
            Level::C => 'c',
        }
    }
}

/// Physical and numerical knobs of a run. Times are in units of `1/|λ₁|`.
#[derive(Clone, Debug, PartialEq)]
pub struct SimParams {
    /// `a ↔ b` coupling.
    pub lambda1: Complex64,
    /// `a ↔ c` coupling.
    pub lambda2: Complex64,
    /// Lamb-Dicke parameter.
    pub eta: f64,
    /// Laser amplitude scale entering the mode function.
    pub epsilon: f64,
    /// Intrinsic decoherence rate.
    pub gamma: f64,
    /// Mean phonon number of the initial coherent field.
    pub nbar: f64,
    pub theta: f64,
    pub phi: f64,
    pub modulation: Modulation,
    /// Largest Fock index kept.
    pub fock_cutoff: usize,
    /// Use `√(n!/(n+k)!) η^k` instead of `n!/(n+k)!` in the mode function.
    pub standard_matrix_element: bool,
    /// Trap frequency. Recorded only; the interaction picture is resonant.
    pub nu: f64,
    /// Ion transition frequencies. Recorded only.
    pub omega1: f64,
    pub omega2: f64,
}

impl SimParams {
    /// Trapped-beryllium scale parameters: η = 0.202, ε = 0.01, λ₂/λ₁ = 0.01,
    /// n̄ = 5, θ = π/4, φ = 0, constant coupling, no decoherence.
    pub fn with_cutoff(fock_cutoff: usize) -> Self {
        Self {
            lambda1: Complex64::new(1.0, 0.0),
            lambda2: Complex64::new(0.01, 0.0),
            eta: 0.202,
            epsilon: 0.01,
            gamma: 0.0,
            nbar: 5.0,
            theta: PI / 4.0,
            phi: 0.0,
            modulation: Modulation::Constant,
            fock_cutoff,
            standard_matrix_element: false,
            nu: 0.0,
            omega1: 0.0,
            omega2: 0.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let finite = [
            ("lambda1", self.lambda1.re),
            ("lambda1", self.lambda1.im),
            ("lambda2", self.lambda2.re),
            ("lambda2", self.lambda2.im),
            ("eta", self.eta),
            ("epsilon", self.epsilon),
            ("gamma", self.gamma),
            ("nbar", self.nbar),
            ("theta", self.theta),
            ("phi", self.phi),
        ];
        if let Some((name, _)) = finite.iter().find(|(_, v)| !v.is_finite()) {
            return Err(Error::InvalidParameter(format!("{name} must be finite")));
        }
        if self.eta < 0.0 {
            return Err(Error::InvalidParameter(format!("eta must be ≥ 0, got {}", self.eta)));
        }
        if self.gamma < 0.0 {
            return Err(Error::InvalidParameter(format!("gamma must be ≥ 0, got {}", self.gamma)));
        }
        if self.nbar < 0.0 {
            return Err(Error::InvalidParameter(format!("nbar must be ≥ 0, got {}", self.nbar)));
        }
        if !(0.0..=TAU).contains(&self.theta) {
            return Err(Error::InvalidParameter(format!("theta must lie in [0, 2π], got {}", self.theta)));
        }
        if !(0.0..=PI).contains(&self.phi) {
            return Err(Error::InvalidParameter(format!("phi must lie in [0, π], got {}", self.phi)));
        }
        if self.fock_cutoff < 2 {
            return Err(Error::Cutoff {
                cutoff: self.fock_cutoff,
                reason: "need at least two phonons of headroom".into(),
            });
        }
        self.modulation.validate()
    }
}

impl Default for SimParams {
    /// [`SimParams::with_cutoff`] with the cutoff fitted to n̄ = 5 at a 1e-10 tail.
    fn default() -> Self {
        let field = crate::experiments::coherent_amplitudes(5.0, 1e-10).expect("valid defaults");
        Self::with_cutoff(field.cutoff())
    }
}
