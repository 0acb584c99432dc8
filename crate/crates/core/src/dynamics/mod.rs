//! Time evolution under the modulated coupling `ζ(t)`.
//!
//! Because every coupling shares the same scalar profile, the generator at
//! time `t` is `ζ(t) H` with a fixed `H`, and the propagator is
//! `exp(−i H Θ(t))` with `Θ(t) = ∫₀ᵗ ζ`. The pure path diagonalizes `H` block
//! by block; a dense full-space propagator serves as its oracle. Intrinsic
//! decoherence is solved in the eigenbasis of `H` (closed form) and by an
//! explicit Kraus sum.

mod milburn;
mod modulation;
mod pure;

pub use milburn::{
    evolve_milburn, milburn_closed_form, milburn_kraus, milburn_kraus_adaptive, KrausOutcome, MilburnBlockEvolution,
    MilburnChannel, KRAUS_DEFICIT_TARGET, KRAUS_MAX_TERMS,
};
pub use modulation::{modulation_integral, Modulation};
pub use pure::{evolve_pure, evolve_pure_dense, BlockPropagator, DensePropagator};

use crate::quantum::{DensityMatrix, PureState};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    BlockEigen,
    DenseOracle,
    MilburnClosed,
    MilburnKraus { terms: usize },
}

#[derive(Clone, Debug)]
pub enum States {
    Pure(Vec<PureState>),
    Mixed(Vec<DensityMatrix>),
}

impl States {
    pub fn len(&self) -> usize {
        match self {
            States::Pure(v) => v.len(),
            States::Mixed(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// States on a scaled-time grid.
#[derive(Clone, Debug)]
pub struct EvolutionResult {
    pub times: Vec<f64>,
    pub states: States,
    pub method: Method,
}

impl EvolutionResult {
    pub fn pure_states(&self) -> Option<&[PureState]> {
        match &self.states {
            States::Pure(v) => Some(v),
            States::Mixed(_) => None,
        }
    }

    pub fn mixed_states(&self) -> Option<&[DensityMatrix]> {
        match &self.states {
            States::Mixed(v) => Some(v),
            States::Pure(_) => None,
        }
    }
}

/// Nonempty, finite, strictly increasing, starting at 0.
pub fn validate_time_grid(times: &[f64]) -> Result<()> {
    match times.first() {
        None => return Err(Error::InvalidGrid("empty".into())),
        Some(&t0) if t0 != 0.0 => return Err(Error::InvalidGrid(format!("must start at 0, starts at {t0}"))),
        _ => {}
    }
    if times.iter().any(|t| !t.is_finite()) {
        return Err(Error::InvalidGrid("non-finite time".into()));
    }
    if let Some(w) = times.windows(2).find(|w| w[1] <= w[0]) {
        return Err(Error::InvalidGrid(format!("not strictly increasing at {} → {}", w[0], w[1])));
    }
    Ok(())
}
