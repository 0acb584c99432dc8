use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Shared time profile `ζ(t)` of all laser couplings.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Modulation {
    /// `ζ = 1`.
    Constant,
    /// `ζ(t) = sech(t / 2τ)`, peaked at `t = 0`.
    Sech { tau: f64 },
}

impl Modulation {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Modulation::Constant => Ok(()),
            Modulation::Sech { tau } if tau > 0.0 && tau.is_finite() => Ok(()),
            Modulation::Sech { tau } => Err(Error::InvalidParameter(format!("sech width tau must be > 0, got {tau}"))),
        }
    }

    pub fn is_constant(&self) -> bool {
        matches!(self, Modulation::Constant)
    }

    pub fn value(&self, t: f64) -> f64 {
        match *self {
            Modulation::Constant => 1.0,
            Modulation::Sech { tau } => 1.0 / (t / (2.0 * tau)).cosh(),
        }
    }

    /// `Θ(t) = ∫₀ᵗ ζ`.
    pub fn integral(&self, t: f64) -> f64 {
        match *self {
            Modulation::Constant => t,
            Modulation::Sech { tau } => 4.0 * tau * (t / (4.0 * tau)).tanh().atan(),
        }
    }
}

/// `Θ(t) = ∫₀ᵗ ζ(s) ds`: `t` for constant coupling, `4τ·atan(tanh(t/4τ))`
/// for the sech profile (limit `πτ`).
pub fn modulation_integral(modulation: &Modulation, t: f64) -> f64 {
    modulation.integral(t)
}
