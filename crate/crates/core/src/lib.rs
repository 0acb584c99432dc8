//! Exact dynamics and entanglement of two three-level trapped ions that share
//! one quantized vibrational mode and are driven by a time-modulated laser.
//!
//! * [`quantum`]: dense states, partial traces, spectra, entropies.
//! * [`model`]: the Lamb-Dicke interaction Hamiltonian and its excitation blocks.
//! * [`dynamics`]: pure-state propagation and intrinsic (Milburn) decoherence.
//! * [`entanglement`]: I-concurrence, negativity, relative entropy.
//! * [`experiments`]: initial states, parameter sweeps, sudden birth/death detection.
//! * [`cli`]: configuration files, datasets and the `ionpair` command line.
//!
//! Times are scaled by the `a ↔ b` coupling, `|λ₁| = 1`.

pub mod cli;
pub mod dynamics;
pub mod entanglement;
mod error;
pub mod experiments;
pub mod model;
pub mod oracle;
pub mod quantum;

#[cfg(test)]
pub(crate) mod testing;

pub use error::{Error, Result};
