//! Two three-level ions sharing one vibrational mode in the Lamb-Dicke regime.
//!
//! The interaction-picture Hamiltonian couples `|a⟩ → |b⟩` (rate λ₁) and
//! `|a⟩ → |c⟩` (rate λ₂) on each ion while creating one phonon, dressed by the
//! diagonal mode function `𝓔(a†a)`. It conserves `fock − (number of excited
//! ions)`, so the full space splits into blocks of at most nine states.

mod blocks;
mod hamiltonian;
mod mode;
mod params;

pub use blocks::{build_block, BasisState, BlockBasis, BlockMatrix, BlockSystem};
pub use hamiltonian::{build_full_hamiltonian, ladder_lowering, mode_function_operator};
#[cfg(debug_assertions)]
pub use mode::set_mode_strength_corruption;
pub use mode::{laguerre, mode_strength, sideband_element};
pub use params::{Level, SimParams};

use crate::quantum::HilbertLayout;

pub const ION1: &str = "ion1";
pub const ION2: &str = "ion2";
pub const FIELD: &str = "field";

/// `ion1 ⊗ ion2 ⊗ field` with Fock states `0..=cutoff`.
pub fn full_layout(cutoff: usize) -> HilbertLayout {
    HilbertLayout::new([(ION1, 3), (ION2, 3), (FIELD, cutoff + 1)]).expect("static layout is valid")
}

/// Flat index of `|fock; ion1 ion2⟩` in [`full_layout`].
#[inline]
pub fn full_index(cutoff: usize, fock: usize, ion1: Level, ion2: Level) -> usize {
    (ion1.index() * 3 + ion2.index()) * (cutoff + 1) + fock
}
