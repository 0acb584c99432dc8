use num_complex::Complex64;

use super::{full_index, full_layout, sideband_element, Level, SimParams};
use crate::quantum::{hermitian_spectrum, CMatrix, CVector, HilbertLayout, Spectrum};
use crate::{Error, Result};

/// `|fock; ion1 ion2⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BasisState {
    pub fock: usize,
    pub ion1: Level,
    pub ion2: Level,
}

impl BasisState {
    pub fn excitations(&self) -> usize {
        self.ion1.is_excited() as usize + self.ion2.is_excited() as usize
    }

    /// Conserved quantity `fock − excitations`, i.e. the block index.
    pub fn block_index(&self) -> i64 {
        self.fock as i64 - self.excitations() as i64
    }
}

impl std::fmt::Display for BasisState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "|{};{}{}⟩", self.fock, self.ion1.symbol(), self.ion2.symbol())
    }
}

/// Phonon offset and ion levels of the nine block states, in canonical order.
const TEMPLATE: [(usize, Level, Level); 9] = [
    (0, Level::A, Level::A),
    (1, Level::A, Level::B),
    (1, Level::A, Level::C),
    (1, Level::B, Level::A),
    (2, Level::B, Level::B),
    (2, Level::B, Level::C),
    (1, Level::C, Level::A),
    (2, Level::C, Level::B),
    (2, Level::C, Level::C),
];

/// States of one excitation block: `|n;aa⟩, |n+1;ab⟩, |n+1;ac⟩, |n+1;ba⟩,
/// |n+2;bb⟩, |n+2;bc⟩, |n+1;ca⟩, |n+2;cb⟩, |n+2;cc⟩` with entries outside
/// `0..=cutoff` removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockBasis {
    block_index: i64,
    cutoff: usize,
    states: Vec<BasisState>,
}

impl BlockBasis {
    pub fn new(block_index: i64, cutoff: usize) -> Result<Self> {
        if block_index < -2 || block_index > cutoff as i64 {
            return Err(Error::Cutoff {
                cutoff,
                reason: format!("block index {block_index} lies outside -2..={cutoff}"),
            });
        }
        let states = TEMPLATE
            .iter()
            .filter_map(|&(offset, ion1, ion2)| {
                let fock = block_index + offset as i64;
                (fock >= 0 && fock <= cutoff as i64).then_some(BasisState { fock: fock as usize, ion1, ion2 })
            })
            .collect();
        Ok(Self { block_index, cutoff, states })
    }

    pub fn block_index(&self) -> i64 {
        self.block_index
    }

    pub fn states(&self) -> &[BasisState] {
        &self.states
    }

    pub fn dim(&self) -> usize {
        self.states.len()
    }

    /// True for the top blocks that lose states to the Fock cutoff.
    pub fn is_truncated(&self) -> bool {
        self.block_index + 2 > self.cutoff as i64
    }

    pub fn full_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.states.iter().map(|s| full_index(self.cutoff, s.fock, s.ion1, s.ion2))
    }
}

/// Coupling matrix `C_jk = ⟨ψ_j|H_int|ψ_k⟩` of one block (ζ = 1) with its spectrum.
#[derive(Clone, Debug)]
pub struct BlockMatrix {
    basis: BlockBasis,
    coupling: CMatrix,
    spectrum: Spectrum,
}

impl BlockMatrix {
    fn assemble(basis: BlockBasis, params: &SimParams) -> Result<Self> {
        let states = basis.states();
        let dim = states.len();
        let mut coupling = CMatrix::zeros(dim, dim);
        for (k, src) in states.iter().enumerate() {
            for (j, dst) in states.iter().enumerate() {
                if dst.fock != src.fock + 1 {
                    continue;
                }
                let raised = |from: Level, to: Level| from == Level::A && to.is_excited();
                let rate = |to: Level| if to == Level::B { params.lambda1 } else { params.lambda2 };
                let amp = if raised(src.ion1, dst.ion1) && src.ion2 == dst.ion2 {
                    rate(dst.ion1)
                } else if raised(src.ion2, dst.ion2) && src.ion1 == dst.ion1 {
                    rate(dst.ion2)
                } else {
                    continue;
                };
                let element = amp * sideband_element(src.fock, params)?;
                coupling[(j, k)] += element;
                coupling[(k, j)] += element.conj();
            }
        }
        let spectrum = hermitian_spectrum(&coupling)?;
        Ok(Self { basis, coupling, spectrum })
    }

    pub fn basis(&self) -> &BlockBasis {
        &self.basis
    }

    pub fn coupling(&self) -> &CMatrix {
        &self.coupling
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    /// `V e^{−i Z phase} V† amplitudes`.
    pub fn propagate(&self, amplitudes: &CVector, phase: f64) -> CVector {
        let v = self.spectrum.eigenvectors();
        let mut coeffs = v.ad_mul(amplitudes);
        for (c, &z) in coeffs.iter_mut().zip(self.spectrum.eigenvalues()) {
            *c *= Complex64::from_polar(1.0, -z * phase);
        }
        v * coeffs
    }
}

/// Block `n` with its full nine-state basis. Requires `n + 2 ≤ cutoff`.
pub fn build_block(n: i64, params: &SimParams) -> Result<BlockMatrix> {
    if n + 2 > params.fock_cutoff as i64 {
        return Err(Error::Cutoff {
            cutoff: params.fock_cutoff,
            reason: format!("block {n} needs Fock states up to {}", n + 2),
        });
    }
    BlockMatrix::assemble(BlockBasis::new(n, params.fock_cutoff)?, params)
}

/// Every block `n = −2..=cutoff`; together they partition the full space.
#[derive(Clone, Debug)]
pub struct BlockSystem {
    cutoff: usize,
    layout: HilbertLayout,
    blocks: Vec<BlockMatrix>,
    /// full index → (block position, position within block)
    locator: Vec<(usize, usize)>,
}

impl BlockSystem {
    pub fn new(params: &SimParams) -> Result<Self> {
        params.validate()?;
        let cutoff = params.fock_cutoff;
        let layout = full_layout(cutoff);
        let blocks = (-2..=cutoff as i64)
            .map(|n| BlockMatrix::assemble(BlockBasis::new(n, cutoff)?, params))
            .collect::<Result<Vec<_>>>()?;
        let mut locator = vec![(usize::MAX, usize::MAX); layout.total_dim()];
        for (b, block) in blocks.iter().enumerate() {
            for (j, idx) in block.basis.full_indices().enumerate() {
                debug_assert_eq!(locator[idx].0, usize::MAX, "blocks overlap");
                locator[idx] = (b, j);
            }
        }
        debug_assert!(locator.iter().all(|&(b, _)| b != usize::MAX), "blocks miss a state");
        Ok(Self { cutoff, layout, blocks, locator })
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn layout(&self) -> &HilbertLayout {
        &self.layout
    }

    pub fn blocks(&self) -> &[BlockMatrix] {
        &self.blocks
    }

    /// Block position and in-block position of a full-space index.
    pub fn locate(&self, full_index: usize) -> (usize, usize) {
        self.locator[full_index]
    }

    pub fn scatter(&self, full: &CVector) -> Vec<CVector> {
        self.blocks
            .iter()
            .map(|b| CVector::from_iterator(b.basis.dim(), b.basis.full_indices().map(|i| full[i])))
            .collect()
    }

    pub fn gather(&self, parts: &[CVector]) -> CVector {
        let mut full = CVector::zeros(self.layout.total_dim());
        for (block, part) in self.blocks.iter().zip(parts) {
            for (idx, &amp) in block.basis.full_indices().zip(part.iter()) {
                full[idx] = amp;
            }
        }
        full
    }

    /// Rejects amplitudes in blocks that lack two phonons of headroom.
    pub fn check_support(&self, full: &CVector) -> Result<()> {
        for block in self.blocks.iter().filter(|b| b.basis.is_truncated()) {
            if block.basis.full_indices().any(|i| full[i].norm() > 0.0) {
                return Err(Error::SupportExceedsCutoff { block: block.basis.block_index, cutoff: self.cutoff });
            }
        }
        Ok(())
    }
}
