use num_complex::Complex64;

use super::{Level, SimParams};
use crate::quantum::CMatrix;

/// Truncated annihilation operator on Fock states `0..=cutoff`.
pub fn ladder_lowering(cutoff: usize) -> CMatrix {
    let mut a = CMatrix::zeros(cutoff + 1, cutoff + 1);
    for n in 1..=cutoff {
        a[(n - 1, n)] = Complex64::new((n as f64).sqrt(), 0.0);
    }
    a
}

/// Normal-ordered expansion
/// `𝓔_k(a†a) = −(ε/2) e^{−η²/2} Σ_n (iη)^{2n+k} / (n!(n+k)!) · a†ⁿ aⁿ`,
/// assembled from dense ladder operators on the truncated Fock space.
pub fn mode_function_operator(k: usize, params: &SimParams) -> CMatrix {
    let cutoff = params.fock_cutoff;
    let a = ladder_lowering(cutoff);
    let ad = a.adjoint();
    let i_eta = Complex64::new(0.0, params.eta);
    let prefactor = -0.5 * params.epsilon * (-0.5 * params.eta * params.eta).exp();

    // coefficient of term n: (iη)^{2n+k} / (n! (n+k)!)
    let mut coeff = i_eta.powu(k as u32) / (1..=k).map(|j| j as f64).product::<f64>();
    let mut normal = CMatrix::identity(cutoff + 1, cutoff + 1);
    let mut total = normal.scale(0.0);
    for n in 0..=cutoff {
        if n > 0 {
            normal = &ad * &normal * &a;
            coeff *= i_eta * i_eta / (n as f64 * (n + k) as f64);
        }
        total += &normal * coeff;
    }
    total * Complex64::new(prefactor, 0.0)
}

/// Phonon-creating sideband operator on the Fock space, without λ.
fn sideband_operator(params: &SimParams) -> CMatrix {
    if params.standard_matrix_element {
        first_sideband_series(params)
    } else {
        mode_function_operator(0, params) * ladder_lowering(params.fock_cutoff).adjoint()
    }
}

/// `−(ε/2) e^{−η²/2} Σ_n (−1)^n η^{2n+1} / (n!(n+1)!) · a†^{n+1} aⁿ`, the
/// first blue sideband with the global phase `i` of `(iη)^{2n+1}` dropped.
fn first_sideband_series(params: &SimParams) -> CMatrix {
    let cutoff = params.fock_cutoff;
    let a = ladder_lowering(cutoff);
    let ad = a.adjoint();
    let eta2 = params.eta * params.eta;
    let prefactor = -0.5 * params.epsilon * (-0.5 * eta2).exp();
    let mut coeff = params.eta;
    let mut normal = CMatrix::identity(cutoff + 1, cutoff + 1);
    let mut total = CMatrix::zeros(cutoff + 1, cutoff + 1);
    for n in 0..=cutoff {
        if n > 0 {
            normal = &ad * &normal * &a;
            coeff *= -eta2 / (n as f64 * (n + 1) as f64);
        }
        total += (&ad * &normal).scale(coeff);
    }
    total.scale(prefactor)
}

fn flip(to: Level, from: Level) -> CMatrix {
    let mut s = CMatrix::zeros(3, 3);
    s[(to.index(), from.index())] = Complex64::new(1.0, 0.0);
    s
}

/// Dense interaction-picture Hamiltonian (ζ = 1) on `ion1 ⊗ ion2 ⊗ field`:
/// `Σ_ions Σ_{u=b,c} λ_u |u⟩⟨a| ⊗ R + h.c.`, with Fock-space operators
/// truncated at the cutoff.
pub fn build_full_hamiltonian(params: &SimParams) -> CMatrix {
    let sideband = sideband_operator(params);
    let id3 = CMatrix::identity(3, 3);
    let mut h = CMatrix::zeros(9 * (params.fock_cutoff + 1), 9 * (params.fock_cutoff + 1));
    for (upper, rate) in [(Level::B, params.lambda1), (Level::C, params.lambda2)] {
        let s = flip(upper, Level::A);
        let on_ion1 = s.kronecker(&id3).kronecker(&sideband);
        let on_ion2 = id3.kronecker(&s).kronecker(&sideband);
        h += (on_ion1 + on_ion2) * rate;
    }
    let adj = h.adjoint();
    h + adj
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{build_block, full_index, mode_strength, BlockSystem};
    use crate::quantum::hermiticity_defect;

    fn fig1_params(cutoff: usize) -> SimParams {
        SimParams::with_cutoff(cutoff)
    }

    #[test]
    fn zero_couplings_give_zero_matrix() {
        let mut p = fig1_params(6);
        p.lambda1 = Complex64::new(0.0, 0.0);
        p.lambda2 = Complex64::new(0.0, 0.0);
        assert!(build_full_hamiltonian(&p).iter().all(|x| x.norm() == 0.0));
    }

    #[test]
    fn hermitian_by_construction() {
        let mut p = fig1_params(9);
        p.lambda1 = Complex64::from_polar(1.0, 0.4);
        p.lambda2 = Complex64::new(0.3, -0.2);
        assert!(hermiticity_defect(&build_full_hamiltonian(&p)) <= 1e-14);
    }

    #[test]
    fn mode_function_series_matches_closed_form() {
        let p = SimParams { epsilon: 1.0, ..fig1_params(15) };
        let e0 = mode_function_operator(0, &p);
        for n in 0..=15 {
            let closed = mode_strength(n, 0, &p).unwrap();
            assert!((e0[(n, n)].re - closed).abs() < 1e-14 && e0[(n, n)].im.abs() < 1e-15);
        }
        // k = 1 carries the extra factor iη
        let e1 = mode_function_operator(1, &p);
        for n in 0..15 {
            let closed = mode_strength(n, 1, &p).unwrap();
            assert!((e1[(n, n)] - Complex64::new(0.0, p.eta) * closed).norm() < 1e-14);
        }
        assert!(e0.iter().enumerate().all(|(i, x)| i % 17 == 0 || x.norm() == 0.0));
    }

    #[test]
    fn excitation_number_is_conserved() {
        let p = SimParams { epsilon: 1.0, ..fig1_params(8) };
        let h = build_full_hamiltonian(&p);
        let sys = BlockSystem::new(&p).unwrap();
        for i in 0..h.nrows() {
            for j in 0..h.ncols() {
                if sys.locate(i).0 != sys.locate(j).0 {
                    assert!(h[(i, j)].norm() <= 1e-14);
                }
            }
        }
    }

    #[test]
    fn block_entries_match_dense_operator() {
        let mut p = fig1_params(12);
        p.lambda2 = Complex64::new(0.01, 0.0);
        let h = build_full_hamiltonian(&p);
        let block = build_block(0, &p).unwrap();
        let idx: Vec<usize> = block.basis().full_indices().collect();
        for (j, &fj) in idx.iter().enumerate() {
            for (k, &fk) in idx.iter().enumerate() {
                assert!((block.coupling()[(j, k)] - h[(fj, fk)]).norm() <= 1e-12);
            }
        }
        // one explicit element: ⟨1;ba| H |0;aa⟩ = λ₁ √1 𝓔₀(1)
        let e = h[(full_index(12, 1, Level::B, Level::A), full_index(12, 0, Level::A, Level::A))];
        assert!((e.re - mode_strength(1, 0, &p).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn direct_sum_of_blocks_equals_dense() {
        for standard in [false, true] {
            let mut p = SimParams { epsilon: 1.0, standard_matrix_element: standard, ..fig1_params(12) };
            p.lambda1 = Complex64::from_polar(1.0, 0.3);
            p.lambda2 = Complex64::new(0.2, 0.1);
            let h = build_full_hamiltonian(&p);
            let sys = BlockSystem::new(&p).unwrap();
            let mut assembled = CMatrix::zeros(h.nrows(), h.ncols());
            for b in sys.blocks() {
                let idx: Vec<usize> = b.basis().full_indices().collect();
                for (j, &fj) in idx.iter().enumerate() {
                    for (k, &fk) in idx.iter().enumerate() {
                        assembled[(fj, fk)] = b.coupling()[(j, k)];
                    }
                }
            }
            assert!(crate::quantum::max_abs_diff(&assembled, &h) <= 1e-12, "standard = {standard}");
        }
    }
}
