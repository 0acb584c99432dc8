use super::SimParams;
use crate::{Error, Result};

#[cfg(debug_assertions)]
static CORRUPT_MODE_STRENGTH: std::sync::atomic::AtomicBool = std::sync::atomic::AtomicBool::new(false);

/// Mutation hook for the self-test's negative control: scales every
/// [`mode_strength`] by 1.01 while set.
#[cfg(debug_assertions)]
#[doc(hidden)]
pub fn set_mode_strength_corruption(on: bool) {
    CORRUPT_MODE_STRENGTH.store(on, std::sync::atomic::Ordering::SeqCst);
}

/// Associated Laguerre polynomial `L_n^k(x)` by upward three-term recurrence.
pub fn laguerre(n: usize, k: usize, x: f64) -> f64 {
    let k = k as f64;
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + k - x;
    for m in 1..n {
        let m = m as f64;
        let next = ((2.0 * m + 1.0 + k - x) * cur - (m + k) * prev) / (m + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Diagonal element `⟨n|𝓔_k(a†a)|n⟩ = −(ε/2)·(n!/(n+k)!)·L_n^k(η²)·e^{−η²/2}`.
///
/// With `standard_matrix_element` set, the ratio becomes `√(n!/(n+k)!)` and
/// the magnitude factor `η^k` is included.
pub fn mode_strength(n: usize, k: usize, params: &SimParams) -> Result<f64> {
    if n + k > params.fock_cutoff {
        return Err(Error::Cutoff {
            cutoff: params.fock_cutoff,
            reason: format!("mode function index n + k = {} exceeds it", n + k),
        });
    }
    let eta2 = params.eta * params.eta;
    // n!/(n+k)! as a running product
    let ratio: f64 = (1..=k).map(|j| 1.0 / (n + j) as f64).product();
    let (ratio, magnitude) =
        if params.standard_matrix_element { (ratio.sqrt(), params.eta.powi(k as i32)) } else { (ratio, 1.0) };
    let value = -0.5 * params.epsilon * ratio * magnitude * laguerre(n, k, eta2) * (-0.5 * eta2).exp();

    #[cfg(debug_assertions)]
    if CORRUPT_MODE_STRENGTH.load(std::sync::atomic::Ordering::SeqCst) {
        return Ok(value * 1.01);
    }
    Ok(value)
}

/// Coupling amplitude `⟨m+1| R |m⟩` of the phonon-creating sideband operator
/// (without λ). By default `R = 𝓔_0(a†a)·a†`, i.e. `√(m+1)·𝓔_0(m+1)`; with
/// `standard_matrix_element` it is the first-sideband element `𝓔_1(m)`.
pub fn sideband_element(m: usize, params: &SimParams) -> Result<f64> {
    if params.standard_matrix_element {
        mode_strength(m, 1, params)
    } else {
        Ok(((m + 1) as f64).sqrt() * mode_strength(m + 1, 0, params)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(eta: f64, epsilon: f64) -> SimParams {
        SimParams { eta, epsilon, ..SimParams::with_cutoff(40) }
    }

    /// `L_n^k(x) = Σ_j (−x)^j C(n+k, n−j) / j!`
    fn laguerre_sum(n: usize, k: usize, x: f64) -> f64 {
        let binom = |a: usize, b: usize| -> f64 { (0..b).map(|i| (a - i) as f64 / (i + 1) as f64).product() };
        let mut fact = 1.0;
        let mut total = 0.0;
        for j in 0..=n {
            if j > 0 {
                fact *= j as f64;
            }
            total += (-x).powi(j as i32) * binom(n + k, n - j) / fact;
        }
        total
    }

    #[test]
    fn laguerre_examples() {
        assert_eq!(laguerre(0, 3, 0.7), 1.0);
        assert!((laguerre(1, 2, 0.5) - 2.5).abs() < 1e-15);
        assert!((laguerre(2, 0, 1.0) + 0.5).abs() < 1e-15);
    }

    #[test]
    fn laguerre_matches_explicit_sum() {
        for n in 0..25 {
            for k in 0..4 {
                for &x in &[0.0, 0.040804, 0.5, 2.0] {
                    let a = laguerre(n, k, x);
                    let b = laguerre_sum(n, k, x);
                    assert!((a - b).abs() <= 1e-11 * b.abs().max(1.0), "n={n} k={k} x={x}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn mode_strength_examples() {
        assert!((mode_strength(0, 0, &params(0.0, 1.0)).unwrap() + 0.5).abs() < 1e-15);
        // -0.005 exp(-η²/2) with η = 0.202
        assert!((mode_strength(0, 1, &params(0.202, 0.01)).unwrap() + 0.004_899_023_563_157_436).abs() < 1e-15);
        // -0.5 (1 - η²) exp(-η²/2)
        assert!((mode_strength(1, 0, &params(0.202, 1.0)).unwrap() + 0.469_912_380_568_635_9).abs() < 1e-14);
    }

    #[test]
    fn standard_form_differs_only_for_k_positive() {
        let mut p = params(0.202, 0.01);
        let default_k0 = mode_strength(3, 0, &p).unwrap();
        let default_k2 = mode_strength(3, 2, &p).unwrap();
        p.standard_matrix_element = true;
        assert_eq!(mode_strength(3, 0, &p).unwrap(), default_k0);
        let std_k2 = mode_strength(3, 2, &p).unwrap();
        // ratio 3!/5! = 1/20 → √(1/20) η²
        let expected = default_k2 * 20.0 * (1.0f64 / 20.0).sqrt() * 0.202 * 0.202;
        assert!((std_k2 - expected).abs() < 1e-16);
    }

    #[test]
    fn cutoff_enforced() {
        let p = SimParams::with_cutoff(5);
        assert!(mode_strength(5, 0, &p).is_ok());
        assert!(matches!(mode_strength(5, 1, &p), Err(Error::Cutoff { .. })));
    }

    #[test]
    fn large_index_ratio_is_finite() {
        let p = params(0.202, 0.01);
        let v = mode_strength(20, 20, &p).unwrap();
        assert!(v.is_finite() && v != 0.0);
    }
}
