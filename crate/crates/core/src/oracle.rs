//! Independent reference computations used by the self-test and the test
//! suites: adaptive quadrature and mode-function values frozen from an
//! arbitrary-precision evaluation.

/// Mode-function values `(n, k, η, ε, value)` evaluated at 30 significant
/// digits, rounded to double precision.
pub const FROZEN_MODE_STRENGTH: [(usize, usize, f64, f64, f64); 6] = [
    (0, 0, 0.0, 1.0, -0.5),
    (0, 1, 0.202, 0.01, -0.004_899_023_563_157_436),
    (1, 0, 0.202, 1.0, -0.469_912_380_568_636),
    (5, 0, 0.202, 0.01, -0.003_939_756_438_367_114),
    (7, 1, 0.202, 0.01, -0.004_227_441_469_055_037),
    (12, 2, 0.3, 1.0, -0.162_989_296_990_115_7),
];

/// Adaptive Simpson quadrature of `f` on `[a, b]` to absolute tolerance `tol`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
        h / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn refine<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = simpson(fa, flm, fm, m - a);
        let right = simpson(fm, frm, fb, b - m);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        refine(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + refine(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
    let (fa, fb, fm) = (f(a), f(b), f(0.5 * (a + b)));
    let whole = simpson(fa, fm, fb, b - a);
    refine(&f, a, b, fa, fm, fb, whole, tol, 50)
}
