//! Panelized Gauss–Legendre quadrature for smooth oscillatory integrands.
//!
//! A 16-point rule integrates about half an oscillation of a smooth phase to
//! machine precision, so panels are sized from a bound on the local phase
//! derivative and the result converges without adaptivity; callers that need
//! an error estimate compare against half-width panels.

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::kahan::KahanSum;

const GL_DEGREE: usize = 16;

/// Nodes and weights of the 16-point Gauss–Legendre rule on [-1, 1].
///
/// Computed once by Newton iteration on P_16 from Chebyshev starting guesses;
/// avoids hand-transcribed tables.
pub fn gauss_legendre_16() -> &'static ([f64; GL_DEGREE], [f64; GL_DEGREE]) {
    static RULE: OnceLock<([f64; GL_DEGREE], [f64; GL_DEGREE])> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = GL_DEGREE;
        let mut nodes = [0.0; GL_DEGREE];
        let mut weights = [0.0; GL_DEGREE];
        for i in 0..n {
            // Chebyshev-like initial guess for the i-th root of P_n.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre_with_derivative(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(n, x);
            nodes[n - 1 - i] = x;
            weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        (nodes, weights)
    })
}

/// Value and derivative of the Legendre polynomial P_n at x.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Integrate `f` over `[a, b]` with panels of width at most `max_width`.
pub fn integrate_panels<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, max_width: f64) -> f64 {
    debug_assert!(b >= a && max_width > 0.0);
    let (nodes, weights) = gauss_legendre_16();
    let n_panels = ((b - a) / max_width).ceil().max(1.0) as usize;
    let width = (b - a) / n_panels as f64;
    let mut acc = KahanSum::new();
    for p in 0..n_panels {
        let lo = a + p as f64 * width;
        let half = 0.5 * width;
        let mid = lo + half;
        for (x, w) in nodes.iter().zip(weights.iter()) {
            acc.add(w * half * f(mid + half * x));
        }
    }
    acc.value()
}

/// Integrate a complex-valued `f` over the real parameter range `[a, b]`.
pub fn integrate_panels_complex<F: Fn(f64) -> Complex64>(
    f: &F,
    a: f64,
    b: f64,
    max_width: f64,
) -> Complex64 {
    let (nodes, weights) = gauss_legendre_16();
    let n_panels = ((b - a) / max_width).ceil().max(1.0) as usize;
    let width = (b - a) / n_panels as f64;
    let mut re = KahanSum::new();
    let mut im = KahanSum::new();
    for p in 0..n_panels {
        let lo = a + p as f64 * width;
        let half = 0.5 * width;
        let mid = lo + half;
        for (x, w) in nodes.iter().zip(weights.iter()) {
            let v = f(mid + half * x) * (w * half);
            re.add(v.re);
            im.add(v.im);
        }
    }
    Complex64::new(re.value(), im.value())
}
