//! Model parameters and single-fermion spectrum of the cyclic XY chain.
//!
//! The chain maps to free fermions with dispersion
//! `E(φ) = √(ε(φ)² + Γ(φ)²)`, `ε = h − cos φ`, `Γ = γ sin φ`, living on two
//! momentum sets (integer and half-integer `q`, `φ = 2πq/N`) selected by
//! fermion-number parity. This module owns the spectrum, its derivatives up to
//! fifth order (needed by the Airy and suppression formulas), the Bogolyubov
//! angle, the maximal group velocity `V` with its quartic characterization,
//! the threshold time `t_th = N/V`, and the complex branch points of `E`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Parameters of the cyclic XY chain: size `N` (even), field `h`, anisotropy `γ`.
///
/// Local unitary rotations map `(h, γ)` to `(|h|, |γ|)`, so the spectrum is
/// computed from the absolute values; the signs as given are retained for
/// reporting.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    n_sites: usize,
    h_raw: f64,
    gamma_raw: f64,
}

impl ModelParams {
    pub fn new(n_sites: usize, h: f64, gamma: f64) -> Result<Self> {
        if n_sites < 4 || n_sites % 2 != 0 {
            return Err(Error::InvalidChainSize(n_sites));
        }
        if !h.is_finite() || !gamma.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "h and gamma must be finite, got h = {h}, gamma = {gamma}"
            )));
        }
        Ok(Self {
            n_sites,
            h_raw: h,
            gamma_raw: gamma,
        })
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    /// Canonical field `|h|` used in all spectral formulas.
    pub fn h(&self) -> f64 {
        self.h_raw.abs()
    }

    /// Canonical anisotropy `|γ|`.
    pub fn gamma(&self) -> f64 {
        self.gamma_raw.abs()
    }

    /// Field as given at construction (sign retained).
    pub fn h_raw(&self) -> f64 {
        self.h_raw
    }

    /// Anisotropy as given at construction (sign retained).
    pub fn gamma_raw(&self) -> f64 {
        self.gamma_raw
    }

    /// Distance from the quantum phase transition, `ε = h − 1`.
    pub fn epsilon(&self) -> f64 {
        self.h() - 1.0
    }

    /// `φ(q) = 2πq/N`.
    pub fn phi_of_q(&self, q: f64) -> f64 {
        2.0 * std::f64::consts::PI * q / self.n_sites as f64
    }

    /// Asymptotic formulas of the winding analysis require `h ≥ 1`, `γ ∈ [0, 1]`.
    pub fn check_asymptotic_domain(&self) -> Result<()> {
        if self.h() < 1.0 || self.gamma() > 1.0 {
            return Err(Error::regime(format!(
                "asymptotics require h >= 1 and gamma in [0, 1], got h = {}, gamma = {}",
                self.h(),
                self.gamma()
            )));
        }
        Ok(())
    }
}

/// Fermion-number parity selecting one of the two momentum sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// Integer momenta `q ∈ {−N/2+1, …, N/2}`.
    Odd,
    /// Half-integer momenta `q ∈ {−N/2+1/2, …, N/2−1/2}`.
    Even,
}

/// One of the two N-element momentum sets.
#[derive(Debug, Clone)]
pub struct MomentumSet {
    pub parity: Parity,
    /// Momentum labels `q` (integers or half-integers).
    pub values: Vec<f64>,
}

impl MomentumSet {
    /// Momenta in radians, `φ(q) = 2πq/N`.
    pub fn phis(&self, params: &ModelParams) -> impl Iterator<Item = f64> + '_ {
        let n = params.n_sites as f64;
        self.values
            .iter()
            .map(move |q| 2.0 * std::f64::consts::PI * q / n)
    }
}

/// The momentum set of the given parity sector.
pub fn momentum_set(parity: Parity, params: &ModelParams) -> MomentumSet {
    let half = params.n_sites as i64 / 2;
    let values = match parity {
        Parity::Odd => (1 - half..=half).map(|k| k as f64).collect(),
        Parity::Even => (-half..half).map(|k| k as f64 + 0.5).collect(),
    };
    MomentumSet { parity, values }
}

/// Spectrum data at a single momentum.
#[derive(Debug, Clone, Copy)]
pub struct SpectrumPoint {
    pub phi: f64,
    /// `E(φ) ≥ 0`.
    pub energy: f64,
    /// `ε(φ) = h − cos φ`.
    pub epsilon: f64,
    /// `Γ(φ) = γ sin φ`.
    pub gamma_comp: f64,
    /// Bogolyubov angle `θ(φ) = arctan(Γ/ε)` (continuous-momentum form).
    pub theta: f64,
    /// Group velocity `v(φ) = ∂E/∂φ`, NaN where the spectrum vanishes.
    pub velocity: f64,
}

/// Fermion dispersion at momentum `φ` (any real; 2π-periodic).
pub fn dispersion(phi: f64, params: &ModelParams) -> SpectrumPoint {
    let (h, g) = (params.h(), params.gamma());
    let (s, c) = phi.sin_cos();
    let eps = h - c;
    let gam = g * s;
    let energy = eps.hypot(gam);
    let velocity = if energy > 1e-300 {
        (h - (1.0 - g * g) * c) * s / energy
    } else {
        f64::NAN
    };
    let theta = if gam == 0.0 && eps == 0.0 {
        0.0
    } else {
        (gam / eps).atan()
    };
    SpectrumPoint {
        phi,
        energy,
        epsilon: eps,
        gamma_comp: gam,
        theta,
        velocity,
    }
}

/// Squared dispersion `S(φ) = E²` and its first five φ-derivatives.
///
/// `S = h² + γ² − 2h cos φ + (1−γ²) cos² φ`; differentiating the identity
/// `S = E²` converts these into derivatives of `E` without touching the
/// square-root branch.
fn s_derivatives(c: Complex64, s: Complex64, h: f64, b: f64) -> [Complex64; 6] {
    // b = 1 - gamma^2
    let h2 = h * h;
    let g2 = 1.0 - b;
    let s0 = c * c * b - c * 2.0 * h + (h2 + g2);
    let s1 = s * (h - b * c) * 2.0;
    let s2 = (c * h - b * (c * c * 2.0 - 1.0)) * 2.0;
    let s3 = s * (b * c * 4.0 - h) * 2.0;
    let s4 = (c * c * 2.0 - 1.0) * 8.0 * b - c * h * 2.0;
    let s5 = s * (h - b * c * 16.0) * 2.0;
    [s0, s1, s2, s3, s4, s5]
}

/// Analytic continuation of `E(φ)` and derivatives up to `order ≤ 5` at a
/// complex momentum. The principal square root is used; it coincides with the
/// physical branch away from the branch cuts.
pub fn dispersion_derivatives_complex(
    phi: Complex64,
    order: usize,
    params: &ModelParams,
) -> Result<Vec<Complex64>> {
    assert!(order <= 5, "derivatives implemented through order 5");
    let (h, g) = (params.h(), params.gamma());
    let b = 1.0 - g * g;
    let (s, c) = (phi.sin(), phi.cos());
    let sd = s_derivatives(c, s, h, b);
    let e = sd[0].sqrt();
    if e.norm() < 1e-12 {
        return Err(Error::DegenerateSpectrum {
            phi: phi.re,
            energy: e.norm(),
        });
    }
    let mut d = vec![Complex64::new(0.0, 0.0); order + 1];
    d[0] = e;
    if order >= 1 {
        // S' = 2 E E'
        d[1] = sd[1] / (2.0 * e);
    }
    if order >= 2 {
        // S'' = 2 E'^2 + 2 E E''
        d[2] = (sd[2] - 2.0 * d[1] * d[1]) / (2.0 * e);
    }
    if order >= 3 {
        // S''' = 6 E' E'' + 2 E E'''
        d[3] = (sd[3] - 6.0 * d[1] * d[2]) / (2.0 * e);
    }
    if order >= 4 {
        // S'''' = 6 E''^2 + 8 E' E''' + 2 E E''''
        d[4] = (sd[4] - 6.0 * d[2] * d[2] - 8.0 * d[1] * d[3]) / (2.0 * e);
    }
    if order >= 5 {
        // S''''' = 20 E'' E''' + 10 E' E'''' + 2 E E'''''
        d[5] = (sd[5] - 20.0 * d[2] * d[3] - 10.0 * d[1] * d[4]) / (2.0 * e);
    }
    Ok(d)
}

/// `d^order E / dφ^order` at real momentum, `order ∈ 1..=5`.
///
/// Closed-form differentiation of `√(ε² + Γ²)`; errors on a degenerate
/// spectrum point (`E < 1e−12`).
pub fn dispersion_derivative(phi: f64, order: usize, params: &ModelParams) -> Result<f64> {
    assert!(
        (1..=5).contains(&order),
        "derivative order must be in 1..=5"
    );
    let d = dispersion_derivatives_complex(Complex64::new(phi, 0.0), order, params)?;
    Ok(d[order].re)
}

/// `E(φ)` at a complex momentum (principal branch).
pub fn dispersion_complex(phi: Complex64, params: &ModelParams) -> Complex64 {
    let (h, g) = (params.h(), params.gamma());
    let b = 1.0 - g * g;
    let c = phi.cos();
    (c * c * b - c * 2.0 * h + (h * h + 1.0 - b)).sqrt()
}

/// `ε(φ) = h − cos φ` at a complex momentum.
pub fn epsilon_complex(phi: Complex64, params: &ModelParams) -> Complex64 {
    -phi.cos() + params.h()
}

/// Bogolyubov angle `θ_q` for a momentum label `q` of either set.
///
/// `tan θ_q = Γ_q/ε_q` with `θ_q = arctan(Γ_q/ε_q)` for `q ∉ {0, N/2}`; the
/// zero modes take the special values `θ_{N/2} = 0` and `θ_0 = 0` for `h ≥ 1`,
/// `π` for `0 ≤ h < 1`.
pub fn bogolyubov_angle(q: f64, params: &ModelParams) -> f64 {
    let n = params.n_sites as f64;
    let q_mod = q.rem_euclid(n);
    if q_mod == 0.0 {
        return if params.h() >= 1.0 {
            0.0
        } else {
            std::f64::consts::PI
        };
    }
    if q_mod == n / 2.0 {
        return 0.0;
    }
    let phi = params.phi_of_q(q);
    let pt = dispersion(phi, params);
    if pt.gamma_comp == 0.0 && pt.epsilon == 0.0 {
        return 0.0;
    }
    (pt.gamma_comp / pt.epsilon).atan()
}

/// Maximal group velocity and its supremum momentum.
#[derive(Debug, Clone, Copy)]
pub struct VelocityExtremum {
    /// `V = sup_φ v(φ)`.
    pub v_max: f64,
    /// Supremum momentum `φ₀ ∈ [0, π]`.
    pub phi0: f64,
    /// `1/V`, so that `t_th = N · t_th_per_site`.
    pub t_th_per_site: f64,
    /// Set when `h = 1`, `γ² ≥ 3/4`: the velocity has a step at `φ = 0` and the
    /// supremum `V = γ` is attained only as `φ → 0⁺`.
    pub boundary_flag: bool,
}

/// Coefficients (ascending order) of the quartic in `z = cos φ₀` whose root
/// locates the velocity extremum.
fn velocity_quartic(h: f64, b: f64) -> [f64; 5] {
    [
        -b * (1.0 - b) + h * h * b,
        -h * (h * h + b),
        2.0 * b * (1.0 - b) + h * h * (3.0 - 2.0 * b),
        -3.0 * h * (1.0 - b),
        (1.0 - b) * (1.0 - b),
    ]
}

fn poly_eval(coeffs: &[f64], z: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * z + c)
}

fn poly_eval_deriv(coeffs: &[f64], z: f64) -> f64 {
    let mut acc = 0.0;
    for (k, c) in coeffs.iter().enumerate().skip(1).rev() {
        acc = acc * z + k as f64 * c;
    }
    acc
}

/// All complex roots of a real-coefficient polynomial (ascending coefficients)
/// via eigenvalues of the companion matrix, Newton-polished. The QR iteration
/// is bounded; the rare non-converging cases (e.g. biquadratics with a purely
/// imaginary pair) fall back to Durand–Kerner.
pub(crate) fn poly_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let scale = coeffs.iter().fold(0.0_f64, |m, c| m.max(c.abs()));
    if scale == 0.0 {
        return Vec::new();
    }
    // Trim negligible leading coefficients (degenerate quartics).
    let mut deg = coeffs.len() - 1;
    while deg > 0 && coeffs[deg].abs() <= 1e-14 * scale {
        deg -= 1;
    }
    if deg == 0 {
        return Vec::new();
    }
    let lead = coeffs[deg];
    let mut companion = DMatrix::<f64>::zeros(deg, deg);
    for k in 0..deg {
        companion[(k, deg - 1)] = -coeffs[k] / lead;
        if k > 0 {
            companion[(k, k - 1)] = 1.0;
        }
    }
    let eigs = nalgebra::linalg::Schur::try_new(companion, 1e-13, 400)
        .map(|schur| schur.complex_eigenvalues().iter().copied().collect())
        .unwrap_or_else(|| durand_kerner(&coeffs[..=deg]));
    eigs.iter()
        .map(|&z0| {
            let mut z = Complex64::new(z0.re, z0.im);
            for _ in 0..8 {
                let p = coeffs[..=deg]
                    .iter()
                    .rev()
                    .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c);
                let dp = {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for (k, &c) in coeffs[..=deg].iter().enumerate().skip(1).rev() {
                        acc = acc * z + c * k as f64;
                    }
                    acc
                };
                if dp.norm() < 1e-300 {
                    break;
                }
                let step = p / dp;
                z -= step;
                if step.norm() < 1e-15 * (1.0 + z.norm()) {
                    break;
                }
            }
            z
        })
        .collect()
}

/// Durand–Kerner simultaneous root iteration on a monic-normalized
/// polynomial; ascending coefficients, leading entry nonzero.
fn durand_kerner(coeffs: &[f64]) -> Vec<Complex64> {
    let deg = coeffs.len() - 1;
    let lead = coeffs[deg];
    let monic: Vec<f64> = coeffs[..deg].iter().map(|c| c / lead).collect();
    let eval = |z: Complex64| -> Complex64 {
        let mut p = Complex64::new(1.0, 0.0);
        for c in monic.iter().rev() {
            p = p * z + c;
        }
        p
    };
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..deg).map(|k| seed.powu(k as u32 + 1)).collect();
    for _ in 0..300 {
        let mut moved = 0.0_f64;
        for i in 0..deg {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if j != i {
                    denom *= roots[i] - roots[j];
                }
            }
            if denom.norm() < 1e-300 {
                continue;
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-14 {
            break;
        }
    }
    roots
}

/// Maximal group velocity `V(h, γ)`, its momentum `φ₀` and `1/V`.
///
/// The extremum condition reduces to a quartic in `z = cos φ₀`; its companion
/// matrix eigenvalues are polished by Newton iteration and the admissible real
/// roots compared through `v(φ)`. For `h ≥ 1` exactly one root lies in `[0, 1]`.
/// At `h = 1`, `γ² ≥ 3/4` the velocity is discontinuous at `φ = 0` and the
/// supremum `V = γ` is reported with `boundary_flag` set.
pub fn max_group_velocity(params: &ModelParams) -> VelocityExtremum {
    let (h, g) = (params.h(), params.gamma());
    let b = g * g;

    if (h - 1.0).abs() < 1e-12 && b >= 0.75 - 1e-12 {
        return VelocityExtremum {
            v_max: g,
            phi0: 0.0,
            t_th_per_site: 1.0 / g,
            boundary_flag: true,
        };
    }

    let coeffs = velocity_quartic(h, b);
    let mut best: Option<(f64, f64)> = None; // (v, phi)
    for root in poly_roots(&coeffs) {
        if root.im.abs() > 1e-7 * (1.0 + root.re.abs()) {
            continue;
        }
        let mut z = root.re;
        if !(-1.0 - 1e-9..=1.0 + 1e-9).contains(&z) {
            continue;
        }
        // Polish on the quartic in real arithmetic.
        for _ in 0..4 {
            let dp = poly_eval_deriv(&coeffs, z);
            if dp.abs() < 1e-300 {
                break;
            }
            z -= poly_eval(&coeffs, z) / dp;
        }
        z = z.clamp(-1.0, 1.0);
        let phi = z.acos();
        let pt = dispersion(phi, params);
        if pt.energy < 1e-9 || !pt.velocity.is_finite() {
            continue;
        }
        match best {
            Some((v, _)) if v >= pt.velocity => {}
            _ => best = Some((pt.velocity, phi)),
        }
    }

    // Degenerate corners (e.g. h = 0, γ = 1: flat band) fall back to a scan.
    let (v_max, phi0) = best.unwrap_or_else(|| {
        let mut v = 0.0;
        let mut phi = std::f64::consts::FRAC_PI_2;
        for k in 1..4096 {
            let p = std::f64::consts::PI * k as f64 / 4096.0;
            let pt = dispersion(p, params);
            if pt.velocity.is_finite() && pt.velocity > v {
                v = pt.velocity;
                phi = p;
            }
        }
        (v, phi)
    });

    VelocityExtremum {
        v_max,
        phi0,
        t_th_per_site: 1.0 / v_max,
        boundary_flag: false,
    }
}

/// Threshold time `t_th = N/V`: one round trip of the fastest spin wave.
pub fn threshold_time(params: &ModelParams) -> f64 {
    params.n_sites as f64 * max_group_velocity(params).t_th_per_site
}

/// Branch points of `E(φ)` in the upper half of the strip `Re φ ∈ (−π, π]`.
///
/// `φ_br± = i · arccosh((h ± γ√(h² − 1 + γ²))/(1 − γ²))`, valid for
/// `h² > 1 − γ²` and `γ < 1`; the lower half-plane carries the conjugate pair.
pub fn branch_points(params: &ModelParams) -> Result<(Complex64, Complex64)> {
    let (h, g) = (params.h(), params.gamma());
    if (g - 1.0).abs() < 1e-14 || g > 1.0 {
        return Err(Error::BranchPointDegenerate);
    }
    if h * h <= 1.0 - g * g {
        return Err(Error::BranchPointDomain { h, gamma: g });
    }
    let disc = (h * h - (1.0 - g * g)).sqrt();
    let denom = 1.0 - g * g;
    let arg_minus = (h - g * disc) / denom;
    let arg_plus = (h + g * disc) / denom;
    let acosh = |a: f64| (a + (a * a - 1.0).max(0.0).sqrt()).ln();
    Ok((
        Complex64::new(0.0, acosh(arg_minus)),
        Complex64::new(0.0, acosh(arg_plus)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn p(n: usize, h: f64, g: f64) -> ModelParams {
        ModelParams::new(n, h, g).unwrap()
    }

    #[test]
    fn rejects_bad_sizes() {
        assert!(ModelParams::new(3, 1.0, 0.5).is_err());
        assert!(ModelParams::new(99, 1.0, 0.5).is_err());
        assert!(ModelParams::new(2, 1.0, 0.5).is_err());
        assert!(ModelParams::new(4, 1.0, 0.5).is_ok());
    }

    #[test]
    fn canonicalizes_signs() {
        let m = p(10, -1.5, -0.3);
        assert_eq!(m.h(), 1.5);
        assert_eq!(m.gamma(), 0.3);
        assert_eq!(m.h_raw(), -1.5);
        assert_eq!(m.gamma_raw(), -0.3);
    }

    #[test]
    fn dispersion_anchor_values() {
        // E(0) = |h - 1|, E(pi) = h + 1, direct substitution at pi/2.
        assert_relative_eq!(dispersion(0.0, &p(10, 2.0, 0.3)).energy, 1.0, epsilon = 1e-14);
        assert_relative_eq!(
            dispersion(std::f64::consts::PI, &p(10, 2.0, 0.7)).energy,
            3.0,
            epsilon = 1e-14
        );
        assert_relative_eq!(
            dispersion(std::f64::consts::FRAC_PI_2, &p(10, 1.5, 0.5)).energy,
            2.5_f64.sqrt(),
            epsilon = 1e-14
        );
    }

    #[test]
    fn spectrum_point_invariant() {
        let m = p(12, 1.3, 0.7);
        for k in 0..200 {
            let phi = -7.0 + 0.07 * k as f64;
            let pt = dispersion(phi, &m);
            let e2 = pt.epsilon * pt.epsilon + pt.gamma_comp * pt.gamma_comp;
            assert!((pt.energy * pt.energy - e2).abs() <= 1e-13 * e2.max(1e-300));
            assert!(pt.energy >= 0.0);
        }
    }

    #[test]
    fn first_derivative_matches_closed_form() {
        let m = p(10, 2.0, 0.0);
        // v(pi/2) = h * 1 / h = 1
        let v = dispersion_derivative(std::f64::consts::FRAC_PI_2, 1, &m).unwrap();
        assert_relative_eq!(v, 1.0, epsilon = 1e-14);
        let m = p(10, 1.7, 0.4);
        for k in 1..20 {
            let phi = 0.15 * k as f64;
            let pt = dispersion(phi, &m);
            let v = dispersion_derivative(phi, 1, &m).unwrap();
            let expect = (1.7 - (1.0 - 0.16) * phi.cos()) * phi.sin() / pt.energy;
            assert_relative_eq!(v, expect, epsilon = 1e-12);
        }
    }

    /// Richardson-extrapolated central difference of order `ord-1` data.
    fn fd_oracle(phi: f64, ord: usize, m: &ModelParams) -> f64 {
        let f = |x: f64| {
            if ord == 1 {
                dispersion(x, m).energy
            } else {
                dispersion_derivative(x, ord - 1, m).unwrap()
            }
        };
        let d = |h: f64| (f(phi + h) - f(phi - h)) / (2.0 * h);
        let h = 1e-4;
        (4.0 * d(h / 2.0) - d(h)) / 3.0
    }

    #[test]
    fn higher_derivatives_match_finite_differences() {
        let m = p(10, 1.7, 0.4);
        for ord in 2..=5 {
            for k in 1..12 {
                let phi = 0.25 * k as f64;
                let got = dispersion_derivative(phi, ord, &m).unwrap();
                let expect = fd_oracle(phi, ord, &m);
                assert!(
                    (got - expect).abs() < 1e-7 * (1.0 + expect.abs()),
                    "order {ord} phi {phi}: {got} vs {expect}"
                );
            }
        }
    }

    #[test]
    fn derivative_rejects_degenerate_spectrum() {
        // gamma = 0, h = 1: E(0) = 0.
        let m = p(10, 1.0, 0.0);
        assert!(matches!(
            dispersion_derivative(0.0, 1, &m),
            Err(Error::DegenerateSpectrum { .. })
        ));
    }

    #[test]
    fn bogolyubov_special_cases() {
        let m = p(8, 2.0, 0.5);
        assert_eq!(bogolyubov_angle(4.0, &m), 0.0); // q = N/2
        assert_eq!(bogolyubov_angle(0.0, &m), 0.0); // q = 0, h >= 1
        let m_low = p(8, 0.5, 0.5);
        assert_eq!(bogolyubov_angle(0.0, &m_low), std::f64::consts::PI);
        let m_xx = p(8, 2.0, 0.0);
        for q in [1.0, 2.0, 3.0, 0.5, 1.5] {
            assert_eq!(bogolyubov_angle(q, &m_xx), 0.0);
        }
    }

    #[test]
    fn momentum_sets_n4() {
        let m = p(4, 1.0, 0.5);
        let odd = momentum_set(Parity::Odd, &m);
        let even = momentum_set(Parity::Even, &m);
        assert_eq!(odd.values, vec![-1.0, 0.0, 1.0, 2.0]);
        assert_eq!(even.values, vec![-1.5, -0.5, 0.5, 1.5]);
        assert_eq!(odd.values.len(), 4);
        assert_eq!(even.values.len(), 4);
    }

    #[test]
    fn velocity_special_cases() {
        // gamma = 0: V = 1 at phi0 = pi/2.
        let v = max_group_velocity(&p(10, 1.3, 0.0));
        assert_relative_eq!(v.v_max, 1.0, epsilon = 1e-9);
        assert_relative_eq!(v.phi0.cos(), 0.0, epsilon = 1e-9);
        // gamma = 1, h = 2: V = 1, cos phi0 = 1/h.
        let v = max_group_velocity(&p(10, 2.0, 1.0));
        assert_relative_eq!(v.v_max, 1.0, epsilon = 1e-9);
        assert_relative_eq!(v.phi0.cos(), 0.5, epsilon = 1e-9);
        // h = 0: V = 1 - gamma, cos phi0 = -sqrt(gamma/(1+gamma)).
        let v = max_group_velocity(&p(10, 0.0, 0.3));
        assert_relative_eq!(v.v_max, 0.7, epsilon = 1e-9);
        assert_relative_eq!(v.phi0.cos(), -(0.3f64 / 1.3).sqrt(), epsilon = 1e-9);
        // h = 1, gamma^2 >= 3/4: supremum at the velocity step.
        let v = max_group_velocity(&p(10, 1.0, 0.9));
        assert_relative_eq!(v.v_max, 0.9, epsilon = 1e-12);
        assert_eq!(v.phi0, 0.0);
        assert!(v.boundary_flag);
        // Minimal V over h >= 1: h = 1, gamma = sqrt(2 - sqrt 2).
        let v = max_group_velocity(&p(10, 1.0, (2.0 - 2.0_f64.sqrt()).sqrt()));
        assert_relative_eq!(v.v_max, 2.0 * (2.0_f64.sqrt() - 1.0), epsilon = 1e-9);
    }

    #[test]
    fn velocity_dominates_grid() {
        for (h, g) in [(1.0, 0.6436), (2.0, 0.5), (0.5, 0.8), (1.25, 1.0), (0.0, 0.3)] {
            let m = p(10, h, g);
            let v = max_group_velocity(&m);
            for k in 1..10_000 {
                let phi = std::f64::consts::PI * k as f64 / 10_000.0;
                let pt = dispersion(phi, &m);
                if pt.velocity.is_finite() {
                    assert!(
                        v.v_max >= pt.velocity - 1e-12,
                        "h={h} g={g}: v({phi}) = {} > V = {}",
                        pt.velocity,
                        v.v_max
                    );
                }
            }
        }
    }

    #[test]
    fn velocity_quartic_residual_and_root_bound() {
        for (h, g) in [(1.5, 0.5), (2.0, 0.3), (1.0, 0.6), (3.0, 0.95)] {
            let m = p(10, h, g);
            let v = max_group_velocity(&m);
            let z = v.phi0.cos();
            let coeffs = velocity_quartic(h, g * g);
            assert!(poly_eval(&coeffs, z).abs() < 1e-10, "h={h} g={g}");
            assert!(z.abs() <= 1.0);
        }
    }

    #[test]
    fn velocity_monotone_in_field() {
        for g in [0.25, 0.5, 0.75, 1.0] {
            let mut prev = -1.0;
            for k in 0..=12 {
                let h = 0.25 * k as f64;
                let v = max_group_velocity(&p(10, h, g)).v_max;
                assert!(
                    v >= prev - 1e-10,
                    "V not monotone at h={h}, gamma={g}: {v} < {prev}"
                );
                prev = v;
            }
        }
    }

    #[test]
    fn velocity_bounds_for_asymptotic_domain() {
        let floor = 2.0 * (2.0_f64.sqrt() - 1.0) - 1e-9;
        for i in 0..=8 {
            for j in 0..=8 {
                let h = 1.0 + 0.25 * i as f64;
                let g = j as f64 / 8.0;
                let v = max_group_velocity(&p(10, h, g)).v_max;
                assert!(v >= floor, "V({h},{g}) = {v} below floor");
                assert!(v <= 1.0 + 1e-12);
            }
        }
    }

    #[test]
    fn threshold_time_values() {
        assert_relative_eq!(threshold_time(&p(100, 1.3, 0.0)), 100.0, epsilon = 1e-9);
        assert_relative_eq!(threshold_time(&p(200, 0.4, 0.0)), 200.0, epsilon = 1e-9);
        // Wave-packet round trip for h = 1, gamma = sqrt(sqrt 2 - 1).
        let t = threshold_time(&p(100, 1.0, (2.0_f64.sqrt() - 1.0).sqrt()));
        assert!((t - 117.7).abs() < 0.1, "t_th = {t}");
    }

    #[test]
    fn branch_point_residuals() {
        let m = p(10, 1.25, 0.6);
        let (lo, hi) = branch_points(&m).unwrap();
        for phi in [lo, hi, lo.conj(), hi.conj()] {
            let e2 = {
                let eps = epsilon_complex(phi, &m);
                let gam = phi.sin() * m.gamma();
                eps * eps + gam * gam
            };
            // The defining equation is satisfied to f64 argument precision.
            assert!(e2.norm() < 1e-12, "E^2 residual {:.3e}", e2.norm());
            assert!(dispersion_complex(phi, &m).norm() < 1e-7);
        }
        assert!(lo.im > 0.0 && hi.im >= lo.im);
    }

    #[test]
    fn branch_point_near_transition_expansion() {
        // Im(phi_br-) ~ eps/gamma for eps << gamma << 1; the next correction
        // is O(eps/gamma^2), so eps is kept well below gamma^2.
        let eps = 1e-6;
        let g = 0.02;
        let m = p(10, 1.0 + eps, g);
        let (lo, _) = branch_points(&m).unwrap();
        assert_relative_eq!(lo.im, eps / g, max_relative = 1e-2);
    }

    #[test]
    fn branch_point_domain_errors() {
        assert!(matches!(
            branch_points(&p(10, 0.5, 0.3)),
            Err(Error::BranchPointDomain { .. })
        ));
        assert!(matches!(
            branch_points(&p(10, 2.0, 1.0)),
            Err(Error::BranchPointDegenerate)
        ));
    }

    proptest! {
        #[test]
        fn dispersion_symmetry_and_periodicity(
            phi in -10.0..10.0f64,
            h in 0.0..3.0f64,
            g in 0.0..1.5f64,
        ) {
            let m = p(10, h, g);
            let e = dispersion(phi, &m).energy;
            let scale = e.max(1.0);
            prop_assert!((e - dispersion(-phi, &m).energy).abs() < 1e-13 * scale);
            prop_assert!(
                (e - dispersion(phi + 2.0 * std::f64::consts::PI, &m).energy).abs()
                    < 1e-13 * scale
            );
        }

        #[test]
        fn velocity_matches_richardson_difference(
            phi in 0.05..3.0f64,
            h in 1.05..3.0f64,
            g in 0.0..1.0f64,
        ) {
            let m = p(10, h, g);
            let v = dispersion_derivative(phi, 1, &m).unwrap();
            let f = |x: f64| dispersion(x, &m).energy;
            let d = |s: f64| (f(phi + s) - f(phi - s)) / (2.0 * s);
            let richardson = (4.0 * d(5e-5) - d(1e-4)) / 3.0;
            prop_assert!((v - richardson).abs() < 1e-7);
        }
    }
}
