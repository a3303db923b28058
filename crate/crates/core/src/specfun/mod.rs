//! Special functions behind the closed forms and revival asymptotics:
//! integer-order Bessel `J_n` up to orders ~10⁴, the Airy function `Ai` with
//! its derivative, and the generalized Airy function
//! `gAi_n(x) = (1/π) ∫₀^∞ cos(ξⁿ/n + xξ) dξ` that governs the `h = 1`,
//! `γ² = 3/4` revivals.

mod airy;
mod bessel;
mod gai;

pub use airy::{airy_ai, airy_ai_prime};
pub use bessel::{bessel_j, bessel_j_upto};
pub use gai::{gai, gai_prime, GeneralizedAiryOrder};

use std::sync::OnceLock;

/// Golden-section refinement of a bracketed maximum.
fn golden_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    let inv_phi = 0.618_033_988_749_894_9;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..120 {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        if (b - a).abs() < 1e-12 {
            break;
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

fn scan_then_golden(f: impl Fn(f64) -> f64 + Copy, lo: f64, hi: f64) -> (f64, f64) {
    let n = 600;
    let mut best_x = lo;
    let mut best = f64::NEG_INFINITY;
    for k in 0..=n {
        let x = lo + (hi - lo) * k as f64 / n as f64;
        let v = f(x);
        if v > best {
            best = v;
            best_x = x;
        }
    }
    let w = (hi - lo) / n as f64;
    golden_max(f, best_x - w, best_x + w)
}

/// Location and value of the global maximum of `Ai` on the real line
/// (`≈ 0.5357` at `x ≈ −1.0188`).
pub fn airy_ai_max() -> (f64, f64) {
    static MAX: OnceLock<(f64, f64)> = OnceLock::new();
    *MAX.get_or_init(|| scan_then_golden(airy_ai, -3.0, 0.0))
}

/// Location and value of the global maximum of `gAi_5` (`≈ 0.44`).
pub fn gai5_max() -> (f64, f64) {
    static MAX: OnceLock<(f64, f64)> = OnceLock::new();
    *MAX.get_or_init(|| {
        let n5 = GeneralizedAiryOrder::new(5).expect("5 is a valid order");
        scan_then_golden(move |x| gai(n5, x), -3.0, 0.0)
    })
}
