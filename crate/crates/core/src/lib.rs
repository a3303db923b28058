//! Infinite-temperature spin dynamics of the finite cyclic XY spin-1/2 chain.
//!
//! The chain of `N` spins with anisotropy `γ` and transverse field `h` maps to
//! free fermions with dispersion `E(φ) = √((h − cos φ)² + γ² sin² φ)`. The
//! autocorrelation function `g_0^zz(t)` (equal to the polarization of an
//! initially polarized spin embedded in an unpolarized chain) is computed here
//! by four independent routes:
//!
//! * exact finite-`N` mode sums over the two fermion parity sectors ([`exact`]),
//! * a series over wave-packet winding numbers, each term an oscillatory
//!   integral evaluated by panelized Gauss–Legendre quadrature ([`winding`]),
//! * Bessel-function closed forms in the XX (`γ = 0`) and critical Ising
//!   (`h = γ = 1`) special cases ([`winding`] + [`specfun`]),
//! * stationary-phase and Airy-regime asymptotics valid for `h ≥ 1`, including
//!   the partial-revival profiles near multiples of the threshold time
//!   `t_th = N/V` ([`asymptotics`]).
//!
//! [`analysis`] post-processes traces: revival detection, decay-law fitting and
//! the sensitivity-to-parameter-perturbation diagnostic. A tiny-`N` dense
//! brute-force oracle (`exact::brute_force_g`) provides an independent check of
//! everything built on the fermionic solution.

pub mod analysis;
pub mod asymptotics;
pub mod error;
pub mod exact;
pub mod model;
pub mod specfun;
pub mod winding;

pub(crate) mod kahan;
pub(crate) mod quad;

pub use error::{Error, Result};
pub use model::{ModelParams, MomentumSet, Parity, SpectrumPoint, VelocityExtremum};
pub use exact::{CorrelationTrace, ModeSums, Route};
pub use winding::{WindingMethod, WindingTerm};
