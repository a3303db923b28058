//! Error type shared by all modules of the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Chain sizes must be even (the two parity sectors each carry N momenta)
    /// and large enough for the mode-sum formulas to make sense.
    #[error("chain size must be an even integer >= 4, got {0}")]
    InvalidChainSize(usize),

    /// Spectrum derivative requested at a point where E(phi) vanishes.
    #[error("degenerate spectrum at phi = {phi}: E = {energy:e}")]
    DegenerateSpectrum { phi: f64, energy: f64 },

    /// Branch points exist off the real axis only for h^2 > 1 - gamma^2.
    #[error("branch points require h^2 > 1 - gamma^2 (h = {h}, gamma = {gamma})")]
    BranchPointDomain { h: f64, gamma: f64 },

    /// The arccosh branch-point formula degenerates at gamma = 1.
    #[error("branch-point formula degenerates at gamma = 1")]
    BranchPointDegenerate,

    /// Oscillatory quadrature would need too many panels.
    #[error("oscillation budget exceeded: {needed:.3e} half-periods > {budget:.3e}")]
    BudgetExceeded { needed: f64, budget: f64 },

    /// Closed Bessel forms exist only for gamma = 0 or h = gamma = 1.
    #[error("parameters (h = {h}, gamma = {gamma}) are not a closed-form special case")]
    NotSpecialCase { h: f64, gamma: f64 },

    /// Operation restricted to the XX chain.
    #[error("operation requires gamma = 0, got gamma = {0}")]
    RequiresXx(f64),

    /// An asymptotic formula was requested outside its regime of validity.
    #[error("regime error: {0}")]
    Regime(String),

    /// The dense-matrix oracle is limited to tiny chains.
    #[error("dense brute-force oracle limited to N <= 12, got N = {0}")]
    OracleTooLarge(usize),

    /// Revival detection needs a fine enough time grid.
    #[error("trace grid too coarse: step {step} exceeds {max_step} (t_th/200)")]
    GridTooCoarse { step: f64, max_step: f64 },

    /// Trace does not reach the requested revival window.
    #[error("trace covers t <= {covered}, need (j_max + 0.5) t_th = {needed}")]
    TraceTooShort { covered: f64, needed: f64 },

    /// Decay-law fits need at least four points.
    #[error("need at least 4 revival peaks in fit range, got {0}")]
    InsufficientPeaks(usize),

    /// Generic invalid-argument error for CLI-facing validation.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

impl Error {
    pub fn regime(msg: impl Into<String>) -> Self {
        Error::Regime(msg.into())
    }
}
