use thiserror::Error;

/// Errors surfaced by the laboratory crates.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("constants error: violated relation {relation}: {detail}")]
    Constants { relation: String, detail: String },

    #[error("profile error: {0}")]
    Profile(String),

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("unsupported multiplier: {0}")]
    UnsupportedMultiplier(String),

    #[error("degenerate slicing: |g^33| = {0:.3e} below threshold")]
    DegenerateSlicing(f64),

    #[error("degenerate perturbation: |1 + eps*phi| = {0:.3e} below 0.1")]
    DegeneratePerturbation(f64),

    #[error("axis evaluation: operator coefficients singular at theta = {0}")]
    AxisEvaluation(f64),

    #[error("diagnostics error: non-finite integrand at r={r}, theta={theta}")]
    NonFiniteIntegrand { r: f64, theta: f64 },

    #[error("aborted run at t={t}: {reason}; last healthy snapshot at t={last_good}")]
    AbortedRun { t: f64, last_good: f64, reason: String },

    #[error("failed certificate `{kind}`: margin {margin:.3e} at witness {witness:?}")]
    FailedCertificate {
        kind: String,
        margin: f64,
        witness: Vec<f64>,
    },

    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
