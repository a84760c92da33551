//! Error types shared by every module of the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes of the analytic, quadrature and Monte-Carlo paths.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A model or configuration parameter violates its stated bound.
    #[error("parameter `{name}` = {value} violates constraint: {constraint}")]
    Parameter {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },

    /// An argument is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(&'static str),

    /// A quadrature or series evaluation could not reach the requested
    /// tolerance. Carries the best estimate obtained so far.
    #[error("accuracy failure in {what}: best estimate {best:.9e}, error estimate {err_estimate:.3e}")]
    Accuracy {
        what: &'static str,
        best: f64,
        err_estimate: f64,
    },

    /// The requested SNR moment does not exist for these fading parameters.
    #[error("moment of order {order} diverges: requires order < m_s = {m_s}")]
    MomentDivergence { order: f64, m_s: f64 },

    /// The high-SNR capacity asymptote has no finite value at this delay
    /// exponent.
    #[error("high-SNR asymptote undefined: requires A = {a} < m = {m}")]
    AsymptoteUndefined { a: f64, m: f64 },

    /// Low-SNR capacity queried below the minimum energy per bit.
    #[error("Eb/N0 = {ebn0:.6e} is below the minimum {ebn0_min:.6e}")]
    BelowMinimum { ebn0: f64, ebn0_min: f64 },

    /// Two independent evaluation routes disagree beyond the contract gap,
    /// which flags a formula or implementation fault rather than noise.
    #[error("dual-path disagreement: analytic {analytic:.9e} vs quadrature {quadrature:.9e} (relative gap {rel_gap:.3e})")]
    PathDisagreement {
        analytic: f64,
        quadrature: f64,
        rel_gap: f64,
    },

    /// A caller-supplied object broke an interface contract.
    #[error("contract violation: {0}")]
    Contract(&'static str),
}
