use thiserror::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by model construction, procedures, and the harness.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Invalid distribution or procedure parameters.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Argument outside the support or domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Invalid experiment or sweep configuration.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// A boundary formula is degenerate for the requested parameters.
    #[error("degenerate boundary: {0}")]
    DegenerateBoundary(String),

    /// Log-likelihood drifts with the wrong signs for Wald's stopping-time
    /// formulas.
    #[error("drift sign error: {0}")]
    DriftSign(String),

    /// A tail bound does not apply to the requested arguments.
    #[error("bound not applicable: {0}")]
    BoundInapplicable(String),

    /// An operation was called on data it does not apply to.
    #[error("usage error: {0}")]
    Usage(String),
}
