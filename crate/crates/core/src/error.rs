use thiserror::Error;

/// Errors shared across the crate. Variants map one-to-one onto the CLI's
/// exit-code families.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ground set too large: {0} labels (max 64)")]
    TooManyLabels(usize),

    #[error("malformed polynomial: {0}")]
    MalformedPolynomial(String),

    #[error("symmetry violation: {0}")]
    SymmetryViolation(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("instance cap exceeded: {0}")]
    CapExceeded(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("verification failure: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
