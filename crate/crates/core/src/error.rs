use thiserror::Error;

/// Failures surfaced by the algebraic kernels.
///
/// `Domain` covers mathematically invalid input (a squarefree violation, a zero
/// ideal, a degenerate form). `Unsupported` marks inputs outside the implemented
/// scope. `Internal` means an identity that must hold failed to verify.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Domain(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal check failed: {0}")]
    Internal(String),
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
