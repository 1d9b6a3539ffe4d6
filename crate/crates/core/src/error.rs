//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// A case the analytic machinery deliberately does not cover
    /// (multi-band closed-form partitions, sum-rate partitions, ...).
    #[error("unsupported analytical case: {0}")]
    Unsupported(String),

    #[error("fingerprint mismatch: file carries {found:016x}, expected {expected:016x}")]
    FingerprintMismatch { expected: u64, found: u64 },

    #[error("numerical divergence: {0}")]
    Divergence(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
