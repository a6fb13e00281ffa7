//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A numeric or structural parameter violated its documented range.
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// Array or matrix dimensions do not line up.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A linear solve met a non-positive pivot (matrix not positive definite).
    #[error("matrix is not positive definite (pivot {pivot} at index {index})")]
    NotPositiveDefinite { pivot: f64, index: usize },

    /// Training produced a non-finite loss or gradient.
    #[error("non-finite {what} at step {step} (realization stream {stream})")]
    NonFinite { what: &'static str, step: usize, stream: u64 },

    /// A checkpoint file is malformed or has an unsupported version.
    #[error("checkpoint: {0}")]
    Checkpoint(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter { name, reason: reason.into() }
    }
}
