use thiserror::Error;

use crate::rootsys::Family;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family:?}")]
    InvalidRank { family: Family, rank: usize },

    #[error("cannot parse Lie algebra type `{0}` (expected e.g. A5, E8, G2)")]
    ParseType(String),

    #[error("simple-root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("coefficient vector has length {got}, expected {expected}")]
    WrongLength { expected: usize, got: usize },

    #[error("invalid root coefficients {0:?}: entries must be nonzero and share one sign")]
    InvalidRoot(Vec<i32>),

    #[error("invalid simple-root subset: {0}")]
    InvalidSigma(String),

    #[error("highest root has height {actual} with respect to the subset, expected {expected}")]
    HeightMismatch { expected: u32, actual: i64 },

    #[error("subset {sigma} of {ty} is not covered by a closed-form dimension pattern")]
    PatternMismatch { ty: String, sigma: String },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("integer overflow while evaluating {0}")]
    Overflow(&'static str),

    /// A cross-check between two independent routes failed. Unreachable for legal inputs.
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

impl Error {
    /// Whether the error is caused by the caller's input (as opposed to an internal failure).
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Inconsistency(_))
    }
}
