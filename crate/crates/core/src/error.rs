use alloc::string::String;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible pole sets")]
    IncompatiblePoleSets,
    #[error("singular system (rank {rank} of {dim})")]
    SingularSystem { rank: usize, dim: usize },
    #[error("coincident evaluation points")]
    CoincidentPoints,
    #[error("{what} index {value} out of range 1..={max}")]
    IndexOutOfRange {
        what: &'static str,
        value: usize,
        max: usize,
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("regularization failed: {0}")]
    RegularizationFailed(String),
    #[error("evaluation at spectral point")]
    SpectralPoint,
    #[error("subspace is not invariant")]
    NonInvariantSubspace,
    #[error("operators do not commute: {0}")]
    NotCommuting(String),
    #[error("invalid rational {0:?}")]
    ParseRational(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
