use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vectors must have at least one coordinate")]
    EmptyDimension,

    #[error("a convex set needs at least one point")]
    EmptyPointList,

    #[error("index {index} out of range for {len} generators")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("vector is not a member of the set")]
    NotMember,

    #[error("residual is +inf and has no max-plus value")]
    InfiniteResidual,

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
