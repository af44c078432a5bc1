//! Error type shared by every module.

use thiserror::Error;

/// Errors raised by constructors and operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("input is not symmetric: {0}")]
    NonSymmetricInput(String),
    #[error("powers specialization needs constant coefficients in q")]
    MixedParameters,
    #[error("no coinversion-free filling: {0}")]
    NoValidFilling(String),
    #[error("shape does not split into blocks of {0} equal-height columns")]
    ShapeNotDivisible(usize),
    #[error("content mismatch: {0}")]
    ContentMismatch(String),
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("content is not a partition: {0}")]
    NonPartitionContent(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("column {0} has more than two cells")]
    ColumnTooTall(usize),
    #[error("need at least {needed} variables, got {got}")]
    NotEnoughVariables { needed: usize, got: usize },
    #[error("invalid skew shape: {0}")]
    InvalidSkewShape(String),
    #[error("invalid filling: {0}")]
    InvalidFilling(String),
    #[error("invalid Burge word: {0}")]
    InvalidBurgeWord(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
}

pub type Result<T> = std::result::Result<T, Error>;
