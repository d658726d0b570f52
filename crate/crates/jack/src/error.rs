use selberg_algebra::AlgebraError;
use selberg_closed_forms::ClosedFormError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum JackError {
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotPartition(Vec<u32>),
    #[error("partitions have different weights {left} and {right}")]
    UnequalWeight { left: u32, right: u32 },
    #[error("partition {partition} has more than {nvars} parts")]
    TooManyParts { partition: String, nvars: usize },
    #[error("non-generic parameter gamma = {gamma}: eigenvalues of {lambda} and {mu} collide")]
    NonGeneric { gamma: String, lambda: String, mu: String },
    #[error("gamma = {0} is not a nonnegative integer")]
    NonIntegerGamma(String),
    #[error("gamma must be nonzero")]
    ZeroGamma,
    #[error("point has {got} coordinates, expected {expected}")]
    PointArity { got: usize, expected: usize },
    #[error("pole in denominator Pochhammer [{param}]_{partition}")]
    PochhammerPole { param: String, partition: String },
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    ClosedForm(#[from] ClosedFormError),
}

pub type Result<T> = std::result::Result<T, JackError>;
