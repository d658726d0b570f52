use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("arity mismatch: {left} vs {right} variables")]
    ArityMismatch { left: String, right: String },
    #[error("negative power {0} in product factor")]
    NegativePower(i64),
    #[error("term count {count} exceeds ceiling {ceiling}")]
    TermCeiling { count: usize, ceiling: usize },
    #[error("variable index {index} out of range for {arity} variables")]
    VariableOutOfRange { index: usize, arity: usize },
    #[error("negative exponent {0} for q")]
    NegativeQExponent(i32),
    #[error("inexact division of q-polynomials")]
    InexactDivision,
}
