use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ClosedFormError {
    /// Parameters outside the convergence domain of the integral.
    #[error("domain violation: {0}")]
    Domain(String),
    /// A gamma (or q-gamma, elliptic gamma) factor sits on a pole.
    #[error("pole at argument {arg} in {context}")]
    Pole { arg: f64, context: String },
    /// A sine factor in a recurrence vanishes.
    #[error("vanishing sine factor in {0}")]
    VanishingSine(String),
    /// Elliptic balancing condition not met.
    #[error("balance condition violated: {0}")]
    Balance(String),
}

pub type Result<T> = std::result::Result<T, ClosedFormError>;
