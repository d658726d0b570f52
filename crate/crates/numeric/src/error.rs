use thiserror::Error;

#[derive(Debug, Error)]
pub enum NumericError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("no convergence: estimate {value} with error {err}")]
    Accuracy { value: f64, err: f64 },
    #[error("{method} not available for {family}")]
    Unsupported { method: &'static str, family: &'static str },
    #[error("size ceiling exceeded: {0}")]
    Size(String),
    #[error(transparent)]
    ClosedForm(#[from] selberg_closed_forms::ClosedFormError),
    #[error(transparent)]
    Jack(#[from] selberg_jack::JackError),
    #[error(transparent)]
    Algebra(#[from] selberg_algebra::AlgebraError),
}

pub type Result<T> = std::result::Result<T, NumericError>;
