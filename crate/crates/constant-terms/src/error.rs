use selberg_algebra::AlgebraError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CtError {
    #[error("bad root data: {0}")]
    BadRootData(String),
    #[error("invalid identity parameters: {0}")]
    InvalidSpec(String),
    #[error("unknown root system {0:?}")]
    UnknownSystem(String),
    #[error("expansion too large: {0}")]
    Size(AlgebraError),
    #[error(transparent)]
    Algebra(AlgebraError),
}

impl From<AlgebraError> for CtError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::TermCeiling { .. } => CtError::Size(e),
            other => CtError::Algebra(other),
        }
    }
}

pub type Result<T> = std::result::Result<T, CtError>;
