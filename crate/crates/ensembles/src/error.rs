use thiserror::Error;

#[derive(Debug, Error)]
pub enum EnsembleError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("no sign change on ({lo}, {hi})")]
    Bracket { lo: f64, hi: f64 },
    #[error("root {root} escaped its interval ({lo}, {hi})")]
    Root { root: f64, lo: f64, hi: f64 },
    #[error("need at least {need} samples, got {got}")]
    TooFewSamples { need: usize, got: usize },
    #[error("{0} has no moment table")]
    Unsupported(String),
    #[error(transparent)]
    ClosedForm(#[from] selberg_closed_forms::ClosedFormError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, EnsembleError>;
