use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("config error: {0}")]
    Config(String),
    #[error("cannot read config: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot parse config: {0}")]
    Toml(#[from] toml::de::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, ReportError>;
