use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible fields: {0}")]
    IncompatibleField(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not of finite order: {0}")]
    NotFiniteOrder(String),
    #[error("point lies in the pole set: {0}")]
    Pole(String),
    #[error("unsupported chart: {0}")]
    UnsupportedChart(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("truncation degree too small: {0}")]
    Unstabilized(String),
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

/// Coarse classification used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Config,
    Math,
    Internal,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Parse(_) | Error::Config(_) => ErrorClass::Config,
            Error::Internal(_) => ErrorClass::Internal,
            _ => ErrorClass::Math,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
