use thiserror::Error;

/// Errors raised by construction, realization, verification and I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported in exact mode: {0}")]
    UnsupportedExact(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("realization failed at step {step}: {reason}")]
    Realize { step: usize, reason: String },
    #[error("schema mismatch: expected {expected}, found {found}")]
    Schema { expected: String, found: String },
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
