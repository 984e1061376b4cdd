use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("inadmissible: {0}")]
    Inadmissible(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("degenerate: {0}")]
    Degenerate(String),
    #[error("internal consistency: {0}")]
    Internal(String),
    #[error("registry line {line}: {msg}")]
    Registry { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
