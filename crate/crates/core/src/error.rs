use thiserror::Error;

/// Errors surfaced by the engine and its supporting modules.
#[derive(Debug, Error)]
pub enum Error {
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(u32, u32),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u64, u64),

    #[error("bit-row width mismatch: {0} vs {1}")]
    WidthMismatch(usize, usize),

    #[error(
        "projected echelon storage {required} bytes exceeds the memory ceiling {limit} bytes; \
         try the stratified strategy or raise the ceiling"
    )]
    MemoryCeiling { required: u128, limit: u64 },

    #[error("missing prerequisite basis for t = {t}, n = {n}")]
    MissingPrerequisite { t: u32, n: u64 },

    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("cache error: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
