use thiserror::Error;

/// Errors produced by hypervector algebra, encoding, and the benchmark
/// harness. String payloads carry enough context to diagnose the call site;
/// positions in parse and data errors are 0-based bytes and 1-based lines
/// respectively.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension must be at least 1")]
    InvalidDimension,

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("superposition of an empty collection")]
    EmptySuperposition,

    #[error("integer powers are defined only for atomic (unit-magnitude) hypervectors")]
    NonAtomic,

    #[error("similarity is undefined for a zero hypervector")]
    ZeroVector,

    #[error("sequence is empty")]
    EmptySequence,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("criteria parse error at byte {position}: {message}")]
    CriteriaParse { position: usize, message: String },

    #[error("correlation undefined: {0}")]
    UndefinedCorrelation(String),

    #[error("data error: {0}")]
    Data(String),
}

pub type Result<T> = std::result::Result<T, Error>;
