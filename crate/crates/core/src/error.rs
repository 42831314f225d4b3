use thiserror::Error;

/// Errors produced by corrkit operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("degenerate sequence: zero-shift autocorrelation {energy:e} is below threshold")]
    DegenerateSequence { energy: f64 },

    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    #[error("shift {shift} out of range for length {len}")]
    InvalidShift { shift: i64, len: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("numerical check failed: {0}")]
    CheckFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
