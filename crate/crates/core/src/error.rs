use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts are not weakly decreasing: {0:?}")]
    NotDecreasing(Vec<i64>),
    #[error("partition has a negative part: {0:?}")]
    NegativePart(Vec<i64>),
    #[error("cannot parse partition {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("inner shape {inner:?} is not contained in outer shape {outer:?}")]
    MalformedSkew { outer: Vec<i64>, inner: Vec<i64> },
    #[error("{0:?} is not admissible: {1}")]
    Inadmissible(Vec<i64>, String),
    #[error("hook condition violated for {lambda:?}: part {index} exceeds {bound}")]
    HookViolation {
        lambda: Vec<i64>,
        index: usize,
        bound: usize,
    },
    #[error("series is not symmetric in its variables")]
    NonSymmetric,
    #[error("non-zero residual after Schur expansion (truncation artifact)")]
    TruncationResidual,
    #[error("truncation mismatch: {0:?} vs {1:?}")]
    TruncationMismatch(Option<u32>, Option<u32>),
    #[error("variable layout mismatch: {0}")]
    LayoutMismatch(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("invalid context: {0}")]
    InvalidContext(String),
    #[error("malformed series JSON: {0}")]
    Json(String),
}
