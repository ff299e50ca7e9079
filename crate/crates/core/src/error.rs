use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),

    #[error("cannot parse partition {0:?}")]
    PartitionSyntax(String),

    #[error("row index {row} out of range for a partition of length {len}")]
    RowOutOfRange { row: usize, len: usize },

    #[error("{partition} padded to n = {n} is not a partition (need n - |λ| >= λ_1)")]
    NotPaddable { partition: String, n: usize },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("n = {n} exceeds the supported character-table envelope (n <= {max})")]
    EnvelopeExceeded { n: usize, max: usize },

    #[error("Specht model of size {size} exceeds the cap {cap}")]
    SpechtCapExceeded { size: usize, cap: usize },

    #[error("n = {n} is outside the validity range of the closed formula (needs n >= {min_n})")]
    OutOfRange { n: usize, min_n: usize },

    #[error("{0}")]
    NotApplicable(String),

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("cannot parse diagram {0:?}")]
    DiagramSyntax(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("delta must be nonzero")]
    ZeroDelta,

    #[error("inconsistent result: {0}")]
    Inconsistent(String),

    #[error("routes disagree: {0}")]
    RouteDisagreement(String),
}

pub type Result<T> = std::result::Result<T, Error>;
