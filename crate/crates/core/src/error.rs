use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid set partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid integer partition: {0}")]
    InvalidIntegerPartition(String),

    /// A text input could not be parsed; `position` is a byte offset into the input.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("size mismatch: expected {expected}, got {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("partition {0} is not almost noncrossing")]
    NotAlmostNoncrossing(String),

    #[error("partition {0} is not noncrossing")]
    NotNoncrossing(String),

    #[error("partition {partition} has a singleton at {index}")]
    SingletonBlock { partition: String, index: usize },

    #[error("empty module: no noncrossing partitions with {0}")]
    EmptySpace(String),

    #[error("polynomial division is not exact")]
    InexactDivision,

    #[error("value at a primitive {order}-th root of unity is not an integer")]
    NonIntegerValue { order: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

pub type Result<T> = std::result::Result<T, Error>;
