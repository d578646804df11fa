use thiserror::Error;

/// Errors raised by list, permutation, reducer and partition operations.
///
/// Positions and token indices are 1-based, matching the external text forms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty token at index {index}")]
    EmptyToken { index: usize },

    #[error("invalid integer {token:?} at index {index}")]
    InvalidToken { index: usize, token: String },

    #[error("zero entry at position {position}; entries must be nonzero")]
    ZeroEntry { position: usize },

    #[error("operation requires a nonempty list")]
    EmptyList,

    #[error("position {position} is out of range 1..={len}")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("list is not generalized Catalan")]
    NotCatalan,

    #[error("list sum is {sum}, expected 0")]
    NonzeroSum { sum: i64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parts are not weakly decreasing: {0}")]
    InvalidPartition(String),

    #[error("invalid Kostka pair: {0}")]
    InvalidPair(String),

    #[error("partition sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("column {column} is out of range 1..={max}")]
    ColumnOutOfRange { column: usize, max: usize },

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
