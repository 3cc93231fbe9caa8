use thiserror::Error;

/// Errors raised by constructions, transformations and file parsing.
///
/// Verification failures are never reported through this type; the checker
/// returns a [`crate::checker::VerificationReport`] instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("grid has {found} entries, expected {rows}x{cols}")]
    Shape { rows: usize, cols: usize, found: usize },

    #[error("ragged grid: row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },

    #[error("row count mismatch: {left} vs {right}")]
    RowMismatch { left: usize, right: usize },

    #[error("column count mismatch: {top} vs {bottom}")]
    ColumnMismatch { top: usize, bottom: usize },

    #[error("zero entry at row {row}, column {col}")]
    ZeroEntry { row: usize, col: usize },

    #[error("entry at row {row}, column {col} leaves the exact integer range")]
    Overflow { row: usize, col: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("NONEXISTENT: {reason}")]
    Nonexistent { m: usize, n: usize, reason: String },

    #[error("row {row} does not contain value {value}")]
    SwapMissing { row: usize, value: i64 },

    #[error("column-sum profile cannot be completed: {0}")]
    UncoverableProfile(String),

    #[error("not a mirrorable Heffter grid: {0}")]
    NotHeffter(String),

    #[error("search size {cells} exceeds the budget of {limit}")]
    SearchTooLarge { cells: usize, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
