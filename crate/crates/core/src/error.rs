use thiserror::Error;

/// Errors raised by the matrix, basis, swap and decomposition routines.
///
/// Everything except [`Error::DimensionOverflow`] is a domain error: the
/// caller asked for something outside an operation's contract.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} must be at least {min}, got {value}")]
    InvalidDimension {
        what: &'static str,
        value: usize,
        min: usize,
    },

    #[error("index ({i}, {j}) out of range for a {size}x{size} matrix (indices are 1-based)")]
    IndexOutOfRange { size: usize, i: usize, j: usize },

    #[error("generator pair ({i}, {j}) is invalid for n = {n}; need 1 <= i < j <= n")]
    InvalidPair { n: usize, i: usize, j: usize },

    #[error("diagonal generator index {d} is invalid for n = {n}; need 1 <= d <= n - 1")]
    InvalidDiagonal { n: usize, d: usize },

    #[error("{op}: shape mismatch ({}x{} vs {}x{})", .left.0, .left.1, .right.0, .right.1)]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("{op}: expected a square matrix, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },

    #[error("{what}: expected length {expected}, got {found}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("matrix entries must be finite")]
    NonFinite,

    #[error("tolerance must be a finite non-negative number, got {0}")]
    InvalidTolerance(f64),

    #[error("matrix dimensions overflow: {0}")]
    DimensionOverflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
