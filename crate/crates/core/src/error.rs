use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix dimensions {rows}x{cols} do not match {len} entries")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        len: usize,
    },

    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,

    #[error("step h must be nonzero")]
    ZeroStep,

    #[error("{root} is not a root of the polynomial (remainder {remainder})")]
    NotARoot { root: String, remainder: String },

    #[error("{what}: expected length {expected}, got {actual}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        actual: usize,
    },

    #[error("{name} = {value} is outside the valid range {range}")]
    OutOfRange {
        name: &'static str,
        value: i64,
        range: String,
    },

    #[error("index sequence {0:?} is not strictly increasing within [0, ell-1]")]
    BadIndexSeq(Vec<usize>),

    #[error("values must be pairwise distinct: {what} repeats at positions {i} and {j}")]
    Repeated {
        what: &'static str,
        i: usize,
        j: usize,
    },

    #[error("{what} must be nonzero (position {index})")]
    ZeroEntry { what: &'static str, index: usize },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
}
