use crate::shapes::Cell;

/// Errors reported by shape construction, filling validation, slides, and
/// the verification drivers. Every variant names the offending datum so a
/// failure can be traced back to a concrete cell, row, or token.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("part {part} at index {index} is not positive")]
    NonPositivePart { index: usize, part: i64 },

    #[error("parts not weakly decreasing at index {index}: {prev} < {part}")]
    NotWeaklyDecreasing {
        index: usize,
        prev: usize,
        part: usize,
    },

    #[error("inner shape is not contained in outer shape at row {row}")]
    ContainmentViolation { row: usize },

    #[error("cell ({row},{col}) is not in the shape", row = cell.row, col = cell.col)]
    CellNotInShape { cell: Cell },

    #[error("row {row} is out of range (shape has {rows} rows)")]
    RowOutOfRange { row: usize, rows: usize },

    #[error("a={a} is invalid for this shape: a + content = {value} at cell ({row},{col})", row = cell.row, col = cell.col)]
    InvalidA { a: i64, cell: Cell, value: i64 },

    #[error("expected {expected} entries for the shape, got {got}")]
    EntryCountMismatch { expected: usize, got: usize },

    #[error("row {row} has {got} entries, expected {expected}")]
    RowLengthMismatch {
        row: usize,
        expected: usize,
        got: usize,
    },

    #[error("fillings live on different shapes")]
    ShapeMismatch,

    #[error("cell ({row},{col}) is empty", row = cell.row, col = cell.col)]
    EmptyCell { cell: Cell },

    #[error("filling is not a semistandard tableau")]
    NotSsyt,

    #[error("filling is not a reverse semistandard tableau")]
    NotReverseSsyt,

    #[error("entry {entry} at cell ({row},{col}) exceeds its row bound {bound}", row = cell.row, col = cell.col)]
    RowBoundExceeded { cell: Cell, entry: u64, bound: i64 },

    #[error("geometric series exponent must be positive, got {k}")]
    GeometricFactor { k: i64 },

    #[error("parse error at line {line}, token {token}: {msg}")]
    Parse {
        line: usize,
        token: usize,
        msg: String,
    },

    #[error(
        "strict round-trip check failed: re-splitting the result does not reproduce the input pair"
    )]
    StrictRoundTrip,

    #[error("internal invariant violated: {what}")]
    Internal { what: String },
}

impl Error {
    pub(crate) fn internal(what: impl Into<String>) -> Self {
        Error::Internal { what: what.into() }
    }
}
