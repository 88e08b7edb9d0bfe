use thiserror::Error;

/// Errors produced by discrepancy computations and point-set IO.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("point set is empty; discrepancies need at least one point")]
    EmptyPointSet,

    #[error("dimension must be at least 1")]
    ZeroDimension,

    #[error("row {row}, column {col}: coordinate {value} is outside [0,1)")]
    CoordinateOutOfRange { row: usize, col: usize, value: f64 },

    #[error("invalid box on axis {axis}: lower {lower} / upper {upper}")]
    InvalidBox { axis: usize, lower: f64, upper: f64 },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("enumeration guard exceeded: {0}")]
    GuardExceeded(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
