use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
    #[error("duplicate abscissa {0} in interpolation points")]
    DuplicateAbscissa(String),
    #[error("need at least {needed} interpolation points, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("points do not lie on a polynomial of degree <= {0}")]
    DegreeBoundExceeded(usize),
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("invalid edge ({0}, {1}): {2}")]
    InvalidEdge(usize, usize, String),
    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("unknown kind `{0}`")]
    UnknownKind(String),
    #[error("corona needs exactly {expected} copies, got {got}")]
    CopyCountMismatch { expected: usize, got: usize },
    #[error("graph has no root vertex")]
    MissingRoot,
    #[error("constrained coronals are not all equal")]
    CoronalsNotEqual,
    #[error("copies do not share one block profile: {0}")]
    HeterogeneousProfiles(String),
    #[error("expected {expected} eigenvalue pairs, got {got}")]
    PairCountMismatch { expected: usize, got: usize },
    #[error("size {size} exceeds bound {bound}")]
    SizeBoundExceeded { size: usize, bound: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Malformed(e.to_string())
    }
}
