use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("singular matrix")]
    Singular,
    #[error("linearly dependent input: {0}")]
    LinearlyDependent(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("not semisimple: {0}")]
    NotSemisimple(String),
    #[error("radical unavailable: {0}")]
    RadicalUnavailable(String),
    #[error("generation failure: closure has dimension {closure} < {ambient}")]
    GenerationFailure { closure: usize, ambient: usize },
    #[error("size cap exceeded: {0}")]
    CapExceeded(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{file}:{line}: {msg}")]
    File { file: String, line: usize, msg: String },
    #[error("internal verification failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
