use thiserror::Error;

/// Errors raised by constructions and verifications.
///
/// Failed *checks* are usually reported as data (see [`crate::cert`]); an
/// `Error` means an input was malformed or a construction could not be
/// carried out.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("invalid scalar literal `{0}`")]
    InvalidScalar(String),

    #[error("vector {index} has length {found}, expected {expected}")]
    VectorLength {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: String,
        expected: usize,
        found: usize,
    },

    #[error("map is not surjective (rank {rank}, codomain dimension {codomain})")]
    NotSurjective { rank: usize, codomain: usize },

    #[error("map does not land in the target subspace: {0}")]
    NotContained(String),

    #[error("radical unavailable: {0}")]
    RadicalUnavailable(String),

    #[error("structure violation: {0}")]
    Violation(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn dims(context: impl Into<String>, expected: usize, found: usize) -> Error {
        Error::DimensionMismatch {
            context: context.into(),
            expected,
            found,
        }
    }

    pub(crate) fn input(message: impl Into<String>) -> Error {
        Error::Input(message.into())
    }

    /// Whether the error stems from malformed input rather than a failed property.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Violation(_) | Error::NotContained(_) | Error::NotSurjective { .. })
    }

    pub(crate) fn violation(message: impl Into<String>) -> Error {
        Error::Violation(message.into())
    }
}

/// Returns a dimension-mismatch error unless `expected == found`.
pub(crate) fn ensure_dim(context: &str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::dims(context, expected, found))
    }
}
