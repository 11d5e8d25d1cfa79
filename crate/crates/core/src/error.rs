use thiserror::Error;

use crate::linalg::LinalgError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    Dimension {
        context: String,
        expected: usize,
        found: usize,
    },
    #[error("maps do not commute: {0}")]
    NonCommuting(String),
    #[error("{0} is singular, so its negative powers are undefined")]
    Singular(String),
    #[error("schema error in `{field}`: {message}")]
    Schema { field: String, message: String },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("precondition `{name}` failed: {witness}")]
    Precondition { name: String, witness: String },
    #[error("subspace is not a two-sided BiHom-ideal: {0}")]
    NotIdeal(String),
    #[error("ideal is not graded: {0}")]
    NotGraded(String),
    #[error("vector is not parity-homogeneous")]
    Inhomogeneous,
    #[error("brute-force search needs {size} candidates, above the limit of {limit}")]
    SearchSpace { size: u128, limit: u128 },
    #[error("operation requires a prime field, got {0}")]
    NeedsPrimeField(crate::linalg::Field),
}

impl Error {
    pub(crate) fn precondition(name: impl Into<String>, witness: impl Into<String>) -> Error {
        Error::Precondition {
            name: name.into(),
            witness: witness.into(),
        }
    }

    pub(crate) fn schema(field: impl Into<String>, message: impl Into<String>) -> Error {
        Error::Schema {
            field: field.into(),
            message: message.into(),
        }
    }

    /// True for errors caused by malformed input rather than by mathematics.
    pub fn is_malformed_input(&self) -> bool {
        matches!(
            self,
            Error::Schema { .. } | Error::Json(_) | Error::Io(_) | Error::Dimension { .. }
        ) || matches!(
            self,
            Error::Linalg(
                LinalgError::BadLiteral(_)
                    | LinalgError::NotPrime(_)
                    | LinalgError::Ragged { .. }
                    | LinalgError::DivisionByZero
                    | LinalgError::FieldMismatch { .. }
                    | LinalgError::DimensionMismatch { .. }
            )
        )
    }
}
