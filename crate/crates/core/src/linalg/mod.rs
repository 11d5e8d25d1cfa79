//! Field-generic exact linear algebra.
//!
//! Everything here is exact: residuals are compared against zero, never
//! against a tolerance. Two fields are supported, ℚ (arbitrary precision)
//! and 𝔽_p for a prime `p < 2³²`.

mod matrix;
mod scalar;

pub use matrix::{
    coordinates, extend_to_basis, in_span, rank_of, span_basis, unit_vector, Matrix, Vector,
};
pub use scalar::{Field, Fp, Scalar, MAX_PRIME};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: Field, found: Field },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ragged rows: row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },
    #[error("vector {index} is linearly dependent on the preceding vectors")]
    Dependent { index: usize },
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("not an exact rational literal: {0:?}")]
    BadLiteral(String),
    #[error("division by zero")]
    DivisionByZero,
}
