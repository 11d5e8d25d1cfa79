//! Exact computer algebra for finite-dimensional BiHom-superdialgebras.
//!
//! Instances are given by structure constants over ℚ or 𝔽_p. The crate
//! decides the axiom systems exactly, builds twisted, quotient and
//! differential instances, and computes derivation spaces as nullspaces.

pub mod axioms;
pub mod constructions;
pub mod corpus;
pub mod derivations;
pub mod error;
pub mod graded;
pub mod io;
pub mod linalg;

#[cfg(test)]
mod fixtures;

pub use error::{Error, Result};
pub use graded::{
    hom_power, DialgebraInstance, DifferentialInstance, GradedMap, Parity, ParityMap,
    ProductTensor, SuperSpace, SuperalgebraInstance,
};
pub use linalg::{Field, Matrix, Scalar, Vector};
