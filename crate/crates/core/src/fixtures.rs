//! Small instances shared by unit tests.

use crate::graded::{DialgebraInstance, GradedMap, ProductTensor, SuperSpace};
use crate::linalg::{Field, Matrix, Vector};

pub const Q: Field = Field::Rational;

pub fn diag_in(field: Field, entries: &[i64]) -> GradedMap {
    let n = entries.len();
    let mut m = Matrix::zeros(field, n, n);
    for (i, &v) in entries.iter().enumerate() {
        m.set(i, i, field.from_i64(v));
    }
    GradedMap::new(m).unwrap()
}

pub fn diag(entries: &[i64]) -> GradedMap {
    diag_in(Q, entries)
}

pub fn vec_in(field: Field, v: &[i64]) -> Vector {
    v.iter().map(|&x| field.from_i64(x)).collect()
}

pub fn vec_of(v: &[i64]) -> Vector {
    vec_in(Q, v)
}

/// `e ⋆ e = e` on one even basis vector, identity maps.
pub fn idempotent_line_in(field: Field) -> DialgebraInstance {
    let prod = ProductTensor::from_fn(field, 1, |_, _| vec_in(field, &[1]));
    DialgebraInstance::new(SuperSpace::even(1), prod.clone(), prod, diag_in(field, &[1]), diag_in(field, &[1])).unwrap()
}

pub fn idempotent_line() -> DialgebraInstance {
    idempotent_line_in(Q)
}

/// Λ(ξ) with basis 1, ξ and parity (0, 1), as an associative superdialgebra.
pub fn grassmann_in(field: Field) -> DialgebraInstance {
    let prod = ProductTensor::from_fn(field, 2, |i, j| match (i, j) {
        (0, 0) => vec_in(field, &[1, 0]),
        (0, 1) | (1, 0) => vec_in(field, &[0, 1]),
        _ => vec_in(field, &[0, 0]),
    });
    let id = diag_in(field, &[1, 1]);
    DialgebraInstance::new(SuperSpace::from_bits(&[0, 1]), prod.clone(), prod, id.clone(), id).unwrap()
}

pub fn grassmann() -> DialgebraInstance {
    grassmann_in(Q)
}
