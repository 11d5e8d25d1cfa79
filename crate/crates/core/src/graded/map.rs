use crate::error::{Error, Result};
use crate::graded::{Parity, SuperSpace};
use crate::linalg::{Field, Matrix, Scalar, Vector};

/// Matrix of a linear endomorphism; column `j` is the image of `e_j`.
///
/// Structure maps, twisting maps and morphisms are expected to be even;
/// that is reported by [`check_grading`](crate::graded::check_grading)
/// rather than enforced here.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedMap(Matrix);

impl GradedMap {
    pub fn new(m: Matrix) -> Result<GradedMap> {
        if !m.is_square() {
            return Err(Error::Dimension {
                context: "endomorphism must be square".into(),
                expected: m.rows(),
                found: m.cols(),
            });
        }
        Ok(GradedMap(m))
    }

    pub fn identity(field: Field, dim: usize) -> GradedMap {
        GradedMap(Matrix::identity(field, dim))
    }

    pub fn zero(field: Field, dim: usize) -> GradedMap {
        GradedMap(Matrix::zeros(field, dim, dim))
    }

    pub fn scalar(field: Field, dim: usize, s: i64) -> GradedMap {
        GradedMap(Matrix::scalar(field, dim, &field.from_i64(s)))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn field(&self) -> Field {
        self.0.field()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.0.apply(v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMap) -> GradedMap {
        GradedMap(self.0.mul(&other.0))
    }

    pub fn commutes_with(&self, other: &GradedMap) -> bool {
        self.0.mul(&other.0) == other.0.mul(&self.0)
    }

    pub fn pow(&self, e: u32) -> GradedMap {
        GradedMap(self.0.pow(e))
    }

    pub fn inverse(&self) -> Option<GradedMap> {
        self.0.inverse().map(GradedMap)
    }

    pub fn is_invertible(&self) -> bool {
        self.0.is_invertible()
    }

    pub fn is_idempotent(&self) -> bool {
        self.0.mul(&self.0) == self.0
    }

    /// Entries `(i, j)` with `parity[i] ≠ parity[j] + shift` that are nonzero.
    pub fn parity_violations(&self, space: &SuperSpace, shift: Parity) -> Vec<(usize, usize)> {
        parity_violations(&self.0, space, shift)
    }
}

pub(crate) fn parity_violations(m: &Matrix, space: &SuperSpace, shift: Parity) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if space.parity(i) != space.parity(j) + shift && !m.get(i, j).is_zero() {
                out.push((i, j));
            }
        }
    }
    out
}

/// A parity-homogeneous linear map `d` with `|d| = parity`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParityMap {
    pub matrix: Matrix,
    pub parity: Parity,
}

impl ParityMap {
    /// Checks that `matrix` only has entries allowed by `parity`.
    pub fn new(space: &SuperSpace, matrix: Matrix, parity: Parity) -> Result<ParityMap> {
        if matrix.rows() != space.dim() || matrix.cols() != space.dim() {
            return Err(Error::Dimension {
                context: "parity map".into(),
                expected: space.dim(),
                found: matrix.rows().max(matrix.cols()),
            });
        }
        if let Some(&(i, j)) = parity_violations(&matrix, space, parity).first() {
            return Err(Error::precondition(
                "parity-homogeneous",
                format!("entry ({i},{j}) is nonzero for a map of parity {parity}"),
            ));
        }
        Ok(ParityMap { matrix, parity })
    }

    pub fn zero(field: Field, dim: usize, parity: Parity) -> ParityMap {
        ParityMap {
            matrix: Matrix::zeros(field, dim, dim),
            parity,
        }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.apply(v)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Row-major flattening, used for span computations.
    pub fn flatten(&self) -> Vector {
        self.matrix.to_rows().into_iter().flatten().collect()
    }
}

/// `f^m ∘ g^n` for commuting `f`, `g`; negative exponents use inverses.
pub fn hom_power(f: &GradedMap, g: &GradedMap, m: i64, n: i64) -> Result<GradedMap> {
    if f.dim() != g.dim() {
        return Err(Error::Dimension {
            context: "hom_power".into(),
            expected: f.dim(),
            found: g.dim(),
        });
    }
    if !f.commutes_with(g) {
        return Err(Error::NonCommuting("first and second structure maps".into()));
    }
    let signed = |map: &GradedMap, e: i64, name: &str| -> Result<GradedMap> {
        if e >= 0 {
            return Ok(map.pow(e as u32));
        }
        let inv = map.inverse().ok_or_else(|| Error::Singular(name.to_string()))?;
        Ok(inv.pow(e.unsigned_abs() as u32))
    };
    Ok(signed(f, m, "first map")?.compose(&signed(g, n, "second map")?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hom_power_examples() {
        let q = Field::Rational;
        let a = GradedMap::scalar(q, 3, 2);
        let e = GradedMap::identity(q, 3);
        assert_eq!(hom_power(&a, &e, 0, 0).unwrap(), GradedMap::identity(q, 3));
        assert_eq!(hom_power(&a, &e, 3, 5).unwrap(), GradedMap::scalar(q, 3, 8));

        let swap = GradedMap::new(Matrix::from_i64(q, &[&[0, 1], &[1, 0]])).unwrap();
        let id = GradedMap::identity(q, 2);
        assert_eq!(hom_power(&swap, &id, -1, 0).unwrap(), swap);
    }

    #[test]
    fn hom_power_errors() {
        let q = Field::Rational;
        let a = GradedMap::new(Matrix::from_i64(q, &[&[1, 1], &[0, 1]])).unwrap();
        let b = GradedMap::new(Matrix::from_i64(q, &[&[1, 0], &[1, 1]])).unwrap();
        assert!(matches!(hom_power(&a, &b, 1, 1), Err(Error::NonCommuting(_))));
        let z = GradedMap::zero(q, 2);
        let id = GradedMap::identity(q, 2);
        assert!(matches!(hom_power(&z, &id, -1, 0), Err(Error::Singular(_))));
        assert!(matches!(hom_power(&id, &z, 0, -2), Err(Error::Singular(_))));
        assert!(hom_power(&id, &z, 0, 2).is_ok());
    }

    #[test]
    fn parity_map_rejects_wrong_entries() {
        let q = Field::Rational;
        let space = SuperSpace::from_bits(&[0, 1]);
        let odd = Matrix::from_i64(q, &[&[0, 0], &[1, 0]]);
        assert!(ParityMap::new(&space, odd.clone(), Parity::Odd).is_ok());
        assert!(ParityMap::new(&space, odd, Parity::Even).is_err());
    }
}
