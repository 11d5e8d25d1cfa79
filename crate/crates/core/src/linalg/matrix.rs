//! Dense matrices over an exact field, with Gauss–Jordan elimination.

use std::fmt;

use super::{Field, LinalgError, Scalar};

/// A column vector, stored as its entries.
pub type Vector = Vec<Scalar>;

/// Row-major dense matrix whose entries all belong to `field`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn scalar(field: Field, n: usize, s: &Scalar) -> Matrix {
        Matrix::identity(field, n).scale(s)
    }

    /// Builds a matrix from rows, rejecting ragged input and foreign-field entries.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(LinalgError::Ragged { row: i, expected: c, found: row.len() });
            }
            for s in row {
                if !field.contains(&s) {
                    return Err(LinalgError::FieldMismatch { expected: field, found: s.field() });
                }
                data.push(s);
            }
        }
        Ok(Matrix { field, rows: r, cols: c, data })
    }

    /// Builds a `rows × vectors.len()` matrix whose columns are `vectors`.
    pub fn from_columns(field: Field, rows: usize, vectors: &[Vector]) -> Result<Matrix, LinalgError> {
        let mut m = Matrix::zeros(field, rows, vectors.len());
        for (j, v) in vectors.iter().enumerate() {
            if v.len() != rows {
                return Err(LinalgError::DimensionMismatch { expected: rows, found: v.len() });
            }
            for (i, s) in v.iter().enumerate() {
                if !field.contains(s) {
                    return Err(LinalgError::FieldMismatch { expected: field, found: s.field() });
                }
                m.set(i, j, s.clone());
            }
        }
        Ok(m)
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Matrix::from_rows(field, rows).expect("rectangular integer rows")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        debug_assert!(self.field.contains(&v));
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sub");
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    /// Matrix–vector product.
    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "shape mismatch in apply");
        let mut out = vec![self.field.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o = &*o + &(a * x);
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Reduced row-echelon form and the pivot columns.
    ///
    /// Pivots are chosen as the first nonzero entry at or below the current row.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let inv = a.get(r, c).inv().expect("nonzero pivot");
            for j in c..a.cols {
                let v = a.get(r, j) * &inv;
                a.set(r, j, v);
            }
            for i in 0..a.rows {
                if i == r {
                    continue;
                }
                let f = a.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..a.cols {
                    let pj = a.get(r, j);
                    if pj.is_zero() {
                        continue;
                    }
                    let v = a.get(i, j) - &(&f * pj);
                    a.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : Mv = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(row);
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| is_pivot[c].is_none()) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, free);
            }
            basis.push(v);
        }
        basis
    }

    /// Some `v` with `Mv = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vector>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for (i, bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            if !self.field.contains(bi) {
                return Err(LinalgError::FieldMismatch { expected: self.field, found: bi.field() });
            }
            aug.set(i, self.cols, bi.clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut v = vec![self.field.zero(); self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            v[c] = r.get(row, self.cols).clone();
        }
        Ok(Some(v))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A basis of the span of `vectors` (vectors of length `dim`), in RREF form.
pub fn span_basis(field: Field, dim: usize, vectors: &[Vector]) -> Vec<Vector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_rows(field, vectors.to_vec()).expect("uniform vectors");
    debug_assert_eq!(m.cols(), dim);
    let (r, pivots) = m.rref();
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

pub fn rank_of(field: Field, dim: usize, vectors: &[Vector]) -> usize {
    span_basis(field, dim, vectors).len()
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(field: Field, dim: usize, basis: &[Vector], v: &[Scalar]) -> bool {
    if v.iter().all(Scalar::is_zero) {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    let m = Matrix::from_columns(field, dim, basis).expect("uniform vectors");
    m.solve(v).expect("matching length").is_some()
}

/// Coordinates of `v` in `basis`, which must be linearly independent.
pub fn coordinates(field: Field, dim: usize, basis: &[Vector], v: &[Scalar]) -> Option<Vector> {
    if basis.is_empty() {
        return v.iter().all(Scalar::is_zero).then(Vec::new);
    }
    let m = Matrix::from_columns(field, dim, basis).expect("uniform vectors");
    m.solve(v).expect("matching length")
}

pub fn unit_vector(field: Field, dim: usize, i: usize) -> Vector {
    let mut v = vec![field.zero(); dim];
    v[i] = field.one();
    v
}

/// Completes independent `vectors` to a basis of the ambient space.
///
/// The inputs come first, followed by standard basis vectors `e_i` taken in
/// increasing `i` whenever they raise the rank.
pub fn extend_to_basis(field: Field, vectors: &[Vector], ambient_dim: usize) -> Result<Vec<Vector>, LinalgError> {
    let mut basis: Vec<Vector> = Vec::with_capacity(ambient_dim);
    for (idx, v) in vectors.iter().enumerate() {
        if v.len() != ambient_dim {
            return Err(LinalgError::DimensionMismatch { expected: ambient_dim, found: v.len() });
        }
        basis.push(v.clone());
        if rank_of(field, ambient_dim, &basis) < basis.len() {
            return Err(LinalgError::Dependent { index: idx });
        }
    }
    for i in 0..ambient_dim {
        if basis.len() == ambient_dim {
            break;
        }
        basis.push(unit_vector(field, ambient_dim, i));
        if rank_of(field, ambient_dim, &basis) < basis.len() {
            basis.pop();
        }
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(q(), 2);
        assert_eq!(id.rref(), (id.clone(), vec![0, 1]));

        let z = Matrix::zeros(q(), 3, 3);
        assert_eq!(z.rref(), (z.clone(), vec![]));

        let m = Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]);
        let (r, p) = m.rref();
        assert_eq!(r, Matrix::from_i64(q(), &[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn nullspace_examples() {
        assert!(Matrix::identity(q(), 4).nullspace().is_empty());
        assert_eq!(Matrix::zeros(q(), 1, 3).nullspace().len(), 3);

        let m = Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], vec![q().from_i64(-2), q().from_i64(1)]);
        assert!(m.apply(&ns[0]).iter().all(Scalar::is_zero));
    }

    #[test]
    fn solve_examples() {
        let b = vec![q().from_i64(3), q().from_i64(-7)];
        assert_eq!(Matrix::identity(q(), 2).solve(&b).unwrap(), Some(b.clone()));
        assert_eq!(Matrix::zeros(q(), 2, 2).solve(&b).unwrap(), None);
        let two = Matrix::from_i64(q(), &[&[2]]);
        assert_eq!(two.solve(&[q().from_i64(3)]).unwrap(), Some(vec![q().from_ratio(3, 2).unwrap()]));
        assert!(matches!(
            two.solve(&b),
            Err(LinalgError::DimensionMismatch { expected: 1, found: 2 })
        ));
    }

    #[test]
    fn extend_examples() {
        let e = |i| unit_vector(q(), 2, i);
        assert_eq!(extend_to_basis(q(), &[], 2).unwrap(), vec![e(0), e(1)]);
        assert_eq!(extend_to_basis(q(), &[e(1)], 2).unwrap(), vec![e(1), e(0)]);

        // Greedy completion of (1,1,0): e0 is independent, e1 is then dependent, e2 completes.
        let v = vec![q().from_i64(1), q().from_i64(1), q().from_i64(0)];
        let b = extend_to_basis(q(), std::slice::from_ref(&v), 3).unwrap();
        let e3 = |i| unit_vector(q(), 3, i);
        assert_eq!(b, vec![v.clone(), e3(0), e3(2)]);
        assert_eq!(rank_of(q(), 3, &b), 3);

        let err = extend_to_basis(q(), &[v.clone(), v], 3).unwrap_err();
        assert!(matches!(err, LinalgError::Dependent { index: 1 }));
    }

    #[test]
    fn mixed_field_entries_are_rejected() {
        let f5 = Field::prime(5).unwrap();
        let err = Matrix::from_rows(q(), vec![vec![q().one(), f5.one()]]).unwrap_err();
        assert!(matches!(err, LinalgError::FieldMismatch { .. }));
    }

    #[test]
    fn inverse_over_f5() {
        let f5 = Field::prime(5).unwrap();
        let m = Matrix::from_i64(f5, &[&[1, 2], &[3, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(f5, 2));
        assert!(Matrix::from_i64(f5, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
