use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar, Vector};

/// Structure constants of a bilinear product: `e_i ⋆ e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProductTensor {
    field: Field,
    dim: usize,
    c: Vec<Scalar>,
}

impl ProductTensor {
    pub fn zero(field: Field, dim: usize) -> ProductTensor {
        ProductTensor {
            field,
            dim,
            c: vec![field.zero(); dim * dim * dim],
        }
    }

    /// Builds a tensor whose `(i, j)` product is `f(i, j)`.
    pub fn from_fn(field: Field, dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> ProductTensor {
        let mut t = ProductTensor::zero(field, dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                assert_eq!(v.len(), dim);
                for (k, x) in v.into_iter().enumerate() {
                    t.set(i, j, k, x);
                }
            }
        }
        t
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[self.index(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        assert!(self.field.contains(&v), "scalar from foreign field");
        let idx = self.index(i, j, k);
        self.c[idx] = v;
    }

    /// Coordinates of `e_i ⋆ e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[Scalar] {
        let start = self.index(i, j, 0);
        &self.c[start..start + self.dim]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }

    /// Bilinear extension `u ⋆ v`.
    pub fn evaluate(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        for x in [u, v] {
            if x.len() != self.dim {
                return Err(Error::Dimension {
                    context: "product evaluation".into(),
                    expected: self.dim,
                    found: x.len(),
                });
            }
        }
        Ok(self.mul(u, v))
    }

    /// Like [`evaluate`](Self::evaluate) for vectors already known to have the right length.
    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = vec![self.field.zero(); self.dim];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let w = ui * vj;
                for (k, c) in self.product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = &out[k] + &(&w * c);
                    }
                }
            }
        }
        out
    }

    /// The product `(u, v) ↦ a(u) ⋆ b(v)`.
    pub fn precompose(&self, a: &Matrix, b: &Matrix) -> ProductTensor {
        let ac = a.columns();
        let bc = b.columns();
        ProductTensor::from_fn(self.field, self.dim, |i, j| self.mul(&ac[i], &bc[j]))
    }

    /// The product `(u, v) ↦ f(u ⋆ v)`.
    pub fn postcompose(&self, f: &Matrix) -> ProductTensor {
        ProductTensor::from_fn(self.field, self.dim, |i, j| f.apply(self.product(i, j)))
    }

    pub fn scale(&self, s: &Scalar) -> ProductTensor {
        ProductTensor {
            field: self.field,
            dim: self.dim,
            c: self.c.iter().map(|x| x * s).collect(),
        }
    }

    /// Structure constants in the basis given by the columns of `p` (`p_inv = p⁻¹`).
    pub fn change_basis(&self, p: &Matrix, p_inv: &Matrix) -> ProductTensor {
        let cols = p.columns();
        ProductTensor::from_fn(self.field, self.dim, |i, j| p_inv.apply(&self.mul(&cols[i], &cols[j])))
    }
}
