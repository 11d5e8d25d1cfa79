use serde::Serialize;

use super::ideal::{classify_subspace, IdealWitness};
use crate::error::{Error, Result};
use crate::graded::DialgebraInstance;
use crate::linalg::{span_basis, unit_vector, Matrix, Vector};

/// Which morphism condition failed, with the basis index or pair exhibiting it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorphismFailure {
    pub condition: &'static str,
    pub indices: Vec<usize>,
}

/// Exact verdict on `g : H1 → H2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorphismWitness {
    pub even: bool,
    pub commutes_alpha: bool,
    pub commutes_epsilon: bool,
    pub preserves_left: bool,
    pub preserves_right: bool,
    pub failures: Vec<MorphismFailure>,
}

impl MorphismWitness {
    pub fn is_morphism(&self) -> bool {
        self.even && self.commutes_alpha && self.commutes_epsilon && self.preserves_left && self.preserves_right
    }
}

/// The verdict plus kernel and image of `g`, each classified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismAnalysis {
    pub witness: MorphismWitness,
    pub kernel: IdealWitness,
    pub image: IdealWitness,
}

/// Checks `g∘α = α′∘g`, `g∘ε = ε′∘g` and `g(p⋆q) = g(p)⋆′g(q)` for both products.
///
/// `g` is `dim(H2) × dim(H1)` with column `j` the image of `e_j`.
pub fn morphism_check(h1: &DialgebraInstance, h2: &DialgebraInstance, g: &Matrix) -> Result<MorphismAnalysis> {
    let (n1, n2) = (h1.dim(), h2.dim());
    if g.rows() != n2 || g.cols() != n1 {
        return Err(Error::Dimension {
            context: format!("morphism matrix must be {n2}x{n1}"),
            expected: n2 * n1,
            found: g.rows() * g.cols(),
        });
    }
    if h1.field() != h2.field() || g.field() != h1.field() {
        return Err(Error::schema("field", "morphism and instances must share a field"));
    }
    let field = h1.field();
    let mut failures = Vec::new();

    let mut even = true;
    for i in 0..n2 {
        for j in 0..n1 {
            if h2.space.parity(i) != h1.space.parity(j) && !g.get(i, j).is_zero() {
                if even {
                    failures.push(MorphismFailure { condition: "even", indices: vec![i, j] });
                }
                even = false;
            }
        }
    }

    let mut commutes = |name: &'static str, m1: &Matrix, m2: &Matrix| {
        let lhs = g.mul(m1);
        let rhs = m2.mul(g);
        match (0..n1).find(|&j| lhs.column(j) != rhs.column(j)) {
            None => true,
            Some(j) => {
                failures.push(MorphismFailure { condition: name, indices: vec![j] });
                false
            }
        }
    };
    let commutes_alpha = commutes("commutes-alpha", h1.alpha.matrix(), h2.alpha.matrix());
    let commutes_epsilon = commutes("commutes-epsilon", h1.epsilon.matrix(), h2.epsilon.matrix());

    let images = g.columns();
    let mut preserves = |name: &'static str, p1: &crate::graded::ProductTensor, p2: &crate::graded::ProductTensor| {
        for i in 0..n1 {
            for j in 0..n1 {
                if g.apply(p1.product(i, j)) != p2.mul(&images[i], &images[j]) {
                    failures.push(MorphismFailure { condition: name, indices: vec![i, j] });
                    return false;
                }
            }
        }
        true
    };
    let preserves_left = preserves("preserves-left", &h1.left, &h2.left);
    let preserves_right = preserves("preserves-right", &h1.right, &h2.right);

    let kernel_vectors: Vec<Vector> = g.nullspace();
    let kernel = classify_subspace(h1, &kernel_vectors)?;
    let image_vectors = span_basis(field, n2, &images);
    let image = classify_subspace(h2, &image_vectors)?;

    Ok(MorphismAnalysis {
        witness: MorphismWitness {
            even,
            commutes_alpha,
            commutes_epsilon,
            preserves_left,
            preserves_right,
            failures,
        },
        kernel,
        image,
    })
}

/// The identity matrix viewed as `H → H`.
pub fn identity_morphism(h: &DialgebraInstance) -> Matrix {
    let field = h.field();
    let n = h.dim();
    let cols: Vec<Vector> = (0..n).map(|i| unit_vector(field, n, i)).collect();
    Matrix::from_columns(field, n, &cols).expect("square identity")
}
