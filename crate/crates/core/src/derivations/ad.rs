use serde::Serialize;

use crate::error::{Error, Result};
use crate::graded::{DialgebraInstance, Parity, ParityMap, ProductTensor, VectorParity};
use crate::linalg::{unit_vector, Matrix, Scalar, Vector};

/// Leibniz status of `ad_r` for one product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeibnizStatus {
    /// `ad(p⋆q) = ad(p)⋆q + p⋆ad(q)`, the identity derived in the proof.
    pub plain: bool,
    /// `ad(p⋆q) = (−1)^{|q||r|} ad(p)⋆q + p⋆ad(q)`: `p ↦ [p, r]` acts as a
    /// derivation from the right, so the sign moves `r` past `q`.
    pub signed: bool,
    /// First basis pair breaking the plain identity.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(usize, usize)>,
}

/// `ad_r` and how it behaves on each product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdResult {
    #[serde(skip)]
    pub map: ParityMap,
    pub parity: Parity,
    pub left: LeibnizStatus,
    pub right: LeibnizStatus,
}

fn status(h: &DialgebraInstance, prod: &ProductTensor, ad: &Matrix, r_parity: Parity) -> LeibnizStatus {
    let field = h.field();
    let n = h.dim();
    let cols = ad.columns();
    let mut plain = true;
    let mut signed = true;
    let mut witness = None;
    for i in 0..n {
        let ei = unit_vector(field, n, i);
        for j in 0..n {
            let ej = unit_vector(field, n, j);
            let sign = Parity::koszul(field, h.space.parity(j), r_parity);
            let lhs = ad.apply(prod.product(i, j));
            let a = prod.mul(&cols[i], &ej);
            let b = prod.mul(&ei, &cols[j]);
            let p: Vector = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            let s: Vector = a.iter().zip(&b).map(|(x, y)| &(&sign * x) + y).collect();
            if lhs != p {
                plain = false;
                witness.get_or_insert((i, j));
            }
            signed &= lhs == s;
        }
    }
    LeibnizStatus { plain, signed, witness }
}

/// `ad_r(p) = p⊣ε(r) − (−1)^{|p||r|} α(r)⊢p` for `α = ε` and homogeneous `r`,
/// with both Leibniz statuses.
pub fn ad_operator(h: &DialgebraInstance, r: &[Scalar]) -> Result<AdResult> {
    let field = h.field();
    let n = h.dim();
    if r.len() != n {
        return Err(Error::Dimension { context: "ad element".into(), expected: n, found: r.len() });
    }
    if h.alpha != h.epsilon {
        return Err(Error::precondition("alpha-equals-epsilon", "the two structure maps differ"));
    }
    let r_parity = match h.space.vector_parity(r) {
        VectorParity::Zero => Parity::Even,
        VectorParity::Pure(p) => p,
        VectorParity::Mixed => return Err(Error::Inhomogeneous),
    };
    let er = h.epsilon.apply(r);
    let ar = h.alpha.apply(r);
    let cols: Vec<Vector> = (0..n)
        .map(|j| {
            let ej = unit_vector(field, n, j);
            let sign = Parity::koszul(field, h.space.parity(j), r_parity);
            let a = h.left.mul(&ej, &er);
            let b = h.right.mul(&ar, &ej);
            a.iter().zip(&b).map(|(x, y)| x - &(&sign * y)).collect()
        })
        .collect();
    let matrix = Matrix::from_columns(field, n, &cols)?;
    let left = status(h, &h.left, &matrix, r_parity);
    let right = status(h, &h.right, &matrix, r_parity);
    Ok(AdResult {
        map: ParityMap { matrix, parity: r_parity },
        parity: r_parity,
        left,
        right,
    })
}
