use super::ideal::{graded_basis, IdealWitness};
use crate::error::{Error, Result};
use crate::graded::{DialgebraInstance, GradedMap, Parity, ProductTensor, SuperSpace, VectorParity};
use crate::linalg::{extend_to_basis, Matrix, Vector};

/// `H/T` together with the projection `π : H → H/T`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub instance: DialgebraInstance,
    /// `dim(H/T) × dim(H)`; rows `r..` of `B⁻¹` where `B` lists `T`'s basis first.
    pub projection: Matrix,
}

/// The quotient by a graded two-sided ideal.
///
/// The basis of `H` is the graded basis of `T` followed by the greedy
/// completion from `extend_to_basis`; the completing vectors form the basis
/// of `H/T`, and all induced data goes through `π`.
pub fn quotient(h: &DialgebraInstance, t: &IdealWitness) -> Result<Quotient> {
    if !t.is_two_sided {
        let why = t
            .failures
            .first()
            .map(|f| format!("{}: {}", f.condition, f.detail))
            .unwrap_or_else(|| "not two-sided".into());
        return Err(Error::NotIdeal(why));
    }
    let field = h.field();
    let n = h.dim();
    let t_basis = graded_basis(field, &h.space, &t.basis)
        .ok_or_else(|| Error::NotGraded("ideal is not spanned by homogeneous vectors".into()))?;
    let r = t_basis.len();
    let full = extend_to_basis(field, &t_basis, n)?;
    let b = Matrix::from_columns(field, n, &full)?;
    let b_inv = b.inverse().ok_or_else(|| Error::Singular("quotient basis".into()))?;
    let q = n - r;
    let rows: Vec<Vec<_>> = (r..n).map(|i| b_inv.row(i).to_vec()).collect();
    let projection = if q == 0 { Matrix::zeros(field, 0, n) } else { Matrix::from_rows(field, rows)? };

    let reps: Vec<&Vector> = full[r..].iter().collect();
    let parity: Vec<Parity> = reps
        .iter()
        .map(|v| match h.space.vector_parity(v) {
            VectorParity::Pure(p) => p,
            _ => unreachable!("completion vectors are unit vectors"),
        })
        .collect();
    let induce = |prod: &ProductTensor| ProductTensor::from_fn(field, q, |a, c| projection.apply(&prod.mul(reps[a], reps[c])));
    let induce_map = |m: &GradedMap| {
        let cols: Vec<Vector> = reps.iter().map(|v| projection.apply(&m.apply(v))).collect();
        GradedMap::new(Matrix::from_columns(field, q, &cols).expect("square")).expect("square")
    };
    let instance = DialgebraInstance::new(
        SuperSpace::new(parity),
        induce(&h.left),
        induce(&h.right),
        induce_map(&h.alpha),
        induce_map(&h.epsilon),
    )?;
    Ok(Quotient { instance, projection })
}
