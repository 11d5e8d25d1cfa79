use serde::Serialize;

use crate::error::Result;
use crate::graded::{DialgebraInstance, Parity, SuperSpace};
use crate::linalg::{in_span, span_basis, unit_vector, Field, Vector};

/// First failure of one closure condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureFailure {
    pub condition: &'static str,
    pub detail: String,
}

/// A subspace `T` with its computed classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealWitness {
    /// Reduced basis of `T`.
    pub basis: Vec<Vector>,
    pub is_subalgebra: bool,
    pub is_left: bool,
    pub is_right: bool,
    pub is_two_sided: bool,
    pub failures: Vec<ClosureFailure>,
}

impl IdealWitness {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, field: Field, ambient: usize, v: &[crate::linalg::Scalar]) -> bool {
        in_span(field, ambient, &self.basis, v)
    }
}

/// A homogeneous basis of `T` when `T = (T ∩ H₀) ⊕ (T ∩ H₁)`, even vectors first.
pub fn graded_basis(field: Field, space: &SuperSpace, basis: &[Vector]) -> Option<Vec<Vector>> {
    let dim = space.dim();
    let mut parts = Vec::new();
    for p in Parity::ALL {
        let proj: Vec<Vector> = basis.iter().map(|v| space.project(v, p)).collect();
        if !proj.iter().all(|v| in_span(field, dim, basis, v)) {
            return None;
        }
        parts.extend(span_basis(field, dim, &proj));
    }
    Some(parts)
}

/// Classifies `span(spanning)` as subalgebra / left / right / two-sided ideal.
///
/// A subalgebra is stable under `α`, `ε` and closed under both products.
/// Left ideals absorb `T ⋆ H`, right ideals `H ⋆ T`, for both products.
pub fn classify_subspace(h: &DialgebraInstance, spanning: &[Vector]) -> Result<IdealWitness> {
    let field = h.field();
    let dim = h.dim();
    for v in spanning {
        if v.len() != dim {
            return Err(crate::error::Error::Dimension {
                context: "subspace spanning vector".into(),
                expected: dim,
                found: v.len(),
            });
        }
    }
    let basis = span_basis(field, dim, spanning);
    let member = |v: &Vector| in_span(field, dim, &basis, v);
    let mut failures = Vec::new();
    let mut first_failure = |cond: &'static str, detail: String, ok: &mut bool| {
        if *ok {
            failures.push(ClosureFailure { condition: cond, detail });
        }
        *ok = false;
    };

    let mut stable = true;
    for (t_idx, t) in basis.iter().enumerate() {
        for (name, map) in [("alpha", &h.alpha), ("epsilon", &h.epsilon)] {
            if !member(&map.apply(t)) {
                first_failure("map-stable", format!("{name}(t{t_idx}) not in T"), &mut stable);
            }
        }
    }
    let mut closed = true;
    for (a, ta) in basis.iter().enumerate() {
        for (b, tb) in basis.iter().enumerate() {
            for (name, prod) in [("left", &h.left), ("right", &h.right)] {
                if !member(&prod.mul(ta, tb)) {
                    first_failure("product-closed", format!("t{a} {name} t{b} not in T"), &mut closed);
                }
            }
        }
    }
    let units: Vec<Vector> = (0..dim).map(|i| unit_vector(field, dim, i)).collect();
    let mut left = true;
    let mut right = true;
    for (a, t) in basis.iter().enumerate() {
        for (j, e) in units.iter().enumerate() {
            for (name, prod) in [("left", &h.left), ("right", &h.right)] {
                if !member(&prod.mul(t, e)) {
                    first_failure("left-absorbing", format!("t{a} {name} e{j} not in T"), &mut left);
                }
                if !member(&prod.mul(e, t)) {
                    first_failure("right-absorbing", format!("e{j} {name} t{a} not in T"), &mut right);
                }
            }
        }
    }
    let is_subalgebra = stable && closed;
    let is_left = is_subalgebra && left;
    let is_right = is_subalgebra && right;
    Ok(IdealWitness {
        basis,
        is_subalgebra,
        is_left,
        is_right,
        is_two_sided: is_left && is_right,
        failures,
    })
}

/// Classifies `T₁ + T₂`.
pub fn ideal_sum(h: &DialgebraInstance, t1: &IdealWitness, t2: &IdealWitness) -> Result<IdealWitness> {
    let mut spanning = t1.basis.clone();
    spanning.extend(t2.basis.iter().cloned());
    classify_subspace(h, &spanning)
}

/// The smallest two-sided BiHom-ideal containing `seeds`.
///
/// Homogeneous seeds generate a graded ideal, since products and structure
/// maps are even.
pub fn generated_ideal(h: &DialgebraInstance, seeds: &[Vector]) -> Result<IdealWitness> {
    let field = h.field();
    let dim = h.dim();
    let units: Vec<Vector> = (0..dim).map(|i| unit_vector(field, dim, i)).collect();
    let mut basis = span_basis(field, dim, seeds);
    loop {
        let mut grown = basis.clone();
        for t in &basis {
            grown.push(h.alpha.apply(t));
            grown.push(h.epsilon.apply(t));
            for e in &units {
                for prod in [&h.left, &h.right] {
                    grown.push(prod.mul(t, e));
                    grown.push(prod.mul(e, t));
                }
            }
        }
        let next = span_basis(field, dim, &grown);
        if next.len() == basis.len() {
            break;
        }
        basis = next;
    }
    classify_subspace(h, &basis)
}
