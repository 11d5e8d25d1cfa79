use crate::axioms::{check_bihom_assoc_superalgebra, CheckOptions};
use crate::error::{Error, Result};
use crate::graded::{DialgebraInstance, DifferentialInstance, GradedMap, Parity};
use crate::linalg::unit_vector;

/// Builds `p ⊣ q = α(p)·dq` and `p ⊢ q = dp·ε(q)` from a differential
/// BiHom-associative superalgebra with idempotent structure maps.
///
/// Every hypothesis is checked and reported by name with a witness:
/// `bihom-associative`, `d-squared-zero`, `d-commutes-alpha`,
/// `d-commutes-epsilon`, `leibniz`, `alpha-idempotent`, `epsilon-idempotent`.
pub fn from_differential(diff: &DifferentialInstance) -> Result<DialgebraInstance> {
    let base = &diff.base;
    let field = base.field();
    let dim = base.dim();
    let d = &diff.d;

    let report = check_bihom_assoc_superalgebra(base, CheckOptions::default());
    if let Some(v) = report.violations.first() {
        return Err(Error::precondition("bihom-associative", v.to_string()));
    }
    let d_map = GradedMap::new(d.matrix.clone())?;
    let d2 = d_map.compose(&d_map);
    if let Some(j) = (0..dim).find(|&j| d2.matrix().column(j).iter().any(|x| !x.is_zero())) {
        return Err(Error::precondition("d-squared-zero", format!("d(d(e{j})) != 0")));
    }
    for (name, m) in [("d-commutes-alpha", &base.alpha), ("d-commutes-epsilon", &base.epsilon)] {
        if !d_map.commutes_with(m) {
            return Err(Error::precondition(name, "matrices do not commute"));
        }
    }
    // d(p·q) = dp·q + (-1)^{|p||d|} p·dq on basis pairs.
    let prod = &base.prod;
    let dcols = d.matrix.columns();
    for i in 0..dim {
        let ei = unit_vector(field, dim, i);
        let sign = Parity::koszul(field, base.space.parity(i), d.parity);
        for j in 0..dim {
            let ej = unit_vector(field, dim, j);
            let lhs = d.apply(prod.product(i, j));
            let a = prod.mul(&dcols[i], &ej);
            let b = prod.mul(&ei, &dcols[j]);
            let rhs: Vec<_> = a.iter().zip(&b).map(|(x, y)| x + &(&sign * y)).collect();
            if lhs != rhs {
                return Err(Error::precondition("leibniz", format!("fails on (e{i}, e{j})")));
            }
        }
    }
    if !base.alpha.is_idempotent() {
        return Err(Error::precondition("alpha-idempotent", "alpha∘alpha != alpha"));
    }
    if !base.epsilon.is_idempotent() {
        return Err(Error::precondition("epsilon-idempotent", "epsilon∘epsilon != epsilon"));
    }

    Ok(DialgebraInstance {
        space: base.space.clone(),
        left: prod.precompose(base.alpha.matrix(), &d.matrix),
        right: prod.precompose(&d.matrix, base.epsilon.matrix()),
        alpha: base.alpha.clone(),
        epsilon: base.epsilon.clone(),
    })
}
