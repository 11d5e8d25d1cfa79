//! Twisting constructions: precomposing both products with a pair of
//! endomorphisms and composing the structure maps.

use crate::axioms::{
    check_bihom_assoc_superalgebra, check_bihom_superdialgebra, check_hom_superdialgebra,
    check_multiplicative, check_regular, check_superdialgebra, CheckOptions, ViolationReport,
};
use crate::error::{Error, Result};
use crate::graded::{hom_power, DialgebraInstance, GradedMap, ProductTensor, SuperalgebraInstance};

/// First basis pair `(i, j)` with `f(e_i ⋆ e_j) ≠ f(e_i) ⋆ f(e_j)`.
pub fn multiplicativity_witness(f: &GradedMap, prod: &ProductTensor) -> Option<(usize, usize)> {
    let cols = f.matrix().columns();
    let n = prod.dim();
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| f.apply(prod.product(i, j)) != prod.mul(&cols[i], &cols[j]))
}

fn require_multiplicative(name: &str, f: &GradedMap, h: &DialgebraInstance) -> Result<()> {
    for (which, prod) in [("left", &h.left), ("right", &h.right)] {
        if let Some((i, j)) = multiplicativity_witness(f, prod) {
            return Err(Error::precondition(
                format!("{name}-multiplicative-{which}"),
                format!("{name}(e{i} * e{j}) != {name}(e{i}) * {name}(e{j})"),
            ));
        }
    }
    Ok(())
}

fn require_commute(name: &str, f: &GradedMap, g: &GradedMap) -> Result<()> {
    if f.commutes_with(g) {
        return Ok(());
    }
    let fg = f.compose(g);
    let gf = g.compose(f);
    let j = (0..f.dim())
        .find(|&j| fg.matrix().column(j) != gf.matrix().column(j))
        .expect("some column differs");
    Err(Error::precondition(name, format!("the two composites differ on e{j}")))
}

fn require_report(name: &str, report: ViolationReport) -> Result<()> {
    match report.violations.first() {
        None if report.is_empty() => Ok(()),
        Some(v) => Err(Error::precondition(name, v.to_string())),
        None => Err(Error::precondition(name, format!("{} violation(s)", report.total()))),
    }
}

/// `(H, ⊣∘(a⊗e), ⊢∘(a⊗e), α∘a, ε∘e)` with no hypotheses checked.
pub fn twist_products(h: &DialgebraInstance, a: &GradedMap, e: &GradedMap) -> DialgebraInstance {
    DialgebraInstance {
        space: h.space.clone(),
        left: h.left.precompose(a.matrix(), e.matrix()),
        right: h.right.precompose(a.matrix(), e.matrix()),
        alpha: h.alpha.compose(a),
        epsilon: h.epsilon.compose(e),
    }
}

/// Twists a BiHom-superdialgebra by two commuting endomorphisms.
///
/// Hypotheses enforced: `h` passes the BiHom checker; `a` and `e` are
/// multiplicative for both products, commute with each other, and each
/// commutes with both structure maps of `h`.
pub fn yau_twist(h: &DialgebraInstance, a: &GradedMap, e: &GradedMap) -> Result<DialgebraInstance> {
    require_report("input-bihom", check_bihom_superdialgebra(h, CheckOptions::default()))?;
    require_multiplicative("alpha'", a, h)?;
    require_multiplicative("epsilon'", e, h)?;
    require_commute("twist-maps-commute", a, e)?;
    require_commute("alpha'-commutes-with-alpha", a, &h.alpha)?;
    require_commute("alpha'-commutes-with-epsilon", a, &h.epsilon)?;
    require_commute("epsilon'-commutes-with-alpha", e, &h.alpha)?;
    require_commute("epsilon'-commutes-with-epsilon", e, &h.epsilon)?;
    Ok(twist_products(h, a, e))
}

/// `(H, ⊣∘(αⁿ⊗εⁿ), ⊢∘(αⁿ⊗εⁿ), αⁿ⁺¹, εⁿ⁺¹)` for a multiplicative instance.
pub fn power_twist(h: &DialgebraInstance, n: u32) -> Result<DialgebraInstance> {
    let (ok, report) = check_multiplicative(h, CheckOptions::default());
    if !ok {
        require_report("multiplicative", report)?;
    }
    yau_twist(h, &h.alpha.pow(n), &h.epsilon.pow(n))
}

/// From a Hom-superdialgebra `(H, ⊣, ⊢, α)` and an endomorphism `e`
/// commuting with `α`: `(H, ⊣∘(α⊗e), ⊢∘(α⊗e), α², α∘e)`.
///
/// This is the twist of `(H, ⊣, ⊢, α, α)` by the pair `(α, e)`. The second
/// structure map is `α∘e`; keeping it as plain `e` fails the BiHom identities
/// as soon as `α` acts nontrivially (see the tests).
pub fn hom_to_bihom(h: &DialgebraInstance, e: &GradedMap) -> Result<DialgebraInstance> {
    require_report("input-hom", check_hom_superdialgebra(h, CheckOptions::default()))?;
    require_multiplicative("epsilon'", e, h)?;
    require_commute("epsilon'-commutes-with-alpha", e, &h.alpha)?;
    let as_bihom = h.with_maps(h.alpha.clone(), h.alpha.clone());
    Ok(twist_products(&as_bihom, &h.alpha, e))
}

/// Untwists a regular BiHom-superdialgebra into a superdialgebra:
/// products `⊣∘(α⁻¹⊗ε⁻¹)`, `⊢∘(α⁻¹⊗ε⁻¹)` and identity structure maps.
pub fn untwist_regular(h: &DialgebraInstance) -> Result<DialgebraInstance> {
    if !check_regular(h) {
        let which = if h.alpha.is_invertible() { "epsilon" } else { "alpha" };
        return Err(Error::Singular(which.into()));
    }
    require_report("input-bihom", check_bihom_superdialgebra(h, CheckOptions::default()))?;
    let a_inv = hom_power(&h.alpha, &h.epsilon, -1, 0)?;
    let e_inv = hom_power(&h.alpha, &h.epsilon, 0, -1)?;
    Ok(twist_products(h, &a_inv, &e_inv))
}

/// `(D, ⊣∘(a⊗e), ⊢∘(a⊗e), a, e)` for a superdialgebra `D` and commuting
/// endomorphisms `a`, `e`. The structure maps stored in `d` are ignored.
pub fn superdialgebra_to_bihom(d: &DialgebraInstance, a: &GradedMap, e: &GradedMap) -> Result<DialgebraInstance> {
    require_report("input-superdialgebra", check_superdialgebra(d, CheckOptions::default()))?;
    require_multiplicative("alpha", a, d)?;
    require_multiplicative("epsilon", e, d)?;
    require_commute("maps-commute", a, e)?;
    Ok(twist_products(&d.with_identity_maps(), a, e))
}

/// A BiHom-associative superalgebra viewed as a BiHom-superdialgebra with `⊣ = ⊢ = ·`.
pub fn from_associative(a: &SuperalgebraInstance) -> Result<DialgebraInstance> {
    require_report("input-bihom-associative", check_bihom_assoc_superalgebra(a, CheckOptions::default()))?;
    Ok(DialgebraInstance {
        space: a.space.clone(),
        left: a.prod.clone(),
        right: a.prod.clone(),
        alpha: a.alpha.clone(),
        epsilon: a.epsilon.clone(),
    })
}
