use serde::Serialize;

use super::{
    is_derivation, solve_dialgebra_derivations, solve_generalized, DerivationSpace, GeneralizedParams, Signature,
};
use crate::error::{Error, Result};
use crate::graded::{DialgebraInstance, Parity, ParityMap};
use crate::linalg::{coordinates, Vector};

/// `[d, d′] = d∘d′ − (−1)^{|d||d′|} d′∘d`, of parity `|d| + |d′|`.
pub fn bracket(d: &ParityMap, e: &ParityMap) -> Result<ParityMap> {
    if d.matrix.rows() != e.matrix.rows() {
        return Err(Error::Dimension {
            context: "bracket".into(),
            expected: d.matrix.rows(),
            found: e.matrix.rows(),
        });
    }
    let field = d.matrix.field();
    let sign = Parity::koszul(field, d.parity, e.parity);
    let matrix = d.matrix.mul(&e.matrix).sub(&e.matrix.mul(&d.matrix).scale(&sign));
    Ok(ParityMap { matrix, parity: d.parity + e.parity })
}

/// Outcome for one basis pair `(b_i, b′_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    /// The bracket satisfies the target constraints.
    pub satisfies: bool,
    /// The bracket lies in the span of the solved target basis.
    pub in_span: bool,
    /// `[b_i, b′_j] = −(−1)^{|b_i||b′_j|} [b′_j, b_i]` as matrices.
    pub antisymmetric: bool,
    /// The bracket commutes with both structure maps.
    pub commutes: bool,
    /// Coordinates in the target basis, when in the span.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coordinates: Option<Vec<String>>,
}

/// Closure evidence for all basis brackets of two solved spaces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BracketReport {
    pub target: Signature,
    pub target_dim: usize,
    pub entries: Vec<BracketEntry>,
}

impl BracketReport {
    pub fn closed(&self) -> bool {
        self.entries.iter().all(|e| e.satisfies && e.in_span)
    }

    pub fn antisymmetric(&self) -> bool {
        self.entries.iter().all(|e| e.antisymmetric)
    }

    pub fn first_failure(&self) -> Option<&BracketEntry> {
        self.entries.iter().find(|e| !(e.satisfies && e.in_span))
    }
}

fn flatten(m: &ParityMap) -> Vector {
    m.flatten()
}

fn entries(
    h: &DialgebraInstance,
    first: &DerivationSpace,
    second: &DerivationSpace,
    target: &DerivationSpace,
    params: &GeneralizedParams,
) -> Result<Vec<BracketEntry>> {
    let field = h.field();
    let n = h.dim();
    let target_flat: Vec<Vector> = target.basis.iter().map(flatten).collect();
    let mut out = Vec::new();
    for (i, d) in first.basis.iter().enumerate() {
        for (j, e) in second.basis.iter().enumerate() {
            let b = bracket(d, e)?;
            let back = bracket(e, d)?;
            let minus_sign = -Parity::koszul(field, d.parity, e.parity);
            let antisymmetric = back.matrix.scale(&minus_sign) == b.matrix;
            let commutes = [h.alpha.matrix(), h.epsilon.matrix()]
                .iter()
                .all(|m| b.matrix.mul(m) == m.mul(&b.matrix));
            let satisfies = is_derivation(h, &b.matrix, target.signature, params, target.convention)?;
            let coords = coordinates(field, n * n, &target_flat, &flatten(&b));
            out.push(BracketEntry {
                i,
                j,
                satisfies,
                in_span: coords.is_some(),
                antisymmetric,
                commutes,
                coordinates: coords.map(|c| c.iter().map(ToString::to_string).collect()),
            });
        }
    }
    Ok(out)
}

/// Checks `[d, d′] ∈ Der_{α^{m+s} ε^{n+t}}(H)` for all basis pairs.
///
/// The target space is solved at the combined signature with the first
/// space's sign convention. Coordinates of each bracket in that basis are the
/// structure constants of the bracket.
pub fn verify_bracket_closure(
    h: &DialgebraInstance,
    first: &DerivationSpace,
    second: &DerivationSpace,
) -> Result<BracketReport> {
    let target_sig = first.signature.combine(second.signature);
    let target = solve_dialgebra_derivations(h, target_sig, first.convention)?;
    let entries = entries(h, first, second, &target, &GeneralizedParams::ones(h.field()))?;
    Ok(BracketReport { target: target_sig, target_dim: target.dim(), entries })
}

/// Checks the claimed closure of generalized derivations under the bracket
/// with summed weights `(γ+γ′, δ+δ′, λ+λ′)`. Failures are evidence against
/// the claim for this instance, not errors.
pub fn verify_generalized_bracket(
    h: &DialgebraInstance,
    first: (&GeneralizedParams, &DerivationSpace),
    second: (&GeneralizedParams, &DerivationSpace),
) -> Result<(GeneralizedParams, BracketReport)> {
    let params = first.0.add(second.0);
    let target_sig = first.1.signature.combine(second.1.signature);
    let target = solve_generalized(h, &params, target_sig, first.1.convention)?;
    let entries = entries(h, first.1, second.1, &target, &params)?;
    Ok((params, BracketReport { target: target_sig, target_dim: target.dim(), entries }))
}
