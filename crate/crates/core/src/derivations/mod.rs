//! Derivation-type maps as exact nullspaces.
//!
//! A map `d` of parity `|d|` is written `d = Σ x_s E_s` over the matrix units
//! `E_s` allowed by the parity pattern. Every defining identity is linear in
//! `d`, so the constraint matrix has the residual of `E_s` as its column `s`
//! and the solution space is its nullspace.

mod ad;
mod bracket;
mod file;
mod oracle;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graded::{hom_power, DialgebraInstance, GradedMap, Parity, ParityMap, ProductTensor, SuperSpace, SuperalgebraInstance};
use crate::linalg::{in_span, Field, Matrix, Scalar, Vector};

pub use ad::{ad_operator, AdResult, LeibnizStatus};
pub use bracket::{
    bracket, verify_bracket_closure, verify_generalized_bracket, BracketEntry, BracketReport,
};
pub use file::{DerivationFile, DerivationKind};
pub use oracle::{brute_force_derivations, satisfies_derivation, ORACLE_LIMIT};

/// Where the Koszul sign `(−1)^{|d||p|}` sits in the Leibniz rule.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignConvention {
    /// `d(p⋆q) = d(p)⋆T(q) + (−1)^{|d||p|} T(p)⋆d(q)`.
    #[default]
    Standard,
    /// `d(p⋆q) = T(p)⋆d(q) + (−1)^{|d||p|} d(p)⋆T(q)`, as printed for dialgebras.
    PaperDialgebra,
}

/// `(m, n, |d|)`: the twist `T = α^m ε^n` and the parity of `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub m: i64,
    pub n: i64,
    pub parity: Parity,
}

impl Signature {
    pub fn new(m: i64, n: i64, parity: Parity) -> Signature {
        Signature { m, n, parity }
    }

    /// Signature expected for `[d, d′]`.
    pub fn combine(self, other: Signature) -> Signature {
        Signature::new(self.m + other.m, self.n + other.n, self.parity + other.parity)
    }
}

/// Weights in `γ d(p⋆q) = δ d(p)⋆T(q) + (−1)^{|d||p|} λ T(p)⋆d(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedParams {
    pub gamma: Scalar,
    pub delta: Scalar,
    pub lambda: Scalar,
}

impl GeneralizedParams {
    pub fn new(gamma: Scalar, delta: Scalar, lambda: Scalar) -> GeneralizedParams {
        GeneralizedParams { gamma, delta, lambda }
    }

    pub fn ones(field: Field) -> GeneralizedParams {
        GeneralizedParams::new(field.one(), field.one(), field.one())
    }

    pub fn add(&self, other: &GeneralizedParams) -> GeneralizedParams {
        GeneralizedParams::new(&self.gamma + &other.gamma, &self.delta + &other.delta, &self.lambda + &other.lambda)
    }
}

/// A basis of one solved space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationSpace {
    pub signature: Signature,
    pub convention: SignConvention,
    pub basis: Vec<ParityMap>,
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Exact membership of a matrix in the span of the basis.
    pub fn contains(&self, m: &Matrix) -> bool {
        let n = m.rows();
        let flat: Vector = m.to_rows().into_iter().flatten().collect();
        let basis: Vec<Vector> = self.basis.iter().map(ParityMap::flatten).collect();
        in_span(m.field(), n * n, &basis, &flat)
    }

    /// Equal dimension and mutual membership.
    pub fn same_span(&self, other: &DerivationSpace) -> bool {
        self.dim() == other.dim()
            && self.basis.iter().all(|d| other.contains(&d.matrix))
            && other.basis.iter().all(|d| self.contains(&d.matrix))
    }
}

/// A quasi-derivation `d` with its companion `d′`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPair {
    pub d: ParityMap,
    pub d_prime: ParityMap,
}

/// Basis of the joint solution space of pairs `(d, d′)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiSpace {
    pub signature: Signature,
    pub convention: SignConvention,
    pub pairs: Vec<QuasiPair>,
}

impl QuasiSpace {
    /// A basis of the `d`-components, i.e. of the quasi-derivations themselves.
    pub fn projection(&self) -> Vec<Vector> {
        let Some(first) = self.pairs.first() else { return Vec::new() };
        let n = first.d.matrix.rows();
        let flat: Vec<Vector> = self.pairs.iter().map(|p| p.d.flatten()).collect();
        crate::linalg::span_basis(first.d.matrix.field(), n * n, &flat)
    }
}

/// The products and maps every solver needs.
pub(crate) struct System<'a> {
    pub field: Field,
    pub space: &'a SuperSpace,
    pub prods: Vec<&'a ProductTensor>,
    pub alpha: &'a GradedMap,
    pub epsilon: &'a GradedMap,
}

impl<'a> System<'a> {
    pub fn dialgebra(h: &'a DialgebraInstance) -> System<'a> {
        System {
            field: h.field(),
            space: &h.space,
            prods: vec![&h.left, &h.right],
            alpha: &h.alpha,
            epsilon: &h.epsilon,
        }
    }

    pub fn superalgebra(a: &'a SuperalgebraInstance) -> System<'a> {
        System {
            field: a.field(),
            space: &a.space,
            prods: vec![&a.prod],
            alpha: &a.alpha,
            epsilon: &a.epsilon,
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn twist(&self, sig: Signature) -> Result<GradedMap> {
        hom_power(self.alpha, self.epsilon, sig.m, sig.n)
    }

    /// Matrix slots `(i, j)` a map of this parity may occupy.
    pub fn slots(&self, parity: Parity) -> Vec<(usize, usize)> {
        let n = self.dim();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.space.parity(i) == self.space.parity(j) + parity)
            .collect()
    }

    /// Entries of `d∘α − α∘d` and `d∘ε − ε∘d`.
    pub fn commutation_residual(&self, d: &Matrix, out: &mut Vec<Scalar>) {
        for m in [self.alpha.matrix(), self.epsilon.matrix()] {
            let diff = d.mul(m).sub(&m.mul(d));
            out.extend(diff.to_rows().into_iter().flatten());
        }
    }

    /// `γ d(e_i⋆e_j) − δ·(first term) − λ·(second term)` with the sign placed per `conv`.
    ///
    /// `lhs` is the map applied to the product; it differs from `d` only for
    /// quasi-derivations.
    #[allow(clippy::too_many_arguments)]
    pub fn leibniz_residual(
        &self,
        lhs: &Matrix,
        d: &Matrix,
        parity: Parity,
        t: &Matrix,
        params: &GeneralizedParams,
        conv: SignConvention,
        out: &mut Vec<Scalar>,
    ) {
        let n = self.dim();
        let dcols = d.columns();
        let tcols = t.columns();
        for prod in &self.prods {
            for i in 0..n {
                let sign = Parity::koszul(self.field, self.space.parity(i), parity);
                let (s_first, s_second) = match conv {
                    SignConvention::Standard => (self.field.one(), sign),
                    SignConvention::PaperDialgebra => (sign, self.field.one()),
                };
                let c_first = &params.delta * &s_first;
                let c_second = &params.lambda * &s_second;
                for j in 0..n {
                    let left = lhs.apply(prod.product(i, j));
                    let first = prod.mul(&dcols[i], &tcols[j]);
                    let second = prod.mul(&tcols[i], &dcols[j]);
                    out.extend(
                        left.iter()
                            .zip(&first)
                            .zip(&second)
                            .map(|((l, f), s)| &(&(&params.gamma * l) - &(&c_first * f)) - &(&c_second * s)),
                    );
                }
            }
        }
    }
}

/// Nullspace of a constraint built from `unknowns` matrices sharing one slot pattern.
///
/// `residual` receives the unknown matrices and returns the stacked residuals.
pub(crate) fn solve_linear(
    field: Field,
    dim: usize,
    slots: &[(usize, usize)],
    unknowns: usize,
    residual: impl Fn(&[Matrix]) -> Vec<Scalar>,
) -> Vec<Vec<Matrix>> {
    let zero = Matrix::zeros(field, dim, dim);
    let mut columns: Vec<Vector> = Vec::with_capacity(slots.len() * unknowns);
    for u in 0..unknowns {
        for &(i, j) in slots {
            let mut ms = vec![zero.clone(); unknowns];
            ms[u].set(i, j, field.one());
            columns.push(residual(&ms));
        }
    }
    let rows = columns.first().map_or(0, Vec::len);
    let system = Matrix::from_columns(field, rows, &columns).expect("uniform residual length");
    let null = if columns.is_empty() { Vec::new() } else { system.nullspace() };
    null.into_iter()
        .map(|x| {
            let mut ms = vec![zero.clone(); unknowns];
            for (u, m) in ms.iter_mut().enumerate() {
                for (s, &(i, j)) in slots.iter().enumerate() {
                    m.set(i, j, x[u * slots.len() + s].clone());
                }
            }
            ms
        })
        .collect()
}

fn solve_system(
    sys: &System<'_>,
    sig: Signature,
    params: &GeneralizedParams,
    conv: SignConvention,
) -> Result<DerivationSpace> {
    let t = sys.twist(sig)?;
    let slots = sys.slots(sig.parity);
    let sols = solve_linear(sys.field, sys.dim(), &slots, 1, |ms| {
        let mut out = Vec::new();
        sys.commutation_residual(&ms[0], &mut out);
        sys.leibniz_residual(&ms[0], &ms[0], sig.parity, t.matrix(), params, conv, &mut out);
        out
    });
    Ok(DerivationSpace {
        signature: sig,
        convention: conv,
        basis: sols
            .into_iter()
            .map(|mut ms| ParityMap { matrix: ms.remove(0), parity: sig.parity })
            .collect(),
    })
}

/// `α^m ε^n`-derivations of a BiHom-superalgebra, standard sign convention.
pub fn solve_superalgebra_derivations(a: &SuperalgebraInstance, sig: Signature) -> Result<DerivationSpace> {
    let sys = System::superalgebra(a);
    solve_system(&sys, sig, &GeneralizedParams::ones(sys.field), SignConvention::Standard)
}

/// `α^m ε^n`-derivations of a BiHom-superdialgebra, constrained on both products.
pub fn solve_dialgebra_derivations(h: &DialgebraInstance, sig: Signature, conv: SignConvention) -> Result<DerivationSpace> {
    solve_generalized(h, &GeneralizedParams::ones(h.field()), sig, conv)
}

/// `(γ, δ, λ)`-weighted derivations; the weights are fixed inputs.
pub fn solve_generalized(
    h: &DialgebraInstance,
    params: &GeneralizedParams,
    sig: Signature,
    conv: SignConvention,
) -> Result<DerivationSpace> {
    solve_system(&System::dialgebra(h), sig, params, conv)
}

/// Joint solutions `(d, d′)`: both commute with `α` and `ε`, and `d′` of each
/// product equals the Leibniz expression in `d`.
pub fn solve_quasi(h: &DialgebraInstance, sig: Signature, conv: SignConvention) -> Result<QuasiSpace> {
    let sys = System::dialgebra(h);
    let t = sys.twist(sig)?;
    let ones = GeneralizedParams::ones(sys.field);
    let slots = sys.slots(sig.parity);
    let sols = solve_linear(sys.field, sys.dim(), &slots, 2, |ms| {
        let mut out = Vec::new();
        sys.commutation_residual(&ms[0], &mut out);
        sys.commutation_residual(&ms[1], &mut out);
        sys.leibniz_residual(&ms[1], &ms[0], sig.parity, t.matrix(), &ones, conv, &mut out);
        out
    });
    Ok(QuasiSpace {
        signature: sig,
        convention: conv,
        pairs: sols
            .into_iter()
            .map(|mut ms| {
                let d_prime = ms.pop().expect("two unknowns");
                let d = ms.pop().expect("two unknowns");
                QuasiPair {
                    d: ParityMap { matrix: d, parity: sig.parity },
                    d_prime: ParityMap { matrix: d_prime, parity: sig.parity },
                }
            })
            .collect(),
    })
}

/// Residual of one candidate map against the derivation constraints; empty
/// or all-zero exactly when `d` is a `(γ, δ, λ)`-derivation at `sig`.
pub fn derivation_residual(
    h: &DialgebraInstance,
    d: &Matrix,
    sig: Signature,
    params: &GeneralizedParams,
    conv: SignConvention,
) -> Result<Vec<Scalar>> {
    let sys = System::dialgebra(h);
    let t = sys.twist(sig)?;
    let mut out = Vec::new();
    sys.commutation_residual(d, &mut out);
    sys.leibniz_residual(d, d, sig.parity, t.matrix(), params, conv, &mut out);
    Ok(out)
}

/// Whether `d` satisfies the derivation constraints at `sig` exactly.
pub fn is_derivation(
    h: &DialgebraInstance,
    d: &Matrix,
    sig: Signature,
    params: &GeneralizedParams,
    conv: SignConvention,
) -> Result<bool> {
    let pattern_ok = System::dialgebra(h)
        .slots(sig.parity + Parity::Odd)
        .iter()
        .all(|&(i, j)| d.get(i, j).is_zero());
    Ok(pattern_ok && derivation_residual(h, d, sig, params, conv)?.iter().all(Scalar::is_zero))
}

/// Whether `(d, d′)` satisfies every quasi-derivation constraint exactly.
pub fn is_quasi_pair(h: &DialgebraInstance, pair: &QuasiPair, sig: Signature, conv: SignConvention) -> Result<bool> {
    let sys = System::dialgebra(h);
    let t = sys.twist(sig)?;
    let mut out = Vec::new();
    sys.commutation_residual(&pair.d.matrix, &mut out);
    sys.commutation_residual(&pair.d_prime.matrix, &mut out);
    sys.leibniz_residual(
        &pair.d_prime.matrix,
        &pair.d.matrix,
        sig.parity,
        t.matrix(),
        &GeneralizedParams::ones(sys.field),
        conv,
        &mut out,
    );
    Ok(out.iter().all(Scalar::is_zero))
}
