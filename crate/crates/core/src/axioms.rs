//! Exact decision procedures for the dialgebra axiom systems.
//!
//! Every identity is multilinear, so checking it on all basis tuples decides
//! it on the whole space. Identities are implemented exactly as stated, with
//! no Koszul signs inserted.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::graded::{DialgebraInstance, GradedMap, ProductTensor, SuperalgebraInstance};
use crate::linalg::{unit_vector, Field, Vector};

/// Default cap on stored violations per axiom.
pub const DEFAULT_MAX_VIOLATIONS: usize = 100;

/// One identity of one axiom system. Labels follow the usual numbering of
/// the four definitions: `Def1` superdialgebra, `Def2` Hom-superdialgebra,
/// `Def3` BiHom-associative superalgebra, `Def4` BiHom-superdialgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomId {
    /// `p⊢(q⊣r) = (p⊢q)⊣r`
    DiRightLeftAssoc,
    /// `p⊣(q⊣r) = (p⊣q)⊣r`
    DiLeftAssoc,
    /// `(p⊣q)⊣r = p⊣(q⊢r)`
    DiLeftAbsorbsRight,
    /// `p⊢(q⊢r) = (p⊢q)⊢r`
    DiRightAssoc,
    /// `(p⊢q)⊢r = (p⊣q)⊢r`
    DiRightAbsorbsLeft,

    HomMultLeft,
    HomMultRight,
    /// `α(p)⊣(q⊣r) = (p⊣q)⊣α(r)`
    HomLeftAssoc,
    /// `(p⊣q)⊣α(r) = α(p)⊣(q⊢r)`
    HomLeftAbsorbsRight,
    /// `α(p)⊢(q⊢r) = (p⊢q)⊢α(r)`
    HomRightAssoc,
    /// `(p⊢q)⊢α(r) = (p⊣q)⊢α(r)`
    HomRightAbsorbsLeft,
    /// `α(p)⊢(q⊣r) = (p⊢q)⊣α(r)`
    HomRightLeftAssoc,

    AssocMapsCommute,
    AssocAlphaMult,
    AssocEpsilonMult,
    /// `α(p)·(q·r) = (p·q)·ε(r)`
    AssocBiHom,

    MapsCommute,
    AlphaMultLeft,
    AlphaMultRight,
    EpsilonMultLeft,
    EpsilonMultRight,
    /// `(p⊣q)⊣ε(r) = α(p)⊣(q⊣r)`
    LeftLeft,
    /// `(p⊢q)⊣ε(r) = α(p)⊢(q⊣r)`
    RightLeft,
    /// `(p⊣q)⊢ε(r) = α(p)⊣(q⊢r)`
    LeftRight,
    /// `(p⊢q)⊢ε(r) = α(p)⊢(q⊢r)`
    RightRight,
}

impl AxiomId {
    pub fn label(self) -> &'static str {
        use AxiomId::*;
        match self {
            DiRightLeftAssoc => "Def1.i",
            DiLeftAssoc => "Def1.ii.a",
            DiLeftAbsorbsRight => "Def1.ii.b",
            DiRightAssoc => "Def1.iii.a",
            DiRightAbsorbsLeft => "Def1.iii.b",
            HomMultLeft => "Def2.i.left",
            HomMultRight => "Def2.i.right",
            HomLeftAssoc => "Def2.ii.a",
            HomLeftAbsorbsRight => "Def2.ii.b",
            HomRightAssoc => "Def2.iii.a",
            HomRightAbsorbsLeft => "Def2.iii.b",
            HomRightLeftAssoc => "Def2.iv",
            AssocMapsCommute => "Def3.i",
            AssocAlphaMult => "Def3.ii.alpha",
            AssocEpsilonMult => "Def3.ii.epsilon",
            AssocBiHom => "Def3.iii",
            MapsCommute => "Def4.i",
            AlphaMultLeft => "Def4.ii.left",
            AlphaMultRight => "Def4.ii.right",
            EpsilonMultLeft => "Def4.iii.left",
            EpsilonMultRight => "Def4.iii.right",
            LeftLeft => "Def4.iv",
            RightLeft => "Def4.v",
            LeftRight => "Def4.vi",
            RightRight => "Def4.vii",
        }
    }

    pub fn is_multiplicativity(self) -> bool {
        use AxiomId::*;
        matches!(self, AlphaMultLeft | AlphaMultRight | EpsilonMultLeft | EpsilonMultRight)
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for AxiomId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// A basis tuple on which an identity fails, with both sides evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: AxiomId,
    pub indices: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

impl Serialize for Violation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let strs = |v: &Vector| v.iter().map(ToString::to_string).collect::<Vec<_>>();
        let mut st = s.serialize_struct("Violation", 4)?;
        st.serialize_field("axiom", &self.axiom)?;
        st.serialize_field("indices", &self.indices)?;
        st.serialize_field("lhs", &strs(&self.lhs))?;
        st.serialize_field("rhs", &strs(&self.rhs))?;
        st.end()
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &Vector| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        write!(f, "{} at {:?}: lhs = ({}), rhs = ({})", self.axiom, self.indices, show(&self.lhs), show(&self.rhs))
    }
}

/// All checked identities with their failure counts; stored violations are
/// capped per axiom but `counts` are exact.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ViolationReport {
    pub checked: Vec<AxiomId>,
    pub counts: BTreeMap<AxiomId, usize>,
    pub violations: Vec<Violation>,
}

impl ViolationReport {
    pub fn is_empty(&self) -> bool {
        self.counts.values().all(|&c| c == 0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn failed_axioms(&self) -> Vec<AxiomId> {
        self.counts.iter().filter(|(_, &c)| c > 0).map(|(&a, _)| a).collect()
    }

    pub fn count(&self, axiom: AxiomId) -> usize {
        self.counts.get(&axiom).copied().unwrap_or(0)
    }

    pub fn merge(&mut self, other: ViolationReport) {
        self.checked.extend(other.checked);
        for (a, c) in other.counts {
            *self.counts.entry(a).or_default() += c;
        }
        self.violations.extend(other.violations);
        self.violations.sort_by(|a, b| (a.axiom, &a.indices).cmp(&(b.axiom, &b.indices)));
    }
}

impl fmt::Display for ViolationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return writeln!(f, "all {} identities hold", self.checked.len());
        }
        for (a, c) in self.counts.iter().filter(|(_, &c)| c > 0) {
            writeln!(f, "{a}: {c} violation(s)")?;
        }
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub max_per_axiom: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            max_per_axiom: DEFAULT_MAX_VIOLATIONS,
        }
    }
}

/// Which axiom system to decide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AxiomSystem {
    Superdialgebra,
    HomSuperdialgebra,
    BiHomSuperdialgebra,
    Multiplicative,
}

struct Recorder {
    report: ViolationReport,
    opts: CheckOptions,
}

impl Recorder {
    fn new(opts: CheckOptions) -> Recorder {
        Recorder {
            report: ViolationReport::default(),
            opts,
        }
    }

    fn start(&mut self, axiom: AxiomId) {
        self.report.checked.push(axiom);
        self.report.counts.entry(axiom).or_default();
    }

    fn compare(&mut self, axiom: AxiomId, indices: &[usize], lhs: Vector, rhs: Vector) {
        if lhs == rhs {
            return;
        }
        let c = self.report.counts.entry(axiom).or_default();
        *c += 1;
        if *c <= self.opts.max_per_axiom {
            self.report.violations.push(Violation {
                axiom,
                indices: indices.to_vec(),
                lhs,
                rhs,
            });
        }
    }

    fn finish(self) -> ViolationReport {
        self.report
    }
}

/// Precomputed columns shared by all identities.
struct Ctx<'a> {
    dim: usize,
    basis: Vec<Vector>,
    left: &'a ProductTensor,
    right: &'a ProductTensor,
}

impl<'a> Ctx<'a> {
    fn new(field: Field, left: &'a ProductTensor, right: &'a ProductTensor) -> Ctx<'a> {
        let dim = left.dim();
        Ctx {
            dim,
            basis: (0..dim).map(|i| unit_vector(field, dim, i)).collect(),
            left,
            right,
        }
    }

    fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> {
        let n = self.dim;
        (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.dim;
        (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
    }
}

fn check_commute(rec: &mut Recorder, axiom: AxiomId, a: &GradedMap, e: &GradedMap) {
    rec.start(axiom);
    let ae = a.compose(e);
    let ea = e.compose(a);
    for j in 0..a.dim() {
        rec.compare(axiom, &[j], ae.matrix().column(j), ea.matrix().column(j));
    }
}

fn check_mult(rec: &mut Recorder, ctx: &Ctx, axiom: AxiomId, map: &GradedMap, prod: &ProductTensor) {
    rec.start(axiom);
    let cols = map.matrix().columns();
    for (i, j) in ctx.pairs() {
        let lhs = map.apply(prod.product(i, j));
        let rhs = prod.mul(&cols[i], &cols[j]);
        rec.compare(axiom, &[i, j], lhs, rhs);
    }
}

/// `(p ⋆₁ q) ⋆₂ ε(r) = α(p) ⋆₃ (q ⋆₄ r)` on all basis triples.
fn check_twisted_assoc(
    rec: &mut Recorder,
    ctx: &Ctx,
    axiom: AxiomId,
    outer_left: (&ProductTensor, &ProductTensor),
    outer_right: (&ProductTensor, &ProductTensor),
    alpha: &[Vector],
    epsilon: &[Vector],
) {
    rec.start(axiom);
    let (inner_l, outer_l) = outer_left;
    let (outer_r, inner_r) = outer_right;
    for (i, j, k) in ctx.triples() {
        let lhs = outer_l.mul(inner_l.product(i, j), &epsilon[k]);
        let rhs = outer_r.mul(&alpha[i], inner_r.product(j, k));
        rec.compare(axiom, &[i, j, k], lhs, rhs);
    }
}

/// The five untwisted identities. Structure maps are ignored.
pub fn check_superdialgebra(h: &DialgebraInstance, opts: CheckOptions) -> ViolationReport {
    let ctx = Ctx::new(h.field(), &h.left, &h.right);
    let id = ctx.basis.clone();
    let (l, r) = (ctx.left, ctx.right);
    let mut rec = Recorder::new(opts);
    // Each identity written as (x ⋆ y) ⋆ z = x ⋆ (y ⋆ z) with identity twists.
    check_twisted_assoc(&mut rec, &ctx, AxiomId::DiRightLeftAssoc, (r, l), (r, l), &id, &id);
    check_twisted_assoc(&mut rec, &ctx, AxiomId::DiLeftAssoc, (l, l), (l, l), &id, &id);
    check_twisted_assoc(&mut rec, &ctx, AxiomId::DiLeftAbsorbsRight, (l, l), (l, r), &id, &id);
    check_twisted_assoc(&mut rec, &ctx, AxiomId::DiRightAssoc, (r, r), (r, r), &id, &id);
    rec.start(AxiomId::DiRightAbsorbsLeft);
    for (i, j, k) in ctx.triples() {
        let lhs = r.mul(r.product(i, j), &id[k]);
        let rhs = r.mul(l.product(i, j), &id[k]);
        rec.compare(AxiomId::DiRightAbsorbsLeft, &[i, j, k], lhs, rhs);
    }
    rec.finish()
}

/// Multiplicativity of `α` plus the Hom-twisted identities; `ε` is ignored.
pub fn check_hom_superdialgebra(h: &DialgebraInstance, opts: CheckOptions) -> ViolationReport {
    let ctx = Ctx::new(h.field(), &h.left, &h.right);
    let (l, r) = (ctx.left, ctx.right);
    let a = h.alpha.matrix().columns();
    let mut rec = Recorder::new(opts);
    check_mult(&mut rec, &ctx, AxiomId::HomMultLeft, &h.alpha, l);
    check_mult(&mut rec, &ctx, AxiomId::HomMultRight, &h.alpha, r);
    check_twisted_assoc(&mut rec, &ctx, AxiomId::HomLeftAssoc, (l, l), (l, l), &a, &a);
    check_twisted_assoc(&mut rec, &ctx, AxiomId::HomLeftAbsorbsRight, (l, l), (l, r), &a, &a);
    check_twisted_assoc(&mut rec, &ctx, AxiomId::HomRightAssoc, (r, r), (r, r), &a, &a);
    rec.start(AxiomId::HomRightAbsorbsLeft);
    for (i, j, k) in ctx.triples() {
        let lhs = r.mul(r.product(i, j), &a[k]);
        let rhs = r.mul(l.product(i, j), &a[k]);
        rec.compare(AxiomId::HomRightAbsorbsLeft, &[i, j, k], lhs, rhs);
    }
    check_twisted_assoc(&mut rec, &ctx, AxiomId::HomRightLeftAssoc, (r, l), (r, l), &a, &a);
    rec.finish()
}

pub fn check_bihom_assoc_superalgebra(a: &SuperalgebraInstance, opts: CheckOptions) -> ViolationReport {
    let ctx = Ctx::new(a.field(), &a.prod, &a.prod);
    let p = &a.prod;
    let mut rec = Recorder::new(opts);
    check_commute(&mut rec, AxiomId::AssocMapsCommute, &a.alpha, &a.epsilon);
    check_mult(&mut rec, &ctx, AxiomId::AssocAlphaMult, &a.alpha, p);
    check_mult(&mut rec, &ctx, AxiomId::AssocEpsilonMult, &a.epsilon, p);
    let al = a.alpha.matrix().columns();
    let ep = a.epsilon.matrix().columns();
    check_twisted_assoc(&mut rec, &ctx, AxiomId::AssocBiHom, (p, p), (p, p), &al, &ep);
    rec.finish()
}

fn multiplicativity(h: &DialgebraInstance, ctx: &Ctx, rec: &mut Recorder) {
    check_mult(rec, ctx, AxiomId::AlphaMultLeft, &h.alpha, &h.left);
    check_mult(rec, ctx, AxiomId::AlphaMultRight, &h.alpha, &h.right);
    check_mult(rec, ctx, AxiomId::EpsilonMultLeft, &h.epsilon, &h.left);
    check_mult(rec, ctx, AxiomId::EpsilonMultRight, &h.epsilon, &h.right);
}

/// Commuting structure maps, multiplicativity, and the four twisted
/// associativity identities.
pub fn check_bihom_superdialgebra(h: &DialgebraInstance, opts: CheckOptions) -> ViolationReport {
    let ctx = Ctx::new(h.field(), &h.left, &h.right);
    let (l, r) = (ctx.left, ctx.right);
    let mut rec = Recorder::new(opts);
    check_commute(&mut rec, AxiomId::MapsCommute, &h.alpha, &h.epsilon);
    multiplicativity(h, &ctx, &mut rec);
    let a = h.alpha.matrix().columns();
    let e = h.epsilon.matrix().columns();
    check_twisted_assoc(&mut rec, &ctx, AxiomId::LeftLeft, (l, l), (l, l), &a, &e);
    check_twisted_assoc(&mut rec, &ctx, AxiomId::RightLeft, (r, l), (r, l), &a, &e);
    check_twisted_assoc(&mut rec, &ctx, AxiomId::LeftRight, (l, r), (l, r), &a, &e);
    check_twisted_assoc(&mut rec, &ctx, AxiomId::RightRight, (r, r), (r, r), &a, &e);
    rec.finish()
}

/// Whether both structure maps are morphisms for both products.
pub fn check_multiplicative(h: &DialgebraInstance, opts: CheckOptions) -> (bool, ViolationReport) {
    let ctx = Ctx::new(h.field(), &h.left, &h.right);
    let mut rec = Recorder::new(opts);
    multiplicativity(h, &ctx, &mut rec);
    let report = rec.finish();
    (report.is_empty(), report)
}

/// Whether both structure maps are bijective.
pub fn check_regular(h: &DialgebraInstance) -> bool {
    h.alpha.is_invertible() && h.epsilon.is_invertible()
}

pub fn check(h: &DialgebraInstance, system: AxiomSystem, opts: CheckOptions) -> ViolationReport {
    match system {
        AxiomSystem::Superdialgebra => check_superdialgebra(h, opts),
        AxiomSystem::HomSuperdialgebra => check_hom_superdialgebra(h, opts),
        AxiomSystem::BiHomSuperdialgebra => check_bihom_superdialgebra(h, opts),
        AxiomSystem::Multiplicative => check_multiplicative(h, opts).1,
    }
}
