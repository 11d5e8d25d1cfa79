//! Seeded generator of BiHom-superdialgebras.
//!
//! Every entry starts from an associative superalgebra `D` viewed as a
//! superdialgebra with `⊣ = ⊢` and a multiplicative endomorphism `f` of `D`.
//! The algebra is moved to a random even basis and twisted by `(f^a, f^b)`,
//! so `α = f^a` and `ε = f^b` commute and stay multiplicative. Any further
//! pair `(f^c, f^d)` is then a valid twist pair.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::axioms::{check_bihom_superdialgebra, CheckOptions};
use crate::constructions::{superdialgebra_to_bihom, twist_products};
use crate::error::{Error, Result};
use crate::graded::{DialgebraInstance, GradedMap, Parity, ProductTensor, SuperSpace};
use crate::linalg::{Field, Matrix, Scalar, Vector};

/// Base families; the names end up in file names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `e·e = e`.
    UnitLine,
    ZeroProduct,
    /// `Λ(ξ)`, parity (0, 1).
    Grassmann1,
    /// `Λ(ξ₁, ξ₂)`, parity (0, 1, 1, 0).
    Grassmann2,
    /// `k[x]/(xⁿ)`.
    Truncated,
    /// `kⁿ` with coordinatewise product.
    Diagonal,
    /// Upper-triangular 2×2 matrices with `E₁₂` odd.
    Triangular,
    /// `M(1|1)`.
    Matrix11,
    /// Semigroup algebra of `s_i s_j = s_i`.
    LeftZero,
    /// Direct product of two smaller families.
    Product,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::UnitLine,
        Family::ZeroProduct,
        Family::Grassmann1,
        Family::Grassmann2,
        Family::Truncated,
        Family::Diagonal,
        Family::Triangular,
        Family::Matrix11,
        Family::LeftZero,
        Family::Product,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::UnitLine => "unit-line",
            Family::ZeroProduct => "zero-product",
            Family::Grassmann1 => "grassmann1",
            Family::Grassmann2 => "grassmann2",
            Family::Truncated => "truncated",
            Family::Diagonal => "diagonal",
            Family::Triangular => "triangular",
            Family::Matrix11 => "matrix11",
            Family::LeftZero => "left-zero",
            Family::Product => "product",
        }
    }

    fn min_dim(self) -> usize {
        match self {
            Family::UnitLine | Family::ZeroProduct => 1,
            Family::Grassmann1 | Family::Truncated | Family::Diagonal | Family::LeftZero | Family::Product => 2,
            Family::Triangular => 3,
            Family::Grassmann2 | Family::Matrix11 => 4,
        }
    }

    fn fixed_dim(self) -> Option<usize> {
        match self {
            Family::UnitLine => Some(1),
            Family::Grassmann1 => Some(2),
            Family::Triangular => Some(3),
            Family::Grassmann2 | Family::Matrix11 => Some(4),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CorpusConfig {
    pub seed: u64,
    pub field: Field,
    /// Largest dimension generated.
    pub max_dim: usize,
    pub count: usize,
    /// Largest power used for the structure maps.
    pub max_power: u32,
}

impl CorpusConfig {
    pub fn new(seed: u64, field: Field, max_dim: usize, count: usize) -> CorpusConfig {
        CorpusConfig { seed, field, max_dim, count, max_power: 2 }
    }
}

/// One generated instance with the data it was built from.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub family: Family,
    /// The superdialgebra `D` (identity structure maps), in the random basis.
    pub base: DialgebraInstance,
    /// Multiplicative endomorphism of `D`, in the same basis.
    pub endo: GradedMap,
    /// `instance` is `D` twisted by `(f^a, f^b)`.
    pub powers: (u32, u32),
    pub instance: DialgebraInstance,
}

impl CorpusEntry {
    /// `(D, ⋆∘(f⊗f), ⋆∘(f⊗f), f, f)`, a Hom-superdialgebra with `ε = α`.
    pub fn hom_instance(&self) -> DialgebraInstance {
        twist_products(&self.base, &self.endo, &self.endo)
    }

    /// A twist pair `(f^c, f^d)` valid for `instance`.
    pub fn twist_pair(&self, c: u32, d: u32) -> (GradedMap, GradedMap) {
        (self.endo.pow(c), self.endo.pow(d))
    }

    pub fn is_regular(&self) -> bool {
        self.instance.alpha.is_invertible() && self.instance.epsilon.is_invertible()
    }
}

/// Random small scalars; `nonzero` excludes zero in the field.
fn scalar(rng: &mut ChaCha8Rng, field: Field, nonzero: bool) -> Scalar {
    loop {
        let s = field.from_i64(rng.gen_range(-3..=3));
        if !nonzero || !s.is_zero() {
            return s;
        }
    }
}

fn map_from_columns(field: Field, cols: &[Vector]) -> GradedMap {
    GradedMap::new(Matrix::from_columns(field, cols.len(), cols).expect("square")).expect("square")
}

fn unit(field: Field, dim: usize, i: usize) -> Vector {
    crate::linalg::unit_vector(field, dim, i)
}

fn with_products(field: Field, bits: &[u8], prod: ProductTensor) -> DialgebraInstance {
    let mut h = DialgebraInstance::zero(field, SuperSpace::from_bits(bits));
    h.left = prod.clone();
    h.right = prod;
    h
}

fn unit_line(rng: &mut ChaCha8Rng, field: Field) -> (DialgebraInstance, GradedMap) {
    let h = with_products(field, &[0], ProductTensor::from_fn(field, 1, |_, _| unit(field, 1, 0)));
    let f = if rng.gen_bool(0.8) { 1 } else { 0 };
    (h, map_from_columns(field, &[vec![field.from_i64(f)]]))
}

fn zero_product(rng: &mut ChaCha8Rng, field: Field, dim: usize) -> (DialgebraInstance, GradedMap) {
    let bits: Vec<u8> = (0..dim).map(|_| rng.gen_range(0..2)).collect();
    let space = SuperSpace::from_bits(&bits);
    let cols: Vec<Vector> = (0..dim)
        .map(|j| {
            (0..dim)
                .map(|i| if space.parity(i) == space.parity(j) { scalar(rng, field, false) } else { field.zero() })
                .collect()
        })
        .collect();
    (DialgebraInstance::zero(field, space), map_from_columns(field, &cols))
}

fn grassmann1(rng: &mut ChaCha8Rng, field: Field) -> (DialgebraInstance, GradedMap) {
    let prod = ProductTensor::from_fn(field, 2, |i, j| match (i, j) {
        (0, 0) => unit(field, 2, 0),
        (0, 1) | (1, 0) => unit(field, 2, 1),
        _ => vec![field.zero(); 2],
    });
    let nonzero = rng.gen_bool(0.7);
    let c = scalar(rng, field, nonzero);
    let f = map_from_columns(field, &[unit(field, 2, 0), vec![field.zero(), c]]);
    (with_products(field, &[0, 1], prod), f)
}

/// Basis `1, ξ₁, ξ₂, ξ₁ξ₂` indexed by the bit mask of the monomial.
fn grassmann2(rng: &mut ChaCha8Rng, field: Field) -> (DialgebraInstance, GradedMap) {
    let prod = ProductTensor::from_fn(field, 4, |a, b| {
        let mut v = vec![field.zero(); 4];
        if a & b == 0 {
            // ξ₂ before ξ₁ costs one transposition.
            let sign = if a & 2 != 0 && b & 1 != 0 { -1 } else { 1 };
            v[a | b] = field.from_i64(sign);
        }
        v
    });
    let m: Vec<Scalar> = (0..4).map(|_| scalar(rng, field, false)).collect();
    let det = &(&m[0] * &m[3]) - &(&m[1] * &m[2]);
    let z = field.zero();
    let f = map_from_columns(
        field,
        &[
            unit(field, 4, 0),
            vec![z.clone(), m[0].clone(), m[2].clone(), z.clone()],
            vec![z.clone(), m[1].clone(), m[3].clone(), z.clone()],
            vec![z.clone(), z.clone(), z, det],
        ],
    );
    (with_products(field, &[0, 1, 1, 0], prod), f)
}

fn truncated(rng: &mut ChaCha8Rng, field: Field, n: usize) -> (DialgebraInstance, GradedMap) {
    let prod = ProductTensor::from_fn(field, n, |i, j| {
        if i + j < n { unit(field, n, i + j) } else { vec![field.zero(); n] }
    });
    let h = with_products(field, &vec![0; n], prod);
    // x ↦ q(x) with no constant term; x^k ↦ q^k.
    let mut q = vec![field.zero(); n];
    for c in q.iter_mut().skip(1) {
        *c = scalar(rng, field, false);
    }
    let mut cols = vec![unit(field, n, 0)];
    for _ in 1..n {
        let prev = cols.last().expect("nonempty").clone();
        cols.push(h.left.mul(&prev, &q));
    }
    (h, map_from_columns(field, &cols))
}

fn diagonal(rng: &mut ChaCha8Rng, field: Field, n: usize) -> (DialgebraInstance, GradedMap) {
    let prod = ProductTensor::from_fn(field, n, |i, j| if i == j { unit(field, n, i) } else { vec![field.zero(); n] });
    // Pullback along φ restricted to a subset S: f(e_i) = Σ_{j∈S, φ(j)=i} e_j.
    let phi: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n)).collect();
    let keep: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.85)).collect();
    let cols: Vec<Vector> = (0..n)
        .map(|i| (0..n).map(|j| field.from_i64((keep[j] && phi[j] == i) as i64)).collect())
        .collect();
    (with_products(field, &vec![0; n], prod), map_from_columns(field, &cols))
}

fn matrix_units(field: Field, units: &[(usize, usize)], bits: &[u8]) -> DialgebraInstance {
    let n = units.len();
    let prod = ProductTensor::from_fn(field, n, |i, j| {
        let (a, b) = units[i];
        let (c, d) = units[j];
        let mut v = vec![field.zero(); n];
        if b == c {
            v[units.iter().position(|&u| u == (a, d)).expect("closed")] = field.one();
        }
        v
    });
    with_products(field, bits, prod)
}

fn diag_map(field: Field, entries: Vec<Scalar>) -> GradedMap {
    let n = entries.len();
    let cols: Vec<Vector> = entries
        .into_iter()
        .enumerate()
        .map(|(i, s)| {
            let mut v = vec![field.zero(); n];
            v[i] = s;
            v
        })
        .collect();
    map_from_columns(field, &cols)
}

fn triangular(rng: &mut ChaCha8Rng, field: Field) -> (DialgebraInstance, GradedMap) {
    let h = matrix_units(field, &[(0, 0), (0, 1), (1, 1)], &[0, 1, 0]);
    let nonzero = rng.gen_bool(0.8);
    let c = scalar(rng, field, nonzero);
    (h, diag_map(field, vec![field.one(), c, field.one()]))
}

fn matrix11(rng: &mut ChaCha8Rng, field: Field) -> (DialgebraInstance, GradedMap) {
    let h = matrix_units(field, &[(0, 0), (0, 1), (1, 0), (1, 1)], &[0, 1, 1, 0]);
    let c = scalar(rng, field, true);
    let c_inv = c.inv().expect("nonzero");
    (h, diag_map(field, vec![field.one(), c, c_inv, field.one()]))
}

fn left_zero(rng: &mut ChaCha8Rng, field: Field, n: usize) -> (DialgebraInstance, GradedMap) {
    let prod = ProductTensor::from_fn(field, n, |i, _| unit(field, n, i));
    // Columns summing to one keep f(s_i)f(s_j) = f(s_i).
    let cols: Vec<Vector> = (0..n)
        .map(|_| {
            let mut col: Vector = (0..n).map(|_| scalar(rng, field, false)).collect();
            let rest = col[1..].iter().fold(field.zero(), |acc, x| &acc + x);
            col[0] = &field.one() - &rest;
            col
        })
        .collect();
    (with_products(field, &vec![0; n], prod), map_from_columns(field, &cols))
}

fn direct_product(a: &(DialgebraInstance, GradedMap), b: &(DialgebraInstance, GradedMap)) -> (DialgebraInstance, GradedMap) {
    let field = a.0.field();
    let (n1, n2) = (a.0.dim(), b.0.dim());
    let n = n1 + n2;
    let embed = |v: &[Scalar], offset: usize| {
        let mut out = vec![field.zero(); n];
        for (k, x) in v.iter().enumerate() {
            out[offset + k] = x.clone();
        }
        out
    };
    let prod = ProductTensor::from_fn(field, n, |i, j| match (i < n1, j < n1) {
        (true, true) => embed(a.0.left.product(i, j), 0),
        (false, false) => embed(b.0.left.product(i - n1, j - n1), n1),
        _ => vec![field.zero(); n],
    });
    let mut bits: Vec<u8> = a.0.space.parities().iter().map(|p| p.as_u8()).collect();
    bits.extend(b.0.space.parities().iter().map(|p| p.as_u8()));
    let cols: Vec<Vector> = (0..n)
        .map(|j| if j < n1 { embed(&a.1.matrix().column(j), 0) } else { embed(&b.1.matrix().column(j - n1), n1) })
        .collect();
    (with_products(field, &bits, prod), map_from_columns(field, &cols))
}

fn build(rng: &mut ChaCha8Rng, field: Field, family: Family, dim: usize) -> (DialgebraInstance, GradedMap) {
    match family {
        Family::UnitLine => unit_line(rng, field),
        Family::ZeroProduct => zero_product(rng, field, dim),
        Family::Grassmann1 => grassmann1(rng, field),
        Family::Grassmann2 => grassmann2(rng, field),
        Family::Truncated => truncated(rng, field, dim),
        Family::Diagonal => diagonal(rng, field, dim),
        Family::Triangular => triangular(rng, field),
        Family::Matrix11 => matrix11(rng, field),
        Family::LeftZero => left_zero(rng, field, dim),
        Family::Product => {
            let d1 = rng.gen_range(1..dim);
            let parts: Vec<(DialgebraInstance, GradedMap)> = [d1, dim - d1]
                .iter()
                .map(|&d| {
                    let choices: Vec<Family> = Family::ALL
                        .iter()
                        .copied()
                        .filter(|f| *f != Family::Product && *f != Family::ZeroProduct)
                        .filter(|f| f.fixed_dim().map_or(f.min_dim() <= d, |fd| fd == d))
                        .collect();
                    let fam = *choices.choose(rng).expect("unit line fits dimension 1");
                    build(rng, field, fam, d)
                })
                .collect();
            direct_product(&parts[0], &parts[1])
        }
    }
}

/// A random invertible matrix preserving the parity blocks.
fn even_change_of_basis(rng: &mut ChaCha8Rng, field: Field, space: &SuperSpace) -> Matrix {
    let n = space.dim();
    loop {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            for j in 0..n {
                if space.parity(i) == space.parity(j) {
                    let s = if i == j { scalar(rng, field, true) } else if rng.gen_bool(0.5) { scalar(rng, field, false) } else { field.zero() };
                    m.set(i, j, s);
                }
            }
        }
        if m.is_invertible() {
            return m;
        }
    }
}

/// Generates `config.count` entries; every instance passes the BiHom checker.
pub fn generate(config: &CorpusConfig) -> Result<Vec<CorpusEntry>> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let field = config.field;
    let families: Vec<Family> = Family::ALL.iter().copied().filter(|f| f.min_dim() <= config.max_dim).collect();
    let mut out = Vec::with_capacity(config.count);
    for k in 0..config.count {
        let family = *families.choose(&mut rng).expect("unit line always fits");
        let dim = family.fixed_dim().unwrap_or_else(|| rng.gen_range(family.min_dim()..=config.max_dim.max(family.min_dim())));
        let (d, f) = build(&mut rng, field, family, dim);
        let p = even_change_of_basis(&mut rng, field, &d.space);
        let p_inv = p.inverse().expect("invertible");
        let base = d.change_basis(&p)?;
        let endo = GradedMap::new(p_inv.mul(f.matrix()).mul(&p))?;
        let powers = (rng.gen_range(0..=config.max_power), rng.gen_range(0..=config.max_power));
        let instance = superdialgebra_to_bihom(&base, &endo.pow(powers.0), &endo.pow(powers.1))?;
        let report = check_bihom_superdialgebra(&instance, CheckOptions { max_per_axiom: 1 });
        if let Some(v) = report.violations.first() {
            return Err(Error::precondition("corpus-gate", format!("{} #{k}: {v}", family.name())));
        }
        out.push(CorpusEntry {
            name: format!("{k:03}-{}-d{}", family.name(), base.dim()),
            family,
            base,
            endo,
            powers,
            instance,
        });
    }
    Ok(out)
}

/// Seeded random homogeneous vector, used for ideal seeds and `ad` elements.
pub fn random_homogeneous(rng: &mut ChaCha8Rng, field: Field, space: &SuperSpace, parity: Parity) -> Vector {
    (0..space.dim())
        .map(|i| if space.parity(i) == parity { scalar(rng, field, false) } else { field.zero() })
        .collect()
}

/// The generator used everywhere randomness is needed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
