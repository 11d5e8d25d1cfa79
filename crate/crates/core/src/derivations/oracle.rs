use super::{DerivationSpace, SignConvention, Signature};
use crate::error::{Error, Result};
use crate::graded::{hom_power, DialgebraInstance, Parity, ParityMap};
use crate::linalg::{unit_vector, Field, Matrix, Scalar, Vector};

/// Largest search space the oracle will enumerate.
pub const ORACLE_LIMIT: u128 = 10_000_000;

/// Checks the derivation identities by evaluating both sides on every basis
/// pair. Written without the linear-system machinery so it can serve as an
/// independent oracle.
pub fn satisfies_derivation(h: &DialgebraInstance, d: &Matrix, sig: Signature, conv: SignConvention) -> Result<bool> {
    let field = h.field();
    let n = h.dim();
    let t = hom_power(&h.alpha, &h.epsilon, sig.m, sig.n)?;
    for m in [h.alpha.matrix(), h.epsilon.matrix()] {
        if d.mul(m) != m.mul(d) {
            return Ok(false);
        }
    }
    let units: Vec<Vector> = (0..n).map(|i| unit_vector(field, n, i)).collect();
    for prod in [&h.left, &h.right] {
        for (i, p) in units.iter().enumerate() {
            let sign = Parity::koszul(field, h.space.parity(i), sig.parity);
            for q in &units {
                let lhs = d.apply(&prod.mul(p, q));
                let dp_tq = prod.mul(&d.apply(p), &t.apply(q));
                let tp_dq = prod.mul(&t.apply(p), &d.apply(q));
                let rhs: Vector = match conv {
                    SignConvention::Standard => dp_tq.iter().zip(&tp_dq).map(|(a, b)| a + &(&sign * b)).collect(),
                    SignConvention::PaperDialgebra => tp_dq.iter().zip(&dp_tq).map(|(a, b)| a + &(&sign * b)).collect(),
                };
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Incremental row-echelon basis.
struct Echelon {
    rows: Vec<(usize, Vector)>,
}

impl Echelon {
    fn reduce(&self, mut v: Vector) -> Vector {
        for (pivot, row) in &self.rows {
            if !v[*pivot].is_zero() {
                let c = v[*pivot].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    *x = &*x - &(&c * y);
                }
            }
        }
        v
    }

    fn insert(&mut self, v: Vector) -> bool {
        let v = self.reduce(v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else { return false };
        let inv = v[pivot].inv().expect("nonzero pivot");
        let v: Vector = v.iter().map(|x| x * &inv).collect();
        for (_, row) in self.rows.iter_mut() {
            if !row[pivot].is_zero() {
                let c = row[pivot].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    *x = &*x - &(&c * y);
                }
            }
        }
        self.rows.push((pivot, v));
        true
    }
}

/// Enumerates every parity-pattern matrix over 𝔽_p, keeps those passing
/// [`satisfies_derivation`], and returns a basis of their span.
pub fn brute_force_derivations(h: &DialgebraInstance, sig: Signature, conv: SignConvention) -> Result<DerivationSpace> {
    let field = h.field();
    let Field::Prime(p) = field else { return Err(Error::NeedsPrimeField(field)) };
    let n = h.dim();
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| h.space.parity(i) == h.space.parity(j) + sig.parity)
        .collect();
    let size = (p as u128).checked_pow(slots.len() as u32).unwrap_or(u128::MAX);
    if size > ORACLE_LIMIT {
        return Err(Error::SearchSpace { size, limit: ORACLE_LIMIT });
    }
    let elements: Vec<Scalar> = (0..p as i64).map(|k| field.from_i64(k)).collect();
    let mut digits = vec![0usize; slots.len()];
    let mut echelon = Echelon { rows: Vec::new() };
    let mut found = Vec::new();
    loop {
        let mut m = Matrix::zeros(field, n, n);
        for (&(i, j), &k) in slots.iter().zip(&digits) {
            m.set(i, j, elements[k].clone());
        }
        if satisfies_derivation(h, &m, sig, conv)? {
            let flat: Vector = m.to_rows().into_iter().flatten().collect();
            if echelon.insert(flat) {
                found.push(ParityMap { matrix: m, parity: sig.parity });
            }
        }
        // Odometer increment.
        let mut pos = 0;
        loop {
            if pos == digits.len() {
                return Ok(DerivationSpace { signature: sig, convention: conv, basis: found });
            }
            digits[pos] += 1;
            if digits[pos] < elements.len() {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}
