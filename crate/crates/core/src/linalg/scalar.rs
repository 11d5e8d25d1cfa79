//! Exact scalars over ℚ and 𝔽_p.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::LinalgError;

/// Largest modulus accepted for 𝔽_p. Products of two residues fit in `u128`
/// for any `u64` modulus, but primality is checked by trial division.
pub const MAX_PRIME: u64 = 1 << 32;

/// The exact field a scalar, matrix or instance lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// Builds 𝔽_p after checking that `p` is a prime below [`MAX_PRIME`].
    pub fn prime(p: u64) -> Result<Field, LinalgError> {
        if p >= MAX_PRIME || !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Modular(Fp::new(v.rem_euclid(p as i64) as u64, p)),
        }
    }

    pub fn from_ratio(self, num: i64, den: i64) -> Result<Scalar, LinalgError> {
        let d = self.from_i64(den);
        if d.is_zero() {
            return Err(LinalgError::DivisionByZero);
        }
        Ok(&self.from_i64(num) / &d)
    }

    /// Parses `"a"` or `"a/b"` with decimal integers `a`, `b` (either sign).
    ///
    /// In 𝔽_p mode a fraction is read as `a · b⁻¹`, which requires `b ≢ 0 (mod p)`.
    pub fn parse(self, text: &str) -> Result<Scalar, LinalgError> {
        let bad = || LinalgError::BadLiteral(text.to_string());
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (text, None),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = match den {
            Some(d) => d.parse().map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(LinalgError::DivisionByZero);
        }
        match self {
            Field::Rational => Ok(Scalar::Rational(BigRational::new(num, den))),
            Field::Prime(p) => {
                let n = reduce_bigint(&num, p);
                let d = reduce_bigint(&den, p);
                if d == 0 {
                    return Err(LinalgError::DivisionByZero);
                }
                let d = Fp::new(d, p);
                Ok(Scalar::Modular(Fp::new(n, p).mul(d.inv().expect("nonzero residue"))))
            }
        }
    }

    pub fn contains(self, s: &Scalar) -> bool {
        s.field() == self
    }

    /// Number of elements, `None` for ℚ.
    pub fn order(self) -> Option<u64> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some(p),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

fn reduce_bigint(v: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let mut r = v % &m;
    if r.is_negative() {
        r += &m;
    }
    r.to_u64().expect("residue fits in u64")
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A residue modulo a prime, always reduced into `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: u64, modulus: u64) -> Fp {
        Fp {
            value: value % modulus,
            modulus,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    fn add(self, o: Fp) -> Fp {
        Fp::new(((self.value as u128 + o.value as u128) % self.modulus as u128) as u64, self.modulus)
    }

    fn neg(self) -> Fp {
        Fp::new(self.modulus - self.value, self.modulus)
    }

    fn mul(self, o: Fp) -> Fp {
        Fp::new(((self.value as u128 * o.value as u128) % self.modulus as u128) as u64, self.modulus)
    }

    fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp::new(1, self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    fn inv(self) -> Option<Fp> {
        if self.value == 0 {
            None
        } else {
            Some(self.pow(self.modulus - 2))
        }
    }
}

/// An exact field element.
///
/// Binary operators panic when the operands come from different fields;
/// matrices and instances validate membership at construction, so mixing
/// can only happen through hand-built scalars.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular(Fp),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Modular(x) => Field::Prime(x.modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular(x) => x.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular(x) => x.value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(q) if q.is_zero() => None,
            Scalar::Rational(q) => Some(Scalar::Rational(q.recip())),
            Scalar::Modular(x) => x.inv().map(Scalar::Modular),
        }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        (0..e).fold(self.field().one(), |acc, _| &acc * self)
    }

    /// `(-1)^k` as a field element.
    pub fn sign(field: Field, odd: bool) -> Scalar {
        if odd {
            field.from_i64(-1)
        } else {
            field.one()
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Modular(x) => write!(f, "{}", x.value),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

macro_rules! binop {
    ($tr:ident, $method:ident, $q:expr, $m:expr) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational($q(a, b)),
                    (Scalar::Modular(a), Scalar::Modular(b)) if a.modulus == b.modulus => {
                        Scalar::Modular($m(*a, *b))
                    }
                    _ => mismatch(self, rhs),
                }
            }
        }

        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a: &BigRational, b: &BigRational| a + b, Fp::add);
binop!(Sub, sub, |a: &BigRational, b: &BigRational| a - b, |a: Fp, b: Fp| a.add(b.neg()));
binop!(Mul, mul, |a: &BigRational, b: &BigRational| a * b, Fp::mul);
binop!(
    Div,
    div,
    |a: &BigRational, b: &BigRational| {
        assert!(!b.is_zero(), "division by zero");
        a / b
    },
    |a: Fp, b: Fp| a.mul(b.inv().expect("division by zero"))
);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Modular(x) => Scalar::Modular(x.neg()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_normalized() {
        let q = Field::Rational;
        let x = q.parse("6/-4").unwrap();
        assert_eq!(x.to_string(), "-3/2");
        let y = &x + &q.parse("3/2").unwrap();
        assert!(y.is_zero());
        assert_eq!(q.parse(" 10 / 5 ").unwrap(), q.from_i64(2));
    }

    #[test]
    fn modular_values_are_reduced() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.from_i64(-1).to_string(), "4");
        assert_eq!(f.from_i64(17).to_string(), "2");
        // 3/2 = 3 * 3 = 9 = 4 mod 5
        assert_eq!(f.parse("3/2").unwrap(), f.from_i64(4));
        let two = f.from_i64(2);
        assert!((&two * &two.inv().unwrap()).is_one());
        assert!(f.from_i64(5).inv().is_none());
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(MAX_PRIME + 15).is_err());
        assert!(Field::Rational.parse("1.5").is_err());
        assert!(Field::Rational.parse("1/0").is_err());
        assert!(Field::prime(7).unwrap().parse("1/7").is_err());
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixed_arithmetic_panics() {
        let _ = Field::Rational.one() + Field::prime(3).unwrap().one();
    }
}
