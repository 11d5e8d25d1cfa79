use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::linalg::{Field, Scalar};

/// A degree in ℤ₂.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub const ALL: [Parity; 2] = [Parity::Even, Parity::Odd];

    pub fn from_u8(v: u8) -> Option<Parity> {
        match v {
            0 => Some(Parity::Even),
            1 => Some(Parity::Odd),
            _ => None,
        }
    }

    pub fn as_u8(self) -> u8 {
        self as u8
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// The Koszul sign `(-1)^{|a||b|}` in `field`.
    pub fn koszul(field: Field, a: Parity, b: Parity) -> Scalar {
        Scalar::sign(field, a.is_odd() && b.is_odd())
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl From<Parity> for u8 {
    fn from(p: Parity) -> u8 {
        p.as_u8()
    }
}

impl TryFrom<u8> for Parity {
    type Error = String;
    fn try_from(v: u8) -> Result<Parity, String> {
        Parity::from_u8(v).ok_or_else(|| format!("parity must be 0 or 1, got {v}"))
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

/// Parity class of a vector relative to a graded basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VectorParity {
    Zero,
    Pure(Parity),
    Mixed,
}

/// `H = H₀ ⊕ H₁` with a homogeneous basis `e_0 … e_{dim-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperSpace {
    parity: Vec<Parity>,
}

impl SuperSpace {
    pub fn new(parity: Vec<Parity>) -> SuperSpace {
        SuperSpace { parity }
    }

    pub fn even(dim: usize) -> SuperSpace {
        SuperSpace::new(vec![Parity::Even; dim])
    }

    pub fn from_bits(bits: &[u8]) -> SuperSpace {
        SuperSpace::new(
            bits.iter()
                .map(|&b| Parity::from_u8(b).expect("parity bit must be 0 or 1"))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parity[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parity
    }

    pub fn indices_of(&self, p: Parity) -> impl Iterator<Item = usize> + '_ {
        (0..self.dim()).filter(move |&i| self.parity[i] == p)
    }

    pub fn vector_parity(&self, v: &[Scalar]) -> VectorParity {
        let mut seen = None;
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            match seen {
                None => seen = Some(self.parity[i]),
                Some(p) if p != self.parity[i] => return VectorParity::Mixed,
                _ => {}
            }
        }
        seen.map_or(VectorParity::Zero, VectorParity::Pure)
    }

    /// Component of `v` in `H_p`.
    pub fn project(&self, v: &[Scalar], p: Parity) -> Vec<Scalar> {
        v.iter()
            .enumerate()
            .map(|(i, x)| {
                if self.parity[i] == p {
                    x.clone()
                } else {
                    x.field().zero()
                }
            })
            .collect()
    }
}
