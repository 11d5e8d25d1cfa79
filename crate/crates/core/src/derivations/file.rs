//! Derivation basis files:
//!
//! ```json
//! { "field": "Q", "dim": 2, "kind": "derivation",
//!   "signature": {"m": 0, "n": 0, "parity": 1},
//!   "sign_convention": "standard",
//!   "basis": [[["0","0"],["1","0"]]] }
//! ```
//!
//! Generalized files add `"params": {"gamma": "1", ...}`; quasi files list
//! `"pairs": [{"d": ..., "d_prime": ...}]` instead of `basis`.

use serde::{Deserialize, Serialize};

use super::{DerivationSpace, GeneralizedParams, QuasiPair, QuasiSpace, SignConvention, Signature};
use crate::error::{Error, Result};
use crate::graded::{ParityMap, SuperSpace};
use crate::io::{field_fields, matrix_strings, parse_field, parse_matrix_strings};
use crate::linalg::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DerivationKind {
    Derivation,
    SuperalgebraDerivation,
    Generalized,
    Quasi,
}

type Strings = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawParams {
    pub gamma: String,
    pub delta: String,
    pub lambda: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawPair {
    pub d: Strings,
    pub d_prime: Strings,
}

/// On-disk form of a solved space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DerivationFile {
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    pub dim: usize,
    pub kind: DerivationKind,
    pub signature: Signature,
    pub sign_convention: SignConvention,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<RawParams>,
    #[serde(default)]
    pub basis: Vec<Strings>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<RawPair>>,
}

impl DerivationFile {
    pub fn from_space(dim: usize, field: Field, kind: DerivationKind, space: &DerivationSpace) -> DerivationFile {
        let (name, p) = field_fields(field);
        DerivationFile {
            field: name,
            p,
            dim,
            kind,
            signature: space.signature,
            sign_convention: space.convention,
            params: None,
            basis: space.basis.iter().map(|d| matrix_strings(&d.matrix)).collect(),
            pairs: None,
        }
    }

    pub fn with_params(mut self, params: &GeneralizedParams) -> DerivationFile {
        self.params = Some(RawParams {
            gamma: params.gamma.to_string(),
            delta: params.delta.to_string(),
            lambda: params.lambda.to_string(),
        });
        self
    }

    pub fn from_quasi(dim: usize, field: Field, space: &QuasiSpace) -> DerivationFile {
        let (name, p) = field_fields(field);
        DerivationFile {
            field: name,
            p,
            dim,
            kind: DerivationKind::Quasi,
            signature: space.signature,
            sign_convention: space.convention,
            params: None,
            basis: Vec::new(),
            pairs: Some(
                space
                    .pairs
                    .iter()
                    .map(|q| RawPair { d: matrix_strings(&q.d.matrix), d_prime: matrix_strings(&q.d_prime.matrix) })
                    .collect(),
            ),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<DerivationFile> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn field(&self) -> Result<Field> {
        parse_field(&self.field, self.p)
    }

    pub fn params(&self) -> Result<Option<GeneralizedParams>> {
        let field = self.field()?;
        let Some(raw) = &self.params else { return Ok(None) };
        let parse = |text: &str, name: &str| {
            field
                .parse(text)
                .map_err(|e| Error::schema(format!("params.{name}"), e.to_string()))
        };
        Ok(Some(GeneralizedParams::new(
            parse(&raw.gamma, "gamma")?,
            parse(&raw.delta, "delta")?,
            parse(&raw.lambda, "lambda")?,
        )))
    }

    fn map(&self, space: &SuperSpace, grid: &Strings, name: &str) -> Result<ParityMap> {
        let m = parse_matrix_strings(self.field()?, grid, name)?;
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(Error::schema(name, format!("expected a {0}x{0} matrix", self.dim)));
        }
        ParityMap::new(space, m, self.signature.parity)
    }

    /// The stored basis, checked against `space`'s parity pattern.
    pub fn to_space(&self, space: &SuperSpace) -> Result<DerivationSpace> {
        if space.dim() != self.dim {
            return Err(Error::Dimension { context: "derivation file".into(), expected: space.dim(), found: self.dim });
        }
        let basis = self
            .basis
            .iter()
            .enumerate()
            .map(|(k, g)| self.map(space, g, &format!("basis[{k}]")))
            .collect::<Result<Vec<_>>>()?;
        Ok(DerivationSpace { signature: self.signature, convention: self.sign_convention, basis })
    }

    pub fn to_quasi(&self, space: &SuperSpace) -> Result<QuasiSpace> {
        let pairs = self
            .pairs
            .as_deref()
            .ok_or_else(|| Error::schema("pairs", "missing for a quasi file"))?
            .iter()
            .enumerate()
            .map(|(k, p)| {
                Ok(QuasiPair {
                    d: self.map(space, &p.d, &format!("pairs[{k}].d"))?,
                    d_prime: self.map(space, &p.d_prime, &format!("pairs[{k}].d_prime"))?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(QuasiSpace { signature: self.signature, convention: self.sign_convention, pairs })
    }
}
