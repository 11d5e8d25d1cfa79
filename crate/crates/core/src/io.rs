//! JSON file formats.
//!
//! Instance files look like
//!
//! ```json
//! { "field": "Q", "dim": 2, "parity": [0, 1],
//!   "left":  [[["1","0"],["0","1"]], [["0","1"],["0","0"]]],
//!   "right": [[["1","0"],["0","1"]], [["0","1"],["0","0"]]],
//!   "alpha": [["1","0"],["0","1"]], "epsilon": [["1","0"],["0","1"]] }
//! ```
//!
//! `left[i][j][k]` is the coefficient of `e_k` in `e_i ⊣ e_j`; map entries
//! are `alpha[row][col]` with column `j` the image of `e_j`. Scalars are
//! strings such as `"-3/2"` (bare JSON integers are accepted on input). For
//! 𝔽_p set `"field": "Fp"` and `"p": 5`. A superalgebra file has `prod`
//! instead of `left`/`right`; a differential file adds `d` and `d_parity`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded::{
    DialgebraInstance, DifferentialInstance, GradedMap, Parity, ParityMap, ProductTensor,
    SuperSpace, SuperalgebraInstance,
};
use crate::linalg::{Field, LinalgError, Matrix, Scalar};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Lit {
    Int(i64),
    Text(String),
    Float(f64),
}

type Grid = Vec<Vec<Lit>>;
type Cube = Vec<Vec<Vec<Lit>>>;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p: Option<u64>,
    dim: usize,
    parity: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    left: Option<Cube>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    right: Option<Cube>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    prod: Option<Cube>,
    alpha: Grid,
    epsilon: Grid,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    d: Option<Grid>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    d_parity: Option<u64>,
}

/// Any of the three instance kinds a file can hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceFile {
    Dialgebra(DialgebraInstance),
    Superalgebra(SuperalgebraInstance),
    Differential(DifferentialInstance),
}

impl InstanceFile {
    pub fn kind(&self) -> &'static str {
        match self {
            InstanceFile::Dialgebra(_) => "dialgebra",
            InstanceFile::Superalgebra(_) => "superalgebra",
            InstanceFile::Differential(_) => "differential",
        }
    }

    pub fn field(&self) -> Field {
        match self {
            InstanceFile::Dialgebra(h) => h.field(),
            InstanceFile::Superalgebra(a) => a.field(),
            InstanceFile::Differential(d) => d.base.field(),
        }
    }

    pub fn into_dialgebra(self) -> Result<DialgebraInstance> {
        match self {
            InstanceFile::Dialgebra(h) => Ok(h),
            other => Err(Error::schema("left", format!("expected a dialgebra instance, found a {} file", other.kind()))),
        }
    }

    fn project_graded(&mut self) {
        match self {
            InstanceFile::Dialgebra(h) => h.project_graded(),
            InstanceFile::Superalgebra(a) => a.project_graded(),
            InstanceFile::Differential(d) => {
                d.base.project_graded();
                let space = d.base.space.clone();
                let mut m = d.d.matrix.clone();
                for i in 0..space.dim() {
                    for j in 0..space.dim() {
                        if space.parity(i) != space.parity(j) + d.d.parity {
                            m.set(i, j, m.field().zero());
                        }
                    }
                }
                d.d.matrix = m;
            }
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct LoadOptions {
    /// Zero entries that break evenness instead of keeping them.
    pub project_graded: bool,
}

pub fn parse_field(name: &str, p: Option<u64>) -> Result<Field> {
    match (name, p) {
        ("Q", None) => Ok(Field::Rational),
        ("Q", Some(_)) => Err(Error::schema("p", "only allowed with \"field\": \"Fp\"")),
        ("Fp", Some(p)) => Field::prime(p).map_err(|e| Error::schema("p", e.to_string())),
        ("Fp", None) => Err(Error::schema("p", "missing prime for \"field\": \"Fp\"")),
        (other, _) => Err(Error::schema("field", format!("expected \"Q\" or \"Fp\", found {other:?}"))),
    }
}

pub fn field_fields(field: Field) -> (String, Option<u64>) {
    match field {
        Field::Rational => ("Q".into(), None),
        Field::Prime(p) => ("Fp".into(), Some(p)),
    }
}

pub(crate) fn scalar(field: Field, lit: &Lit, path: &str) -> Result<Scalar> {
    match lit {
        Lit::Int(v) => Ok(field.from_i64(*v)),
        Lit::Text(t) => field.parse(t).map_err(|e| match e {
            LinalgError::BadLiteral(_) => Error::schema(path, format!("non-rational literal {t:?}")),
            other => Error::schema(path, other.to_string()),
        }),
        Lit::Float(x) => Err(Error::schema(path, format!("non-rational literal {x}; write exact values as strings like \"3/2\""))),
    }
}

fn lit(s: &Scalar) -> Lit {
    Lit::Text(s.to_string())
}

pub fn parse_grid(field: Field, grid: &[Vec<Lit>], rows: usize, cols: Option<usize>, name: &str) -> Result<Matrix> {
    if grid.len() != rows {
        return Err(Error::schema(name, format!("expected {rows} rows (dim), found {}", grid.len())));
    }
    let cols = cols.unwrap_or_else(|| grid.first().map_or(0, Vec::len));
    let mut out = Vec::with_capacity(rows);
    for (i, row) in grid.iter().enumerate() {
        if row.len() != cols {
            return Err(Error::schema(format!("{name}[{i}]"), format!("expected {cols} entries, found {}", row.len())));
        }
        let r = row
            .iter()
            .enumerate()
            .map(|(j, l)| scalar(field, l, &format!("{name}[{i}][{j}]")))
            .collect::<Result<Vec<_>>>()?;
        out.push(r);
    }
    if rows == 0 {
        return Ok(Matrix::zeros(field, 0, cols));
    }
    Ok(Matrix::from_rows(field, out)?)
}

fn parse_cube(field: Field, cube: &Cube, dim: usize, name: &str) -> Result<ProductTensor> {
    if cube.len() != dim {
        return Err(Error::schema(name, format!("expected dim = {dim} slices of {dim}x{dim}, found {} slices", cube.len())));
    }
    let mut t = ProductTensor::zero(field, dim);
    for (i, slice) in cube.iter().enumerate() {
        if slice.len() != dim {
            return Err(Error::schema(format!("{name}[{i}]"), format!("expected {dim} rows (dim), found {}", slice.len())));
        }
        for (j, row) in slice.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::schema(format!("{name}[{i}][{j}]"), format!("expected {dim} entries (dim), found {}", row.len())));
            }
            for (k, l) in row.iter().enumerate() {
                t.set(i, j, k, scalar(field, l, &format!("{name}[{i}][{j}][{k}]"))?);
            }
        }
    }
    Ok(t)
}

fn grid(m: &Matrix) -> Grid {
    (0..m.rows()).map(|i| m.row(i).iter().map(lit).collect()).collect()
}

fn cube(t: &ProductTensor) -> Cube {
    let n = t.dim();
    (0..n)
        .map(|i| (0..n).map(|j| t.product(i, j).iter().map(lit).collect()).collect())
        .collect()
}

fn parity_bit(v: u64, name: &str) -> Result<Parity> {
    u8::try_from(v)
        .ok()
        .and_then(Parity::from_u8)
        .ok_or_else(|| Error::schema(name, format!("parity entries must be 0 or 1, found {v}")))
}

fn missing(name: &str) -> Error {
    Error::schema(name, "missing required field")
}

pub fn parse_instance(text: &str, opts: LoadOptions) -> Result<InstanceFile> {
    let raw: RawInstance = serde_json::from_str(text)?;
    let field = parse_field(&raw.field, raw.p)?;
    if raw.parity.len() != raw.dim {
        return Err(Error::schema("parity", format!("expected {} entries (dim), found {}", raw.dim, raw.parity.len())));
    }
    let parity = raw
        .parity
        .iter()
        .enumerate()
        .map(|(i, &v)| parity_bit(v, &format!("parity[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let space = SuperSpace::new(parity);
    let dim = raw.dim;
    let alpha = GradedMap::new(parse_grid(field, &raw.alpha, dim, Some(dim), "alpha")?)?;
    let epsilon = GradedMap::new(parse_grid(field, &raw.epsilon, dim, Some(dim), "epsilon")?)?;

    let mut file = match (&raw.left, &raw.right, &raw.prod) {
        (Some(l), Some(r), None) => {
            if raw.d.is_some() || raw.d_parity.is_some() {
                return Err(Error::schema("d", "differentials are only allowed with `prod`"));
            }
            let left = parse_cube(field, l, dim, "left")?;
            let right = parse_cube(field, r, dim, "right")?;
            InstanceFile::Dialgebra(DialgebraInstance::new(space, left, right, alpha, epsilon)?)
        }
        (None, None, Some(p)) => {
            let prod = parse_cube(field, p, dim, "prod")?;
            let base = SuperalgebraInstance::new(space, prod, alpha, epsilon)?;
            match (&raw.d, raw.d_parity) {
                (None, None) => InstanceFile::Superalgebra(base),
                (Some(d), Some(dp)) => {
                    let parity = parity_bit(dp, "d_parity")?;
                    let matrix = parse_grid(field, d, dim, Some(dim), "d")?;
                    // Parity pattern is checked after optional projection.
                    InstanceFile::Differential(DifferentialInstance { base, d: ParityMap { matrix, parity } })
                }
                (None, Some(_)) => return Err(missing("d")),
                (Some(_), None) => return Err(missing("d_parity")),
            }
        }
        (None, None, None) => return Err(missing("left")),
        (Some(_), None, None) => return Err(missing("right")),
        (None, Some(_), None) => return Err(missing("left")),
        _ => return Err(Error::schema("prod", "use either `prod` or `left`/`right`, not both")),
    };
    if opts.project_graded {
        file.project_graded();
    }
    if let InstanceFile::Differential(d) = &file {
        ParityMap::new(&d.base.space, d.d.matrix.clone(), d.d.parity)
            .map_err(|e| Error::schema("d", e.to_string()))?;
    }
    Ok(file)
}

fn raw_common(field: Field, space: &SuperSpace, alpha: &GradedMap, epsilon: &GradedMap) -> RawInstance {
    let (name, p) = field_fields(field);
    RawInstance {
        field: name,
        p,
        dim: space.dim(),
        parity: space.parities().iter().map(|p| p.as_u8() as u64).collect(),
        left: None,
        right: None,
        prod: None,
        alpha: grid(alpha.matrix()),
        epsilon: grid(epsilon.matrix()),
        d: None,
        d_parity: None,
    }
}

pub fn instance_to_json(file: &InstanceFile) -> String {
    let raw = match file {
        InstanceFile::Dialgebra(h) => RawInstance {
            left: Some(cube(&h.left)),
            right: Some(cube(&h.right)),
            ..raw_common(h.field(), &h.space, &h.alpha, &h.epsilon)
        },
        InstanceFile::Superalgebra(a) => RawInstance {
            prod: Some(cube(&a.prod)),
            ..raw_common(a.field(), &a.space, &a.alpha, &a.epsilon)
        },
        InstanceFile::Differential(d) => RawInstance {
            prod: Some(cube(&d.base.prod)),
            d: Some(grid(&d.d.matrix)),
            d_parity: Some(d.d.parity.as_u8() as u64),
            ..raw_common(d.base.field(), &d.base.space, &d.base.alpha, &d.base.epsilon)
        },
    };
    let mut s = serde_json::to_string_pretty(&raw).expect("serializable");
    s.push('\n');
    s
}

pub fn dialgebra_to_json(h: &DialgebraInstance) -> String {
    instance_to_json(&InstanceFile::Dialgebra(h.clone()))
}

pub fn load(path: impl AsRef<Path>, opts: LoadOptions) -> Result<InstanceFile> {
    parse_instance(&fs::read_to_string(path)?, opts)
}

pub fn load_dialgebra(path: impl AsRef<Path>) -> Result<DialgebraInstance> {
    load(path, LoadOptions::default())?.into_dialgebra()
}

/// Writes through a temporary sibling file and renames it into place.
pub fn write_atomic(path: impl AsRef<Path>, contents: &str) -> Result<()> {
    let path = path.as_ref();
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

pub fn save(file: &InstanceFile, path: impl AsRef<Path>) -> Result<()> {
    write_atomic(path, &instance_to_json(file))
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMatrix {
    field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p: Option<u64>,
    matrix: Grid,
}

/// Parses `{"field": "Q", "matrix": [["1","0"],["0","1"]]}`.
pub fn parse_matrix_file(text: &str) -> Result<Matrix> {
    let raw: RawMatrix = serde_json::from_str(text)?;
    let field = parse_field(&raw.field, raw.p)?;
    parse_grid(field, &raw.matrix, raw.matrix.len(), None, "matrix")
}

pub fn matrix_file_json(m: &Matrix) -> String {
    let (field, p) = field_fields(m.field());
    let mut s = serde_json::to_string_pretty(&RawMatrix { field, p, matrix: grid(m) }).expect("serializable");
    s.push('\n');
    s
}

/// Matrix entries as strings, for embedding in reports.
pub fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(ToString::to_string).collect()).collect()
}

pub fn parse_matrix_strings(field: Field, rows: &[Vec<String>], name: &str) -> Result<Matrix> {
    let grid: Grid = rows.iter().map(|r| r.iter().map(|s| Lit::Text(s.clone())).collect()).collect();
    parse_grid(field, &grid, grid.len(), None, name)
}

/// Parses `"1, -2, 3/4"` into a vector of length `dim`.
pub fn parse_vector(field: Field, text: &str, dim: usize) -> Result<Vec<Scalar>> {
    let parts: Vec<&str> = if text.trim().is_empty() { Vec::new() } else { text.split(',').collect() };
    if parts.len() != dim {
        return Err(Error::schema("vector", format!("expected {dim} comma-separated entries, found {}", parts.len())));
    }
    parts
        .iter()
        .enumerate()
        .map(|(i, p)| scalar(field, &Lit::Text(p.trim().to_string()), &format!("vector[{i}]")))
        .collect()
}

/// Parses vectors separated by `;`, e.g. `"1,0,0; 0,1,0"`. An empty string is the empty list.
pub fn parse_vectors(field: Field, text: &str, dim: usize) -> Result<Vec<Vec<Scalar>>> {
    text.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_vector(field, s, dim))
        .collect()
}
