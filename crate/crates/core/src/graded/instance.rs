use serde::Serialize;

use crate::error::{Error, Result};
use crate::graded::map::parity_violations;
use crate::graded::{GradedMap, Parity, ParityMap, ProductTensor, SuperSpace};
use crate::linalg::{Field, Matrix};

/// `(H, ⊣, ⊢, α, ε)`: a candidate BiHom-superdialgebra.
///
/// Nothing about the axioms is implied by holding one of these; use the
/// checkers in [`crate::axioms`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DialgebraInstance {
    pub space: SuperSpace,
    pub left: ProductTensor,
    pub right: ProductTensor,
    pub alpha: GradedMap,
    pub epsilon: GradedMap,
}

/// `(H, ·, α, ε)`: a candidate BiHom-associative superalgebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperalgebraInstance {
    pub space: SuperSpace,
    pub prod: ProductTensor,
    pub alpha: GradedMap,
    pub epsilon: GradedMap,
}

/// A superalgebra together with a homogeneous map `d` meant to be a differential.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DifferentialInstance {
    pub base: SuperalgebraInstance,
    pub d: ParityMap,
}

fn check_shapes(space: &SuperSpace, field: Field, tensors: &[(&str, &ProductTensor)], maps: &[(&str, &Matrix)]) -> Result<()> {
    let dim = space.dim();
    for (name, t) in tensors {
        if t.dim() != dim {
            return Err(Error::Dimension {
                context: format!("product `{name}`"),
                expected: dim,
                found: t.dim(),
            });
        }
        if t.field() != field {
            return Err(Error::schema(*name, format!("tensor over {} but instance over {field}", t.field())));
        }
    }
    for (name, m) in maps {
        if m.rows() != dim || m.cols() != dim {
            return Err(Error::Dimension {
                context: format!("map `{name}`"),
                expected: dim,
                found: if m.rows() != dim { m.rows() } else { m.cols() },
            });
        }
        if m.field() != field {
            return Err(Error::schema(*name, format!("map over {} but instance over {field}", m.field())));
        }
    }
    Ok(())
}

impl DialgebraInstance {
    pub fn new(
        space: SuperSpace,
        left: ProductTensor,
        right: ProductTensor,
        alpha: GradedMap,
        epsilon: GradedMap,
    ) -> Result<DialgebraInstance> {
        check_shapes(
            &space,
            left.field(),
            &[("left", &left), ("right", &right)],
            &[("alpha", alpha.matrix()), ("epsilon", epsilon.matrix())],
        )?;
        Ok(DialgebraInstance { space, left, right, alpha, epsilon })
    }

    /// Both products zero, both structure maps the identity.
    pub fn zero(field: Field, space: SuperSpace) -> DialgebraInstance {
        let dim = space.dim();
        DialgebraInstance {
            left: ProductTensor::zero(field, dim),
            right: ProductTensor::zero(field, dim),
            alpha: GradedMap::identity(field, dim),
            epsilon: GradedMap::identity(field, dim),
            space,
        }
    }

    pub fn field(&self) -> Field {
        self.left.field()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn with_maps(&self, alpha: GradedMap, epsilon: GradedMap) -> DialgebraInstance {
        DialgebraInstance {
            alpha,
            epsilon,
            ..self.clone()
        }
    }

    /// Same products with `α = ε = Id`.
    pub fn with_identity_maps(&self) -> DialgebraInstance {
        let id = GradedMap::identity(self.field(), self.dim());
        self.with_maps(id.clone(), id)
    }

    pub fn has_zero_products(&self) -> bool {
        self.left.is_zero() && self.right.is_zero()
    }

    /// The isomorphic instance in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<DialgebraInstance> {
        let p_inv = p.inverse().ok_or_else(|| Error::Singular("change of basis".into()))?;
        let conj = |m: &GradedMap| GradedMap::new(p_inv.mul(m.matrix()).mul(p)).expect("square");
        Ok(DialgebraInstance {
            space: self.space.clone(),
            left: self.left.change_basis(p, &p_inv),
            right: self.right.change_basis(p, &p_inv),
            alpha: conj(&self.alpha),
            epsilon: conj(&self.epsilon),
        })
    }

    pub fn check_grading(&self) -> GradingReport {
        grading_report(
            &self.space,
            &[("left", &self.left), ("right", &self.right)],
            &[("alpha", &self.alpha), ("epsilon", &self.epsilon)],
        )
    }

    /// Zeroes every entry that breaks evenness.
    pub fn project_graded(&mut self) {
        let space = self.space.clone();
        project_tensor(&space, &mut self.left);
        project_tensor(&space, &mut self.right);
        project_map(&space, &mut self.alpha);
        project_map(&space, &mut self.epsilon);
    }
}

impl SuperalgebraInstance {
    pub fn new(space: SuperSpace, prod: ProductTensor, alpha: GradedMap, epsilon: GradedMap) -> Result<SuperalgebraInstance> {
        check_shapes(
            &space,
            prod.field(),
            &[("prod", &prod)],
            &[("alpha", alpha.matrix()), ("epsilon", epsilon.matrix())],
        )?;
        Ok(SuperalgebraInstance { space, prod, alpha, epsilon })
    }

    pub fn field(&self) -> Field {
        self.prod.field()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn check_grading(&self) -> GradingReport {
        grading_report(
            &self.space,
            &[("prod", &self.prod)],
            &[("alpha", &self.alpha), ("epsilon", &self.epsilon)],
        )
    }

    pub fn project_graded(&mut self) {
        let space = self.space.clone();
        project_tensor(&space, &mut self.prod);
        project_map(&space, &mut self.alpha);
        project_map(&space, &mut self.epsilon);
    }
}

impl DifferentialInstance {
    pub fn new(base: SuperalgebraInstance, d: ParityMap) -> Result<DifferentialInstance> {
        check_shapes(&base.space, base.field(), &[], &[("d", &d.matrix)])?;
        ParityMap::new(&base.space, d.matrix.clone(), d.parity)?;
        Ok(DifferentialInstance { base, d })
    }

    pub fn check_grading(&self) -> GradingReport {
        let mut report = self.base.check_grading();
        for (i, j) in parity_violations(&self.d.matrix, &self.base.space, self.d.parity) {
            report.maps.push(MapViolation { map: "d".into(), row: i, col: j });
        }
        report
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensorViolation {
    pub product: String,
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapViolation {
    pub map: String,
    pub row: usize,
    pub col: usize,
}

/// Every entry that breaks evenness of a product or a structure map.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GradingReport {
    pub tensors: Vec<TensorViolation>,
    pub maps: Vec<MapViolation>,
}

impl GradingReport {
    pub fn is_empty(&self) -> bool {
        self.tensors.is_empty() && self.maps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.tensors.len() + self.maps.len()
    }
}

fn grading_report(space: &SuperSpace, tensors: &[(&str, &ProductTensor)], maps: &[(&str, &GradedMap)]) -> GradingReport {
    let dim = space.dim();
    let mut report = GradingReport::default();
    for (name, t) in tensors {
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    if space.parity(k) != space.parity(i) + space.parity(j) && !t.get(i, j, k).is_zero() {
                        report.tensors.push(TensorViolation { product: name.to_string(), i, j, k });
                    }
                }
            }
        }
    }
    for (name, m) in maps {
        for (row, col) in m.parity_violations(space, Parity::Even) {
            report.maps.push(MapViolation { map: name.to_string(), row, col });
        }
    }
    report
}

fn project_tensor(space: &SuperSpace, t: &mut ProductTensor) {
    let dim = space.dim();
    let zero = t.field().zero();
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                if space.parity(k) != space.parity(i) + space.parity(j) {
                    t.set(i, j, k, zero.clone());
                }
            }
        }
    }
}

fn project_map(space: &SuperSpace, m: &mut GradedMap) {
    let mut matrix = m.matrix().clone();
    for (i, j) in m.parity_violations(space, Parity::Even) {
        matrix.set(i, j, matrix.field().zero());
    }
    *m = GradedMap::new(matrix).expect("square");
}

/// Evenness report for any instance kind.
pub fn check_grading(instance: &DialgebraInstance) -> GradingReport {
    instance.check_grading()
}
