//! Graded spaces, structure constants, structure maps and instance bundles.

mod instance;
mod map;
mod space;
mod tensor;

pub use instance::{
    check_grading, DialgebraInstance, DifferentialInstance, GradingReport, MapViolation,
    SuperalgebraInstance, TensorViolation,
};
pub use map::{hom_power, GradedMap, ParityMap};
pub use space::{Parity, SuperSpace, VectorParity};
pub use tensor::ProductTensor;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{Field, Matrix, Scalar};
    use proptest::prelude::*;

    fn random_tensor(field: Field, dim: usize, vals: &[i64]) -> ProductTensor {
        let mut t = ProductTensor::zero(field, dim);
        let mut it = vals.iter().cycle();
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    t.set(i, j, k, field.from_i64(*it.next().unwrap()));
                }
            }
        }
        t
    }

    #[test]
    fn evaluate_examples() {
        let q = Field::Rational;
        let mut t = ProductTensor::zero(q, 1);
        t.set(0, 0, 0, q.one());
        assert_eq!(t.evaluate(&[q.one()], &[q.one()]).unwrap(), vec![q.one()]);
        assert_eq!(t.evaluate(&[q.zero()], &[q.from_i64(5)]).unwrap(), vec![q.zero()]);

        let z = ProductTensor::zero(q, 2);
        let u = vec![q.from_i64(3), q.from_i64(-1)];
        assert_eq!(z.evaluate(&u, &u).unwrap(), vec![q.zero(), q.zero()]);
        assert!(z.evaluate(&u, &[q.one()]).is_err());
    }

    proptest! {
        #[test]
        fn evaluate_is_bilinear(
            vals in proptest::collection::vec(-3i64..4, 27),
            u in proptest::collection::vec(-5i64..6, 3),
            u2 in proptest::collection::vec(-5i64..6, 3),
            v in proptest::collection::vec(-5i64..6, 3),
            a in -4i64..5,
            b in -4i64..5,
        ) {
            let q = Field::Rational;
            let t = random_tensor(q, 3, &vals);
            let s = |x: &[i64]| x.iter().map(|&y| q.from_i64(y)).collect::<Vec<_>>();
            let (u, u2, v) = (s(&u), s(&u2), s(&v));
            let (a, b) = (q.from_i64(a), q.from_i64(b));
            let comb: Vec<Scalar> = u.iter().zip(&u2).map(|(x, y)| &(&a * x) + &(&b * y)).collect();
            let lhs = t.evaluate(&comb, &v).unwrap();
            let l1 = t.evaluate(&u, &v).unwrap();
            let l2 = t.evaluate(&u2, &v).unwrap();
            let rhs: Vec<Scalar> = l1.iter().zip(&l2).map(|(x, y)| &(&a * x) + &(&b * y)).collect();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn hom_power_is_additive(
            m in 0i64..3, n in 0i64..3, m2 in -2i64..3, n2 in -2i64..3, s in 1i64..4,
        ) {
            // Commuting invertible pair: an upper-triangular unipotent map and a scalar map.
            let q = Field::Rational;
            let f = GradedMap::new(Matrix::from_i64(q, &[&[1, 2], &[0, 1]])).unwrap();
            let g = GradedMap::new(Matrix::from_i64(q, &[&[s, 0], &[0, s]])).unwrap();
            let lhs = hom_power(&f, &g, m, n).unwrap().compose(&hom_power(&f, &g, m2, n2).unwrap());
            prop_assert_eq!(lhs, hom_power(&f, &g, m + m2, n + n2).unwrap());
        }
    }
}
