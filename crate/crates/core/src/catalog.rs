//! Worked examples used by tests, benches and the command line tool.
//!
//! The split example is the four-dimensional hom-Lie algebra
//! `[e1,e2] = a e1`, `[e1,e3] = b e4`, `[e2,e4] = a e4` with
//! `φ = diag(-1, 1, -1, 1)`, the symplectic form and metric pairing `e1`
//! with `e3` (value `A`) and `e2` with `e4` (value `aA/b`), and the product
//! structure `K = diag(-1, 1, 1, -1)`.

use crate::exactlin::{Matrix, Rational};
use crate::geometry::BilinearForm;
use crate::homalg::{HomAlgebra, HomLieAlgebra, StructureTensor};
use crate::parakahler::ProductStructure;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitExample {
    pub algebra: HomLieAlgebra,
    pub omega: BilinearForm,
    pub metric: BilinearForm,
    pub k: Matrix,
}

impl SplitExample {
    pub fn structure(&self) -> ProductStructure {
        ProductStructure::new(self.k.clone())
    }
}

pub fn split_example_bracket(a: Rational, b: Rational) -> StructureTensor {
    StructureTensor::antisymmetric_from_entries(4, [(0, 1, 0, a.clone()), (0, 2, 3, b), (1, 3, 3, a)])
        .expect("indices in range")
}

pub fn split_example_twist() -> Matrix {
    Matrix::diagonal_i64(&[-1, 1, -1, 1])
}

/// Panics if `b = 0`.
pub fn split_example(a: Rational, b: Rational, big_a: Rational) -> SplitExample {
    assert!(b != Rational::from_integer(0.into()), "b must be nonzero");
    let c = &a * &big_a / &b;
    let zero = Rational::from_integer(0.into());
    let form = |sign: i64| {
        let s = Rational::from_integer(sign.into());
        Matrix::from_rows(vec![
            vec![zero.clone(), zero.clone(), big_a.clone(), zero.clone()],
            vec![zero.clone(), zero.clone(), zero.clone(), c.clone()],
            vec![&s * &big_a, zero.clone(), zero.clone(), zero.clone()],
            vec![zero.clone(), &s * &c, zero.clone(), zero.clone()],
        ])
        .expect("square")
    };
    SplitExample {
        algebra: HomLieAlgebra::new(split_example_bracket(a, b), split_example_twist()).expect("antisymmetric"),
        omega: BilinearForm::skew(form(-1)).expect("skew"),
        metric: BilinearForm::symmetric(form(1)).expect("symmetric"),
        k: Matrix::diagonal_i64(&[-1, 1, 1, -1]),
    }
}

/// The Levi-Civita product of the split example:
/// `e1·e2 = a e1`, `e1·e3 = b e4`, `e2·e2 = -a e2`, `e2·e4 = a e4`.
pub fn split_example_product(a: Rational, b: Rational) -> StructureTensor {
    StructureTensor::from_entries(
        4,
        [(0, 1, 0, a.clone()), (0, 2, 3, b), (1, 1, 1, -a.clone()), (1, 3, 3, a)],
    )
    .expect("indices in range")
}

/// The product induced on `span{e1, e2}`: `e1·e2 = a e1`, `e2·e2 = -a e2`,
/// with `φ = diag(-1, 1)`.
pub fn plus_part(a: Rational) -> HomAlgebra {
    let p = StructureTensor::from_entries(2, [(0, 1, 0, a.clone()), (1, 1, 1, -a)]).expect("indices in range");
    HomAlgebra::new(p, Matrix::diagonal_i64(&[-1, 1])).expect("square twist")
}

/// Zero product on the dual of [`plus_part`], twist `diag(-1, 1)`.
pub fn plus_part_dual() -> HomAlgebra {
    HomAlgebra::new(StructureTensor::zeros(2), Matrix::diagonal_i64(&[-1, 1])).expect("square twist")
}
