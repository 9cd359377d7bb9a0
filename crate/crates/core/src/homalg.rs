//! Hom-algebras and hom-Lie algebras given by structure constants, with the
//! axiom checkers, the curvature tensor, the hom-Bianchi comparison and the
//! Nijenhuis torsion.
//!
//! Every identity is multilinear, so each checker evaluates it on basis
//! tuples only. Constructors validate shapes but never algebraic axioms: an
//! algebra that fails hom-Jacobi is still a value you can hold and inspect.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{coordinates_in, Matrix, Rational, Vector};
use crate::report::{flag, info, CheckReport, Tally, Witness};

/// Rank-3 array of structure constants: entry `(i, j, k)` is the coefficient
/// of `e_k` in `e_i ∘ e_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StructureTensor {
    dim: usize,
    coeffs: Vec<Rational>,
}

impl StructureTensor {
    pub fn zeros(dim: usize) -> Self {
        StructureTensor {
            dim,
            coeffs: vec![Rational::zero(); dim * dim * dim],
        }
    }

    /// Sets entry `(i, j, k)` for every listed tuple. Later tuples overwrite
    /// earlier ones.
    pub fn from_entries<I>(dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Rational)>,
    {
        let mut t = Self::zeros(dim);
        for (i, j, k, c) in entries {
            for index in [i, j, k] {
                if index >= dim {
                    return Err(Error::IndexOutOfRange { index, dim });
                }
            }
            let at = t.offset(i, j, k);
            t.coeffs[at] = c;
        }
        Ok(t)
    }

    /// Antisymmetric tensor from entries of `[e_i, e_j]`; each tuple also
    /// sets the mirrored `(j, i, k)` entry to the negated value.
    pub fn antisymmetric_from_entries<I>(dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Rational)>,
    {
        let mut all = Vec::new();
        for (i, j, k, c) in entries {
            if i == j && !c.is_zero() {
                return Err(Error::NotAntisymmetric { i, j });
            }
            all.push((j, i, k, -c.clone()));
            all.push((i, j, k, c));
        }
        Self::from_entries(dim, all)
    }

    /// Integer-valued shorthand used heavily in tests and fixtures.
    pub fn from_i64(dim: usize, entries: &[(usize, usize, usize, i64)]) -> Result<Self> {
        Self::from_entries(
            dim,
            entries.iter().map(|&(i, j, k, c)| (i, j, k, crate::exactlin::int(c))),
        )
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.coeffs[self.offset(i, j, k)]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `e_i ∘ e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let start = self.offset(i, j, 0);
        Vector::new(self.coeffs[start..start + self.dim].to_vec())
    }

    /// `u ∘ v` for arbitrary coordinate vectors.
    pub fn apply(&self, u: &Vector, v: &Vector) -> Vector {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for (i, ui) in u.entries().iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.entries().iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let w = ui * vj;
                let start = self.offset(i, j, 0);
                for (o, c) in out.iter_mut().zip(&self.coeffs[start..start + n]) {
                    if !c.is_zero() {
                        *o += &w * c;
                    }
                }
            }
        }
        Vector::new(out)
    }

    /// Matrix of left multiplication `L_u = u ∘ (·)`.
    pub fn left(&self, u: &Vector) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| self.apply(u, &Vector::unit(self.dim, j)))
            .collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// Matrix of right multiplication `R_v = (·) ∘ v`.
    pub fn right(&self, v: &Vector) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|i| self.apply(&Vector::unit(self.dim, i), v))
            .collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// First pair `(i, j)` with `c[i][j] ≠ -c[j][i]`, if any.
    pub fn antisymmetry_violation(&self) -> Option<(usize, usize)> {
        for i in 0..self.dim {
            for j in i..self.dim {
                if (0..self.dim).any(|k| self.get(i, j, k) != &-self.get(j, i, k)) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// `c'[i][j][k] = c[i][j][k] - c[j][i][k]`.
    pub fn commutator(&self) -> StructureTensor {
        let n = self.dim;
        let mut t = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let at = t.offset(i, j, k);
                    t.coeffs[at] = self.get(i, j, k) - self.get(j, i, k);
                }
            }
        }
        t
    }

    /// The same product written in the basis given by the columns of `basis`
    /// (an invertible matrix).
    pub fn change_basis(&self, basis: &Matrix) -> Result<StructureTensor> {
        if basis.rows() != self.dim || basis.cols() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: basis.rows(),
            });
        }
        let inv = basis.inverse()?;
        let cols: Vec<Vector> = (0..self.dim).map(|j| basis.column(j)).collect();
        let mut t = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let p = inv.apply(&self.apply(&cols[i], &cols[j]));
                for (k, c) in p.into_entries().into_iter().enumerate() {
                    let at = t.offset(i, j, k);
                    t.coeffs[at] = c;
                }
            }
        }
        Ok(t)
    }

    /// The product induced on the subspace spanned by the independent vectors
    /// `basis`, in those coordinates; `None` if the subspace is not closed.
    pub fn restrict(&self, basis: &[Vector]) -> Option<StructureTensor> {
        let m = basis.len();
        let mut t = Self::zeros(m);
        for i in 0..m {
            for j in 0..m {
                let p = coordinates_in(basis, &self.apply(&basis[i], &basis[j]))?;
                for (k, c) in p.into_entries().into_iter().enumerate() {
                    let at = t.offset(i, j, k);
                    t.coeffs[at] = c;
                }
            }
        }
        Some(t)
    }

    /// Nonzero entries `(i, j, k, c)` in lexicographic order.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }
}

/// Matrix of the restriction of `map` to the invariant subspace spanned by
/// `basis`, or `None` if the subspace is not invariant.
pub fn restrict_map(map: &Matrix, basis: &[Vector]) -> Option<Matrix> {
    let cols = basis
        .iter()
        .map(|b| coordinates_in(basis, &map.apply(b)))
        .collect::<Option<Vec<_>>>()?;
    Some(Matrix::from_columns(basis.len(), &cols))
}

pub(crate) fn require_size(dim: usize, twist: &Matrix) -> Result<()> {
    if twist.rows() != dim || twist.cols() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: if twist.rows() != dim {
                twist.rows()
            } else {
                twist.cols()
            },
        });
    }
    Ok(())
}

/// A product together with its twist map `φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomAlgebra {
    product: StructureTensor,
    twist: Matrix,
}

impl HomAlgebra {
    pub fn new(product: StructureTensor, twist: Matrix) -> Result<Self> {
        require_size(product.dim(), &twist)?;
        Ok(HomAlgebra { product, twist })
    }

    pub fn dim(&self) -> usize {
        self.product.dim()
    }

    pub fn product(&self) -> &StructureTensor {
        &self.product
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    pub fn mul(&self, u: &Vector, v: &Vector) -> Vector {
        self.product.apply(u, v)
    }

    pub fn is_involutive(&self) -> bool {
        (&self.twist * &self.twist).is_identity()
    }

    /// Same algebra in the basis given by the columns of `basis`.
    pub fn change_basis(&self, basis: &Matrix) -> Result<HomAlgebra> {
        let product = self.product.change_basis(basis)?;
        let twist = &(&basis.inverse()? * &self.twist) * basis;
        Ok(HomAlgebra { product, twist })
    }
}

/// An antisymmetric bracket together with its twist map `φ`. Hom-Jacobi and
/// the morphism property are checked by [`check_hom_lie`], not assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomLieAlgebra {
    bracket: StructureTensor,
    twist: Matrix,
}

impl HomLieAlgebra {
    pub fn new(bracket: StructureTensor, twist: Matrix) -> Result<Self> {
        require_size(bracket.dim(), &twist)?;
        if let Some((i, j)) = bracket.antisymmetry_violation() {
            return Err(Error::NotAntisymmetric { i, j });
        }
        Ok(HomLieAlgebra { bracket, twist })
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn bracket(&self) -> &StructureTensor {
        &self.bracket
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    pub fn bracket_of(&self, u: &Vector, v: &Vector) -> Vector {
        self.bracket.apply(u, v)
    }

    pub fn is_regular(&self) -> bool {
        self.twist.is_invertible()
    }

    pub fn is_involutive(&self) -> bool {
        (&self.twist * &self.twist).is_identity()
    }

    pub fn check(&self) -> CheckReport {
        check_hom_lie(&self.bracket, &self.twist)
    }

    /// Same algebra in the basis given by the columns of `basis`.
    pub fn change_basis(&self, basis: &Matrix) -> Result<HomLieAlgebra> {
        let bracket = self.bracket.change_basis(basis)?;
        let twist = &(&basis.inverse()? * &self.twist) * basis;
        Ok(HomLieAlgebra { bracket, twist })
    }
}

/// The commutator bracket `[u, v] = u·v - v·u` with the same twist.
pub fn commutator(algebra: &HomAlgebra) -> HomLieAlgebra {
    HomLieAlgebra {
        bracket: algebra.product.commutator(),
        twist: algebra.twist.clone(),
    }
}

fn columns(m: &Matrix) -> Vec<Vector> {
    (0..m.cols()).map(|j| m.column(j)).collect()
}

/// Verdict on whether `twist` is regular (invertible); witness is a kernel
/// vector.
fn regular_flag(twist: &Matrix) -> crate::report::Check {
    let kernel = twist.kernel_basis();
    info(
        "regular",
        kernel.is_empty(),
        kernel.into_iter().next().map(|v| Witness {
            indices: vec![],
            defect: v,
        }),
    )
}

/// Verdict on `φ² = Id`; witness is the first column of `φ² - Id` that is
/// nonzero.
fn involutive_flag(twist: &Matrix) -> crate::report::Check {
    let n = twist.rows();
    let sq = twist * twist;
    let bad = (0..n).find(|&j| sq.column(j) != Vector::unit(n, j));
    info(
        "involutive",
        bad.is_none(),
        bad.map(|j| Witness {
            indices: vec![j],
            defect: &sq.column(j) - &Vector::unit(n, j),
        }),
    )
}

fn shape_failure(title: &str, dim: usize, twist: &Matrix) -> Option<CheckReport> {
    if twist.rows() == dim && twist.cols() == dim {
        return None;
    }
    let mut r = CheckReport::new(title);
    r.push(flag("twist shape", false, None));
    Some(r)
}

/// Antisymmetry, hom-Jacobi `↻[φu, [v, w]] = 0`, the morphism property
/// `φ[u, v] = [φu, φv]`, plus regular and involutive flags.
pub fn check_hom_lie(bracket: &StructureTensor, twist: &Matrix) -> CheckReport {
    let title = "hom-Lie algebra";
    let n = bracket.dim();
    if let Some(r) = shape_failure(title, n, twist) {
        return r;
    }
    let mut report = CheckReport::new(title);

    let mut anti = Tally::new("antisymmetry");
    for i in 0..n {
        for j in i..n {
            anti.defect(&[i, j], &bracket.basis_product(i, j) + &bracket.basis_product(j, i));
        }
    }
    report.push(anti.finish());

    let phi = columns(twist);
    let br: Vec<Vec<Vector>> = (0..n)
        .map(|i| (0..n).map(|j| bracket.basis_product(i, j)).collect())
        .collect();
    let mut jacobi = Tally::new("hom-Jacobi");
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let s = &(&bracket.apply(&phi[i], &br[j][k]) + &bracket.apply(&phi[j], &br[k][i]))
                    + &bracket.apply(&phi[k], &br[i][j]);
                jacobi.defect(&[i, j, k], s);
            }
        }
    }
    report.push(jacobi.finish());

    let mut morphism = Tally::new("twist is a bracket morphism");
    for i in 0..n {
        for j in 0..n {
            morphism.compare(&[i, j], &twist.apply(&br[i][j]), &bracket.apply(&phi[i], &phi[j]));
        }
    }
    report.push(morphism.finish());
    report.push(regular_flag(twist));
    report.push(involutive_flag(twist));
    report
}

/// Twisted associator `ass_φ(u, v, w) = (u·v)·φ(w) - φ(u)·(v·w)`.
pub fn associator(algebra: &HomAlgebra, u: &Vector, v: &Vector, w: &Vector) -> Vector {
    let p = &algebra.product;
    let phi = &algebra.twist;
    &p.apply(&p.apply(u, v), &phi.apply(w)) - &p.apply(&phi.apply(u), &p.apply(v, w))
}

/// Product morphism, left-symmetry `ass_φ(u,v,w) = ass_φ(v,u,w)`, and an
/// informational hom-associativity flag.
pub fn check_left_symmetric(algebra: &HomAlgebra) -> CheckReport {
    let n = algebra.dim();
    let p = &algebra.product;
    let phi = &algebra.twist;
    let mut report = CheckReport::new("hom-left-symmetric algebra");
    let e: Vec<Vector> = (0..n).map(|i| Vector::unit(n, i)).collect();
    let phi_e = columns(phi);

    let mut morphism = Tally::new("twist is a product morphism");
    for i in 0..n {
        for j in 0..n {
            morphism.compare(
                &[i, j],
                &phi.apply(&p.basis_product(i, j)),
                &p.apply(&phi_e[i], &phi_e[j]),
            );
        }
    }
    report.push(morphism.finish());

    let ass: Vec<Vec<Vec<Vector>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| associator(algebra, &e[i], &e[j], &e[k])).collect())
                .collect()
        })
        .collect();
    let mut left = Tally::new("left-symmetry");
    let mut assoc = Tally::new("hom-associative").informational();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                left.compare(&[i, j, k], &ass[i][j][k], &ass[j][i][k]);
                assoc.defect(&[i, j, k], ass[i][j][k].clone());
            }
        }
    }
    report.push(left.finish());
    report.push(assoc.finish());
    report
}

/// `𝒦(u, v)w = φ(u)·(v·w) - φ(v)·(u·w) - [u, v]·φ(w)` with `[·,·]` the
/// commutator of the product.
pub fn curvature_of(algebra: &HomAlgebra, u: &Vector, v: &Vector, w: &Vector) -> Vector {
    let p = &algebra.product;
    let phi = &algebra.twist;
    let bracket = &p.apply(u, v) - &p.apply(v, u);
    let a = p.apply(&phi.apply(u), &p.apply(v, w));
    let b = p.apply(&phi.apply(v), &p.apply(u, w));
    let c = p.apply(&bracket, &phi.apply(w));
    &(&a - &b) - &c
}

/// Curvature on basis vectors, `𝒦(e_i, e_j)e_k`.
pub fn curvature(algebra: &HomAlgebra, i: usize, j: usize, k: usize) -> Result<Vector> {
    let n = algebra.dim();
    for index in [i, j, k] {
        if index >= n {
            return Err(Error::IndexOutOfRange { index, dim: n });
        }
    }
    Ok(curvature_of(
        algebra,
        &Vector::unit(n, i),
        &Vector::unit(n, j),
        &Vector::unit(n, k),
    ))
}

/// Compares `↻[φu, [v, w]]` (bracket = commutator) with `↻𝒦(u, v)w` on every
/// basis triple, and flags whether both sides vanish, i.e. whether the
/// product is hom-Lie-admissible.
pub fn hom_bianchi_defect(algebra: &HomAlgebra) -> CheckReport {
    let n = algebra.dim();
    let lie = commutator(algebra);
    let br = lie.bracket();
    let phi = &algebra.twist;
    let e: Vec<Vector> = (0..n).map(|i| Vector::unit(n, i)).collect();
    let phi_e = columns(phi);
    let mut equal = Tally::new("hom-Bianchi identity");
    let mut vanish = Tally::new("hom-Lie-admissible").informational();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let jac = &(&br.apply(&phi_e[i], &br.basis_product(j, k))
                    + &br.apply(&phi_e[j], &br.basis_product(k, i)))
                    + &br.apply(&phi_e[k], &br.basis_product(i, j));
                let curv = &(&curvature_of(algebra, &e[i], &e[j], &e[k]) + &curvature_of(algebra, &e[j], &e[k], &e[i]))
                    + &curvature_of(algebra, &e[k], &e[i], &e[j]);
                equal.compare(&[i, j, k], &jac, &curv);
                if jac.is_zero() && curv.is_zero() {
                    vanish.defect(&[i, j, k], jac);
                } else {
                    vanish.outcome(&[i, j, k], false, if jac.is_zero() { curv } else { jac });
                }
            }
        }
    }
    let mut report = CheckReport::new("hom-Bianchi identity");
    report.push(equal.finish());
    report.push(vanish.finish());
    report
}

fn nijenhuis_vectors(bracket: &StructureTensor, s: &Matrix, u: &Vector, v: &Vector) -> Vector {
    let su = s.apply(u);
    let sv = s.apply(v);
    let a = bracket.apply(&su, &sv);
    let b = s.apply(&bracket.apply(&su, v));
    let c = s.apply(&bracket.apply(u, &sv));
    let d = bracket.apply(u, v);
    &(&(&a - &b) - &c) + &d
}

/// Four times the Nijenhuis torsion of `S = φ∘K` on `(e_i, e_j)`:
/// `[Su, Sv] - S[Su, v] - S[u, Sv] + [u, v]`.
pub fn nijenhuis(bracket: &StructureTensor, twist: &Matrix, k: &Matrix, i: usize, j: usize) -> Result<Vector> {
    let n = bracket.dim();
    require_size(n, twist)?;
    require_size(n, k)?;
    for index in [i, j] {
        if index >= n {
            return Err(Error::IndexOutOfRange { index, dim: n });
        }
    }
    let s = twist * k;
    Ok(nijenhuis_vectors(bracket, &s, &Vector::unit(n, i), &Vector::unit(n, j)))
}

/// `N(e_i, e_j) = 0` over all ordered pairs.
pub fn check_nijenhuis(bracket: &StructureTensor, twist: &Matrix, k: &Matrix) -> Result<CheckReport> {
    let n = bracket.dim();
    require_size(n, twist)?;
    require_size(n, k)?;
    let s = twist * k;
    let mut tally = Tally::new("Nijenhuis torsion vanishes");
    for i in 0..n {
        for j in 0..n {
            tally.defect(
                &[i, j],
                nijenhuis_vectors(bracket, &s, &Vector::unit(n, i), &Vector::unit(n, j)),
            );
        }
    }
    let mut report = CheckReport::new("Nijenhuis torsion");
    report.push(tally.finish());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exactlin::int;

    fn e(n: usize, i: usize) -> Vector {
        Vector::unit(n, i)
    }

    #[test]
    fn commutator_of_levi_civita_table_is_the_example_bracket() {
        let data = catalog::split_example(int(1), int(2), int(3));
        let product = catalog::split_example_product(int(1), int(2));
        let lie = commutator(&HomAlgebra::new(product, data.algebra.twist().clone()).unwrap());
        assert_eq!(lie.bracket(), data.algebra.bracket());
        assert_eq!(lie.bracket_of(&e(4, 0), &e(4, 1)), e(4, 0));
        assert_eq!(lie.bracket_of(&e(4, 0), &e(4, 2)), e(4, 3).scale(&int(2)));
        assert_eq!(lie.bracket_of(&e(4, 1), &e(4, 3)), e(4, 3));
    }

    #[test]
    fn commutator_of_symmetric_product_vanishes() {
        let p = StructureTensor::from_i64(3, &[(0, 1, 2, 5), (1, 0, 2, 5), (2, 2, 0, -1)]).unwrap();
        let a = HomAlgebra::new(p, Matrix::identity(3)).unwrap();
        assert!(commutator(&a).bracket().is_zero());
    }

    #[test]
    fn commutator_of_single_product() {
        let p = StructureTensor::from_i64(3, &[(0, 1, 2, 1)]).unwrap();
        let lie = commutator(&HomAlgebra::new(p, Matrix::identity(3)).unwrap());
        assert_eq!(lie.bracket().basis_product(0, 1), e(3, 2));
        assert_eq!(lie.bracket().basis_product(1, 0), -&e(3, 2));
    }

    #[test]
    fn example_bracket_is_involutive_hom_lie() {
        let data = catalog::split_example(int(1), int(2), int(3));
        let report = data.algebra.check();
        assert!(report.passed(), "{report}");
        assert!(report.verdict("involutive"));
        assert!(report.verdict("regular"));
        assert_eq!(report.get("hom-Jacobi").unwrap().evaluated, 64);
    }

    #[test]
    fn identity_twist_breaks_hom_jacobi() {
        let data = catalog::split_example(int(1), int(1), int(1));
        let report = check_hom_lie(data.algebra.bracket(), &Matrix::identity(4));
        assert!(!report.passed());
        let jac = report.get("hom-Jacobi").unwrap();
        let w = jac.witness.as_ref().unwrap();
        assert_eq!(w.indices, vec![0, 1, 2]);
        assert_eq!(w.defect, Vector::from_i64(&[0, 0, 0, -2]));
    }

    #[test]
    fn zero_bracket_is_hom_lie_for_any_twist() {
        let twist = Matrix::from_i64(&[&[1, 2, 0], &[0, 0, 1], &[3, 0, 0]]);
        assert!(check_hom_lie(&StructureTensor::zeros(3), &twist).passed());
    }

    #[test]
    fn non_antisymmetric_bracket_reported() {
        let t = StructureTensor::from_i64(2, &[(0, 1, 0, 1)]).unwrap();
        let report = check_hom_lie(&t, &Matrix::identity(2));
        assert!(!report.verdict("antisymmetry"));
        assert!(HomLieAlgebra::new(t, Matrix::identity(2)).is_err());
    }

    #[test]
    fn twist_shape_mismatch_is_a_failed_check() {
        let report = check_hom_lie(&StructureTensor::zeros(2), &Matrix::identity(3));
        assert!(!report.passed());
    }

    #[test]
    fn restricted_plus_product_is_left_symmetric() {
        let a = catalog::plus_part(int(1));
        let report = check_left_symmetric(&a);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn zero_product_is_hom_associative() {
        let a = HomAlgebra::new(StructureTensor::zeros(3), Matrix::identity(3)).unwrap();
        let report = check_left_symmetric(&a);
        assert!(report.passed());
        assert!(report.verdict("hom-associative"));
    }

    #[test]
    fn left_symmetry_failure_has_witness() {
        // e1·e1 = e2, e2·e1 = e1: ass(e1,e2,e1) = -e2 but ass(e2,e1,e1) = e2.
        let p = StructureTensor::from_i64(2, &[(0, 0, 1, 1), (1, 0, 0, 1)]).unwrap();
        let a = HomAlgebra::new(p, Matrix::identity(2)).unwrap();
        assert_eq!(associator(&a, &e(2, 0), &e(2, 1), &e(2, 0)), Vector::from_i64(&[0, -1]));
        assert_eq!(associator(&a, &e(2, 1), &e(2, 0), &e(2, 0)), Vector::from_i64(&[0, 1]));
        let report = check_left_symmetric(&a);
        let left = report.get("left-symmetry").unwrap();
        assert!(!left.passed);
        assert!(left.witness.is_some());
    }

    #[test]
    fn curvature_vanishes_on_left_symmetric_algebras() {
        let a = catalog::plus_part(int(1));
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    assert!(curvature(&a, i, j, k).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn curvature_index_checked() {
        let a = catalog::plus_part(int(1));
        assert_eq!(curvature(&a, 0, 2, 0), Err(Error::IndexOutOfRange { index: 2, dim: 2 }));
    }

    #[test]
    fn bianchi_on_levi_civita_table_vanishes() {
        let data = catalog::split_example(int(1), int(2), int(3));
        let product = catalog::split_example_product(int(1), int(2));
        let a = HomAlgebra::new(product, data.algebra.twist().clone()).unwrap();
        let report = hom_bianchi_defect(&a);
        assert!(report.passed());
        assert!(report.verdict("hom-Lie-admissible"));
    }

    #[test]
    fn nijenhuis_vanishes_on_example() {
        let data = catalog::split_example(int(1), int(2), int(3));
        for i in 0..4 {
            for j in 0..4 {
                let v = nijenhuis(data.algebra.bracket(), data.algebra.twist(), &data.k, i, j).unwrap();
                assert!(v.is_zero());
            }
        }
    }

    #[test]
    fn nijenhuis_with_k_equal_twist_telescopes() {
        let data = catalog::split_example(int(1), int(2), int(3));
        let phi = data.algebra.twist();
        let r = check_nijenhuis(data.algebra.bracket(), phi, phi).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn nijenhuis_nonzero_in_dimension_three() {
        // [e1,e2] = e3, φ = Id, K = diag(1,1,-1): e1, e2 span the +1 space but
        // their bracket lands in the -1 space. 4N(e1,e2) = 2([e1,e2] - S[e1,e2]) = 4e3.
        let b = StructureTensor::antisymmetric_from_entries(3, [(0, 1, 2, int(1))]).unwrap();
        let k = Matrix::diagonal_i64(&[1, 1, -1]);
        let v = nijenhuis(&b, &Matrix::identity(3), &k, 0, 1).unwrap();
        assert_eq!(v, Vector::from_i64(&[0, 0, 4]));
        assert_eq!(nijenhuis(&b, &Matrix::identity(3), &k, 1, 0).unwrap(), -&v);
    }

    #[test]
    fn nijenhuis_vanishes_in_dimension_two() {
        // Both eigenlines are one-dimensional, so every term cancels.
        let b = StructureTensor::antisymmetric_from_entries(2, [(0, 1, 0, int(1))]).unwrap();
        let swap = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert!(check_nijenhuis(&b, &Matrix::identity(2), &swap).unwrap().passed());
    }

    #[test]
    fn change_basis_round_trip() {
        let p = StructureTensor::from_i64(2, &[(0, 1, 0, 1), (1, 1, 1, -1)]).unwrap();
        let basis = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
        let there = p.change_basis(&basis).unwrap();
        let back = there.change_basis(&basis.inverse().unwrap()).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn restriction_to_closed_subspace() {
        let data = catalog::split_example(int(1), int(2), int(3));
        let product = catalog::split_example_product(int(1), int(2));
        let plus = product.restrict(&[e(4, 0), e(4, 1)]).unwrap();
        assert_eq!(&plus, catalog::plus_part(int(1)).product());
        assert!(product.restrict(&[e(4, 0), e(4, 2)]).is_none());
        let _ = data;
    }
}
