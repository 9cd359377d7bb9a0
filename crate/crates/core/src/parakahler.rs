//! Almost product and para-complex structures, para-Hermitian and
//! para-Kähler verification, and the structural consequences of being
//! para-Kähler.

use crate::error::{Error, Result};
use crate::exactlin::{in_span, Matrix, Vector};
use crate::geometry::{check_metric, check_symplectic, levi_civita, symplectic_product, BilinearForm};
use crate::homalg::{check_left_symmetric, check_nijenhuis, require_size, HomAlgebra, HomLieAlgebra, StructureTensor};
use crate::report::{flag, Check, CheckReport, Tally, Witness};

/// An endomorphism `K` proposed as an almost product structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductStructure {
    k: Matrix,
}

impl ProductStructure {
    pub fn new(k: Matrix) -> Self {
        ProductStructure { k }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.k
    }

    /// `S = φ∘K`.
    pub fn compose(&self, twist: &Matrix) -> Matrix {
        twist * &self.k
    }
}

/// Bases of the `±1` eigenspaces of `φ∘K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub plus: Vec<Vector>,
    pub minus: Vec<Vector>,
    pub para_complex: bool,
}

fn column_tally(name: &str, lhs: &Matrix, rhs: &Matrix) -> Check {
    let mut t = Tally::new(name);
    for j in 0..lhs.cols() {
        t.compare(&[j], &lhs.column(j), &rhs.column(j));
    }
    t.finish()
}

fn scalar(c: crate::exactlin::Rational) -> Vector {
    Vector::new(vec![c])
}

/// `φ² = Id`, `K² = Id` and `φK = Kφ`.
pub fn check_almost_product(algebra: &HomLieAlgebra, structure: &ProductStructure) -> CheckReport {
    let mut report = CheckReport::new("almost product structure");
    let n = algebra.dim();
    let k = &structure.k;
    if require_size(n, k).is_err() {
        report.push(flag("K shape", false, None));
        return report;
    }
    let phi = algebra.twist();
    let id = Matrix::identity(n);
    report.push(column_tally("twist involutive", &(phi * phi), &id));
    report.push(column_tally("K squares to identity", &(k * k), &id));
    report.push(column_tally("K commutes with twist", &(phi * k), &(k * phi)));
    report
}

/// `g¹ = ker(φK - Id)` and `g⁻¹ = ker(φK + Id)`.
pub fn eigensplit(algebra: &HomLieAlgebra, structure: &ProductStructure) -> Result<Decomposition> {
    Error::require("almost product structure", check_almost_product(algebra, structure))?;
    let n = algebra.dim();
    let s = structure.compose(algebra.twist());
    let id = Matrix::identity(n);
    let plus = (&s - &id).kernel_basis();
    let minus = (&s + &id).kernel_basis();
    let para_complex = plus.len() == minus.len();
    Ok(Decomposition {
        plus,
        minus,
        para_complex,
    })
}

fn require_metric(algebra: &HomLieAlgebra, metric: &BilinearForm) -> Result<()> {
    Error::require("pseudo-Riemannian metric", check_metric(algebra, metric)?)?;
    Ok(())
}

/// Equal eigenspace dimensions, `⟨Su, Sv⟩ = -⟨u, v⟩` and vanishing
/// Nijenhuis torsion, where `S = φ∘K`.
pub fn check_para_hermitian(
    algebra: &HomLieAlgebra,
    metric: &BilinearForm,
    structure: &ProductStructure,
) -> Result<CheckReport> {
    require_metric(algebra, metric)?;
    let split = eigensplit(algebra, structure)?;
    let n = algebra.dim();
    let s = structure.compose(algebra.twist());
    let g = metric.matrix();
    let mut report = CheckReport::new("para-Hermitian structure");
    report.push(flag(
        "para-complex",
        split.para_complex,
        Some(Witness {
            indices: vec![split.plus.len(), split.minus.len()],
            defect: Vector::zeros(0),
        }),
    ));
    let pulled = &(&s.transpose() * g) * &s;
    let mut anti = Tally::new("anti-compatibility");
    for i in 0..n {
        for j in 0..n {
            anti.defect(&[i, j], scalar(pulled.get(i, j) + g.get(i, j)));
        }
    }
    report.push(anti.finish());
    report.absorb(
        "",
        check_nijenhuis(algebra.bracket(), algebra.twist(), structure.matrix())?,
    );
    Ok(report)
}

/// `S = φ∘K` skew for the metric and `L_u∘S = S∘L_u` for the Levi-Civita
/// product, with the two equivalent product forms
/// `S(u)·S(v) = S(S(u)·v)` and `u·v = S(u·S(v))` as cross-checks.
pub fn check_para_kahler(
    algebra: &HomLieAlgebra,
    metric: &BilinearForm,
    structure: &ProductStructure,
) -> Result<CheckReport> {
    require_metric(algebra, metric)?;
    Error::require("almost product structure", check_almost_product(algebra, structure))?;
    let product = levi_civita(algebra, metric)?;
    Ok(para_kahler_report(algebra, metric, structure, &product))
}

pub(crate) fn para_kahler_report(
    algebra: &HomLieAlgebra,
    metric: &BilinearForm,
    structure: &ProductStructure,
    product: &StructureTensor,
) -> CheckReport {
    let n = algebra.dim();
    let s = structure.compose(algebra.twist());
    let g = metric.matrix();
    let mut report = CheckReport::new("para-Kähler structure");

    let left = &s.transpose() * g;
    let right = g * &s;
    let mut skew = Tally::new("skew-symmetry");
    for i in 0..n {
        for j in 0..n {
            skew.defect(&[i, j], scalar(left.get(i, j) + right.get(i, j)));
        }
    }
    report.push(skew.finish());

    let mut invariance = Tally::new("invariance");
    for i in 0..n {
        let l = product.left(&Vector::unit(n, i));
        let ls = &l * &s;
        let sl = &s * &l;
        for j in 0..n {
            invariance.compare(&[i, j], &ls.column(j), &sl.column(j));
        }
    }
    report.push(invariance.finish());

    let s_cols: Vec<Vector> = (0..n).map(|j| s.column(j)).collect();
    let mut am1 = Tally::new("product form S(u)·S(v) = S(S(u)·v)");
    let mut am2 = Tally::new("product form u·v = S(u·S(v))");
    for i in 0..n {
        for j in 0..n {
            let ej = Vector::unit(n, j);
            am1.compare(
                &[i, j],
                &product.apply(&s_cols[i], &s_cols[j]),
                &s.apply(&product.apply(&s_cols[i], &ej)),
            );
            am2.compare(
                &[i, j],
                &product.basis_product(i, j),
                &s.apply(&product.apply(&Vector::unit(n, i), &s_cols[j])),
            );
        }
    }
    report.push(am1.finish());
    report.push(am2.finish());
    report
}

/// `Ω(u, v) = ⟨(φ∘K)u, v⟩`.
pub fn fundamental_form(
    algebra: &HomLieAlgebra,
    metric: &BilinearForm,
    structure: &ProductStructure,
) -> Result<BilinearForm> {
    Error::require("para-Kähler structure", check_para_kahler(algebra, metric, structure)?)?;
    Ok(fundamental_form_unchecked(algebra, metric, structure))
}

fn fundamental_form_unchecked(
    algebra: &HomLieAlgebra,
    metric: &BilinearForm,
    structure: &ProductStructure,
) -> BilinearForm {
    let s = structure.compose(algebra.twist());
    BilinearForm::skew(&s.transpose() * metric.matrix())
        .expect("S is skew for the metric once the para-Kähler check passed")
}

fn isotropy(name: &str, form: &BilinearForm, basis: &[Vector]) -> Check {
    let mut t = Tally::new(name);
    for (i, u) in basis.iter().enumerate() {
        for (j, v) in basis.iter().enumerate() {
            t.defect(&[i, j], scalar(form.eval(u, v)));
        }
    }
    t.finish()
}

fn lagrangian(name: &str, form: &BilinearForm, basis: &[Vector]) -> Check {
    let mut c = isotropy(name, form, basis);
    if 2 * basis.len() != form.dim() {
        c.evaluated += 1;
        c.failed += 1;
        c.passed = false;
        c.witness.get_or_insert(Witness {
            indices: vec![basis.len()],
            defect: Vector::zeros(0),
        });
    }
    c
}

/// Restriction of the product to the span of `basis` as a hom-algebra with
/// the restricted twist, when both are closed on it.
fn restricted_algebra(product: &StructureTensor, twist: &Matrix, basis: &[Vector]) -> Option<HomAlgebra> {
    let p = product.restrict(basis)?;
    let t = crate::homalg::restrict_map(twist, basis)?;
    HomAlgebra::new(p, t).ok()
}

/// Runs every structural consequence of para-Kähler on the instance: (i) the
/// fundamental form is symplectic; (ii) `g¹`, `g⁻¹` are subalgebras,
/// isotropic for the metric and Lagrangian for `Ω`; (iii) para-Hermitian;
/// (iv) Levi-Civita multiplication preserves each eigenspace; (v) `φ`
/// preserves each eigenspace; the Levi-Civita product agrees with the
/// symplectic product on `g¹ × g¹` and `g⁻¹ × g⁻¹`, and its restrictions are
/// hom-left-symmetric.
pub fn theorem_battery(
    algebra: &HomLieAlgebra,
    metric: &BilinearForm,
    structure: &ProductStructure,
) -> Result<CheckReport> {
    Error::require("para-Kähler structure", check_para_kahler(algebra, metric, structure)?)?;
    let n = algebra.dim();
    let phi = algebra.twist();
    let br = algebra.bracket();
    let product = levi_civita(algebra, metric)?;
    let omega = fundamental_form_unchecked(algebra, metric, structure);
    let split = eigensplit(algebra, structure)?;
    let parts = [("g¹", &split.plus), ("g⁻¹", &split.minus)];
    let mut report = CheckReport::new("para-Kähler consequences");

    report.absorb("(i) ", check_symplectic(algebra, &omega)?);

    for (label, basis) in parts {
        let mut sub = Tally::new(format!("(ii) {label} subalgebra"));
        for (i, u) in basis.iter().enumerate() {
            for (j, v) in basis.iter().enumerate() {
                let w = br.apply(u, v);
                sub.outcome(&[i, j], in_span(basis, &w), w);
            }
        }
        report.push(sub.finish());
        report.push(isotropy(&format!("(ii) {label} isotropic"), metric, basis));
        report.push(lagrangian(&format!("(ii) {label} Lagrangian"), &omega, basis));
    }

    report.absorb("(iii) ", check_para_hermitian(algebra, metric, structure)?);

    for (label, basis) in parts {
        let mut t = Tally::new(format!("(iv) products land in {label}"));
        for i in 0..n {
            for (j, b) in basis.iter().enumerate() {
                let v = product.apply(&Vector::unit(n, i), b);
                t.outcome(&[i, j], in_span(basis, &v), v);
            }
        }
        report.push(t.finish());
    }

    for (label, basis) in parts {
        let mut t = Tally::new(format!("(v) twist preserves {label}"));
        for (j, b) in basis.iter().enumerate() {
            let v = phi.apply(b);
            t.outcome(&[j], in_span(basis, &v), v);
        }
        report.push(t.finish());
    }

    let a = symplectic_product(algebra, &omega)?;
    for (label, basis) in parts {
        let mut t = Tally::new(format!("Levi-Civita equals symplectic product on {label}"));
        for (i, u) in basis.iter().enumerate() {
            for (j, v) in basis.iter().enumerate() {
                t.compare(&[i, j], &product.apply(u, v), &a.apply(u, v));
            }
        }
        report.push(t.finish());

        let name = format!("restriction to {label} is hom-left-symmetric");
        match restricted_algebra(&product, phi, basis) {
            Some(sub) => report.push(flag(name, check_left_symmetric(&sub).passed(), None)),
            None => report.push(flag(name, false, None)),
        }
    }
    Ok(report)
}
