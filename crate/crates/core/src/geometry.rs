//! Symplectic and pseudo-Riemannian forms, the hom-Levi-Civita product and
//! the left-symmetric product attached to a symplectic structure.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{frac, Matrix, Rational, Vector};
use crate::homalg::{check_hom_lie, require_size, HomLieAlgebra, StructureTensor};
use crate::report::{flag, CheckReport, Tally, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormKind {
    Symmetric,
    Skew,
}

impl fmt::Display for FormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormKind::Symmetric => "symmetric",
            FormKind::Skew => "skew-symmetric",
        })
    }
}

/// A bilinear form `B(u, v) = uᵀ M v` whose matrix is exactly symmetric or
/// exactly skew-symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    matrix: Matrix,
    kind: FormKind,
}

impl BilinearForm {
    pub fn new(matrix: Matrix, kind: FormKind) -> Result<Self> {
        let ok = match kind {
            FormKind::Symmetric => matrix.is_symmetric(),
            FormKind::Skew => matrix.is_skew_symmetric(),
        };
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        if !ok {
            return Err(Error::InvalidForm(kind));
        }
        Ok(BilinearForm { matrix, kind })
    }

    pub fn symmetric(matrix: Matrix) -> Result<Self> {
        Self::new(matrix, FormKind::Symmetric)
    }

    pub fn skew(matrix: Matrix) -> Result<Self> {
        Self::new(matrix, FormKind::Skew)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn eval(&self, u: &Vector, v: &Vector) -> Rational {
        self.matrix.bilinear(u, v)
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.matrix.is_invertible()
    }

    /// Same form in the basis given by the columns of `basis`: `Pᵀ M P`.
    pub fn change_basis(&self, basis: &Matrix) -> BilinearForm {
        BilinearForm {
            matrix: &(&basis.transpose() * &self.matrix) * basis,
            kind: self.kind,
        }
    }
}

fn require_kind(form: &BilinearForm, expected: FormKind) -> Result<()> {
    if form.kind != expected {
        return Err(Error::KindMismatch {
            expected,
            found: form.kind,
        });
    }
    Ok(())
}

fn scalar(c: Rational) -> Vector {
    Vector::new(vec![c])
}

fn nondegenerate_flag(form: &BilinearForm) -> crate::report::Check {
    let kernel = form.matrix.kernel_basis();
    flag(
        "nondegenerate",
        kernel.is_empty(),
        kernel.into_iter().next().map(|v| Witness {
            indices: vec![],
            defect: v,
        }),
    )
}

fn invariance_tally(name: &str, form: &BilinearForm, twist: &Matrix) -> crate::report::Check {
    let n = form.dim();
    let pulled = &(&twist.transpose() * &form.matrix) * twist;
    let mut t = Tally::new(name);
    for i in 0..n {
        for j in 0..n {
            t.defect(&[i, j], scalar(pulled.get(i, j) - form.matrix.get(i, j)));
        }
    }
    t.finish()
}

/// Nondegeneracy, `ω(φu, φv) = ω(u, v)` and the 2-hom-cocycle identity
/// `ω([u,v], φw) + ω([w,u], φv) + ω([v,w], φu) = 0`.
pub fn check_symplectic(algebra: &HomLieAlgebra, omega: &BilinearForm) -> Result<CheckReport> {
    require_kind(omega, FormKind::Skew)?;
    let n = algebra.dim();
    require_size(n, omega.matrix())?;
    let phi = algebra.twist();
    let br = algebra.bracket();
    let mut report = CheckReport::new("symplectic structure");
    report.push(nondegenerate_flag(omega));
    report.push(invariance_tally("twist invariance", omega, phi));

    // Row k of `pairing` is ω(·, φe_k).
    let pairing = (omega.matrix() * phi).transpose();
    let mut cocycle = Tally::new("2-hom-cocycle");
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let s = pairing.row(k).dot(&br.basis_product(i, j))
                    + pairing.row(j).dot(&br.basis_product(k, i))
                    + pairing.row(i).dot(&br.basis_product(j, k));
                cocycle.defect(&[i, j, k], scalar(s));
            }
        }
    }
    report.push(cocycle.finish());
    Ok(report)
}

/// Nondegeneracy and `⟨φu, φv⟩ = ⟨u, v⟩`; when `φ² = Id` also
/// `⟨φu, v⟩ = ⟨u, φv⟩`.
pub fn check_metric(algebra: &HomLieAlgebra, metric: &BilinearForm) -> Result<CheckReport> {
    require_kind(metric, FormKind::Symmetric)?;
    let n = algebra.dim();
    require_size(n, metric.matrix())?;
    let phi = algebra.twist();
    let mut report = CheckReport::new("pseudo-Riemannian metric");
    report.push(nondegenerate_flag(metric));
    report.push(invariance_tally("twist compatibility", metric, phi));
    if algebra.is_involutive() {
        let left = &phi.transpose() * metric.matrix();
        let right = metric.matrix() * phi;
        let mut t = Tally::new("twist self-adjoint");
        for i in 0..n {
            for j in 0..n {
                t.defect(&[i, j], scalar(left.get(i, j) - right.get(i, j)));
            }
        }
        report.push(t.finish());
    }
    Ok(report)
}

/// Solves, for every basis pair, the linear system `M x = b` where row `k` of
/// `M` is `⟨·, φe_k⟩` (resp. `ω(·, φe_k)`) and `b` is supplied per pair.
fn solve_pairs(
    n: usize,
    system: &Matrix,
    mut rhs: impl FnMut(usize, usize, usize) -> Rational,
) -> Result<StructureTensor> {
    let inverse = system.inverse()?;
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let b = Vector::new((0..n).map(|k| rhs(i, j, k)).collect());
            if b.is_zero() {
                continue;
            }
            let x = inverse.apply(&b);
            for (k, c) in x.into_entries().into_iter().enumerate() {
                if !c.is_zero() {
                    entries.push((i, j, k, c));
                }
            }
        }
    }
    StructureTensor::from_entries(n, entries)
}

/// The hom-Levi-Civita product, from Koszul's formula
/// `2⟨u·v, φw⟩ = ⟨[u,v], φw⟩ + ⟨[w,v], φu⟩ + ⟨[w,u], φv⟩`.
///
/// Fails with [`Error::Singular`] when the metric or the twist is degenerate.
pub fn levi_civita(algebra: &HomLieAlgebra, metric: &BilinearForm) -> Result<StructureTensor> {
    require_kind(metric, FormKind::Symmetric)?;
    let n = algebra.dim();
    require_size(n, metric.matrix())?;
    let phi = algebra.twist();
    let br = algebra.bracket();
    let pairing = &phi.transpose() * metric.matrix();
    let half = frac(1, 2);
    solve_pairs(n, &pairing, |i, j, k| {
        let s = pairing.row(k).dot(&br.basis_product(i, j))
            + pairing.row(i).dot(&br.basis_product(k, j))
            + pairing.row(j).dot(&br.basis_product(k, i));
        s * &half
    })
}

/// Post-hoc identities of a candidate Levi-Civita product: (SL)
/// `u·v - v·u = [u, v]` and (L2) `⟨u·v, φw⟩ = -⟨φv, u·w⟩`.
pub fn check_levi_civita(
    algebra: &HomLieAlgebra,
    metric: &BilinearForm,
    product: &StructureTensor,
) -> Result<CheckReport> {
    let n = algebra.dim();
    require_size(n, metric.matrix())?;
    if product.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: product.dim(),
        });
    }
    let phi = algebra.twist();
    let br = algebra.bracket();
    let mut report = CheckReport::new("Levi-Civita identities");
    let mut sl = Tally::new("torsion-free (SL)");
    for i in 0..n {
        for j in 0..n {
            let c = &product.basis_product(i, j) - &product.basis_product(j, i);
            sl.compare(&[i, j], &c, &br.basis_product(i, j));
        }
    }
    report.push(sl.finish());

    let pairing = &phi.transpose() * metric.matrix();
    let mut l2 = Tally::new("metric (L2)");
    for i in 0..n {
        for j in 0..n {
            let uv = product.basis_product(i, j);
            for k in 0..n {
                let s = pairing.row(k).dot(&uv) + pairing.row(j).dot(&product.basis_product(i, k));
                l2.defect(&[i, j, k], scalar(s));
            }
        }
    }
    report.push(l2.finish());
    Ok(report)
}

/// The hom-left-symmetric product `a` of an involutive symplectic hom-Lie
/// algebra, defined by `ω(a(u, v), φw) = -ω(φv, [u, w])`.
///
/// Requires the hom-Lie axioms, the symplectic checks and `φ² = Id`; the
/// failing report is attached to the error otherwise.
pub fn symplectic_product(algebra: &HomLieAlgebra, omega: &BilinearForm) -> Result<StructureTensor> {
    Error::require("hom-Lie algebra", check_hom_lie(algebra.bracket(), algebra.twist()))?;
    let mut pre = check_symplectic(algebra, omega)?;
    pre.push(flag("involutive", algebra.is_involutive(), None));
    Error::require("involutive symplectic structure", pre)?;

    let n = algebra.dim();
    let phi = algebra.twist();
    let br = algebra.bracket();
    let system = (omega.matrix() * phi).transpose();
    let phi_cols: Vec<Vector> = (0..n).map(|j| phi.column(j)).collect();
    solve_pairs(n, &system, |i, j, k| -omega.eval(&phi_cols[j], &br.basis_product(i, k)))
}

/// The defining identity of `a` on all basis triples and
/// `a(u, v) - a(v, u) = [u, v]` on all pairs.
pub fn check_symplectic_product(
    algebra: &HomLieAlgebra,
    omega: &BilinearForm,
    product: &StructureTensor,
) -> Result<CheckReport> {
    let n = algebra.dim();
    require_size(n, omega.matrix())?;
    let phi = algebra.twist();
    let br = algebra.bracket();
    let phi_cols: Vec<Vector> = (0..n).map(|j| phi.column(j)).collect();
    let mut report = CheckReport::new("symplectic left-symmetric product");
    let mut def = Tally::new("defining identity");
    for i in 0..n {
        for j in 0..n {
            let a = product.basis_product(i, j);
            for k in 0..n {
                let s = omega.eval(&a, &phi_cols[k]) + omega.eval(&phi_cols[j], &br.basis_product(i, k));
                def.defect(&[i, j, k], scalar(s));
            }
        }
    }
    report.push(def.finish());
    let mut comm = Tally::new("commutator is the bracket");
    for i in 0..n {
        for j in 0..n {
            let c = &product.basis_product(i, j) - &product.basis_product(j, i);
            comm.compare(&[i, j], &c, &br.basis_product(i, j));
        }
    }
    report.push(comm.finish());
    Ok(report)
}
