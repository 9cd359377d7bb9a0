//! Representations of hom-Lie algebras, their duals and the semidirect
//! hom-Lie structure on `g ⊕ g*`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Vector};
use crate::homalg::{HomLieAlgebra, StructureTensor};
use crate::report::{info, CheckReport, Tally};

/// `(V, A, ρ)`: `rho[i]` is the `m × m` matrix of `ρ(e_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: HomLieAlgebra,
    endo: Matrix,
    rho: Vec<Matrix>,
}

impl Representation {
    pub fn new(algebra: HomLieAlgebra, endo: Matrix, rho: Vec<Matrix>) -> Result<Self> {
        if rho.len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                found: rho.len(),
            });
        }
        let m = endo.rows();
        if endo.cols() != m {
            return Err(Error::NotSquare {
                rows: m,
                cols: endo.cols(),
            });
        }
        for r in &rho {
            if r.rows() != m || r.cols() != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    found: if r.rows() != m { r.rows() } else { r.cols() },
                });
            }
        }
        Ok(Representation { algebra, endo, rho })
    }

    pub fn algebra(&self) -> &HomLieAlgebra {
        &self.algebra
    }

    pub fn space_dim(&self) -> usize {
        self.endo.rows()
    }

    /// The endomorphism `A` of the representation space.
    pub fn endo(&self) -> &Matrix {
        &self.endo
    }

    pub fn rho(&self) -> &[Matrix] {
        &self.rho
    }

    /// `ρ(u) = Σ u_i ρ(e_i)`.
    pub fn rho_of(&self, u: &Vector) -> Matrix {
        let m = self.space_dim();
        let mut out = Matrix::zeros(m, m);
        for (c, r) in u.entries().iter().zip(&self.rho) {
            if !c.is_zero() {
                out = &out + &r.scale(c);
            }
        }
        out
    }
}

fn compare_matrices(t: &mut Tally, prefix: &[usize], lhs: &Matrix, rhs: &Matrix) {
    for col in 0..lhs.cols() {
        let mut idx = prefix.to_vec();
        idx.push(col);
        t.compare(&idx, &lhs.column(col), &rhs.column(col));
    }
}

/// `ρ(φu)∘A = A∘ρ(u)` and `ρ([u,v])∘A = ρ(φu)∘ρ(v) - ρ(φv)∘ρ(u)` on basis
/// elements; the last witness index is the column of the matrix defect.
pub fn check_representation(rep: &Representation) -> CheckReport {
    let n = rep.algebra.dim();
    let a = &rep.endo;
    let phi = rep.algebra.twist();
    let rho_phi: Vec<Matrix> = (0..n).map(|i| rep.rho_of(&phi.column(i))).collect();
    let mut report = CheckReport::new("representation");

    let mut first = Tally::new("ρ(φu)A = Aρ(u)");
    for i in 0..n {
        compare_matrices(&mut first, &[i], &(&rho_phi[i] * a), &(a * &rep.rho[i]));
    }
    report.push(first.finish());

    let mut second = Tally::new("ρ([u,v])A = ρ(φu)ρ(v) - ρ(φv)ρ(u)");
    for i in 0..n {
        for j in 0..n {
            let lhs = &rep.rho_of(&rep.algebra.bracket().basis_product(i, j)) * a;
            let rhs = &(&rho_phi[i] * &rep.rho[j]) - &(&rho_phi[j] * &rep.rho[i]);
            compare_matrices(&mut second, &[i, j], &lhs, &rhs);
        }
    }
    report.push(second.finish());
    report
}

/// `A∘ρ(φu) = ρ(u)∘A` and `A∘ρ([u,v]) = ρ(u)∘ρ(φv) - ρ(v)∘ρ(φu)`, i.e. the
/// dual `(V*, Aᵀ, -ρᵀ)` is again a representation. Fails with
/// [`Error::PreconditionFailed`] when `rep` is not a representation.
pub fn check_admissible(rep: &Representation) -> Result<CheckReport> {
    Error::require("representation", check_representation(rep))?;
    let n = rep.algebra.dim();
    let a = &rep.endo;
    let phi = rep.algebra.twist();
    let rho_phi: Vec<Matrix> = (0..n).map(|i| rep.rho_of(&phi.column(i))).collect();
    let mut report = CheckReport::new("admissible representation");

    let mut first = Tally::new("Aρ(φu) = ρ(u)A");
    for i in 0..n {
        compare_matrices(&mut first, &[i], &(a * &rho_phi[i]), &(&rep.rho[i] * a));
    }
    report.push(first.finish());

    let mut second = Tally::new("Aρ([u,v]) = ρ(u)ρ(φv) - ρ(v)ρ(φu)");
    for i in 0..n {
        for j in 0..n {
            let lhs = a * &rep.rho_of(&rep.algebra.bracket().basis_product(i, j));
            let rhs = &(&rep.rho[i] * &rho_phi[j]) - &(&rep.rho[j] * &rho_phi[i]);
            compare_matrices(&mut second, &[i, j], &lhs, &rhs);
        }
    }
    report.push(second.finish());

    let is_adjoint = rep.endo == *phi && rep.rho == adjoint_rep(&rep.algebra).rho;
    report.push(info(
        "adjoint of an involutive algebra",
        is_adjoint && rep.algebra.is_involutive(),
        None,
    ));
    report.push(info(
        "dual is a representation",
        check_representation(&dual_rep(rep)).passed(),
        None,
    ));
    Ok(report)
}

/// `(g, φ, ad)` with `ad(u)v = [u, v]`.
pub fn adjoint_rep(algebra: &HomLieAlgebra) -> Representation {
    let n = algebra.dim();
    let rho = (0..n).map(|i| algebra.bracket().left(&Vector::unit(n, i))).collect();
    Representation {
        algebra: algebra.clone(),
        endo: algebra.twist().clone(),
        rho,
    }
}

/// `(V*, Aᵀ, ρ̃)` with `ρ̃(u) = -ρ(u)ᵀ`.
pub fn dual_rep(rep: &Representation) -> Representation {
    Representation {
        algebra: rep.algebra.clone(),
        endo: rep.endo.transpose(),
        rho: rep.rho.iter().map(|r| -&r.transpose()).collect(),
    }
}

/// The hom-Lie algebra on `g ⊕ g*` with
/// `[u + α, v + β] = [u, v] + ρ̃(u)β - ρ̃(v)α` and `Φ = φ ⊕ Aᵀ`.
/// Basis order: `e_1..e_n` then the dual basis.
pub fn semidirect_double(rep: &Representation) -> Result<HomLieAlgebra> {
    let n = rep.algebra.dim();
    if rep.space_dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: rep.space_dim(),
        });
    }
    Error::require("admissible representation", check_admissible(rep)?)?;
    let dual = dual_rep(rep);
    let br = rep.algebra.bracket();
    let mut entries = Vec::new();
    for (i, j, k, c) in br.nonzero_entries() {
        entries.push((i, j, k, c));
    }
    for (i, r) in dual.rho.iter().enumerate() {
        for b in 0..n {
            for k in 0..n {
                let c = r.get(k, b);
                if !c.is_zero() {
                    entries.push((i, n + b, n + k, c.clone()));
                    entries.push((n + b, i, n + k, -c.clone()));
                }
            }
        }
    }
    let bracket = StructureTensor::from_entries(2 * n, entries)?;
    let twist = Matrix::block_diagonal(rep.algebra.twist(), &dual.endo);
    HomLieAlgebra::new(bracket, twist)
}
