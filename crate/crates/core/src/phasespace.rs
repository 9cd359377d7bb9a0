//! Phase spaces `T*V = V ⊕ V*`: the extension of two involutive
//! hom-left-symmetric products to `V ⊕ V*`, the operators `ρ` and `ρ*`
//! governing its curvature, the canonical symplectic, metric and product
//! structures, and the converse extraction from a para-Kähler hom-Lie
//! algebra.
//!
//! Coordinates on `V ⊕ V*` list the basis of `V` first and then the dual
//! basis; the pairing `⟨α, v⟩` is the coordinate dot product. For `x ∈ V`,
//! `Lᵗ_x` is the transpose of the left multiplication matrix of `V`, acting
//! on `V*`; for `γ ∈ V*`, `Lᵗ_γ` is the transpose of the left multiplication
//! matrix of `V*`, acting on `V`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Vector};
use crate::geometry::{check_metric, check_symplectic, levi_civita, symplectic_product, BilinearForm};
use crate::homalg::{
    check_hom_lie, check_left_symmetric, commutator, curvature_of, restrict_map, HomAlgebra, HomLieAlgebra,
    StructureTensor,
};
use crate::parakahler::{check_almost_product, check_para_hermitian, check_para_kahler, eigensplit, ProductStructure};
use crate::report::{flag, info, CheckReport, Tally};

/// `V ⊕ V*` with the extended product, twist `Φ = φ ⊕ φᵀ`, the canonical
/// forms and product structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseSpaceBundle {
    v: HomAlgebra,
    vstar: HomAlgebra,
    total: HomAlgebra,
    omega: BilinearForm,
    metric: BilinearForm,
    structure: ProductStructure,
    frame: Matrix,
    identification: Matrix,
}

/// The matrix of `ρ(u, α)` on `V` or of `ρ*(α, u)` on `V*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualizedOperator {
    pub matrix: Matrix,
}

impl PhaseSpaceBundle {
    /// `n = dim V`; the total space has dimension `2n`.
    pub fn half_dim(&self) -> usize {
        self.v.dim()
    }

    pub fn v(&self) -> &HomAlgebra {
        &self.v
    }

    pub fn vstar(&self) -> &HomAlgebra {
        &self.vstar
    }

    pub fn total(&self) -> &HomAlgebra {
        &self.total
    }

    pub fn omega(&self) -> &BilinearForm {
        &self.omega
    }

    pub fn metric(&self) -> &BilinearForm {
        &self.metric
    }

    pub fn structure(&self) -> &ProductStructure {
        &self.structure
    }

    /// Columns are the split basis vectors written in the coordinates the
    /// bundle came from: the identity for [`extend_product`], the basis
    /// `g¹ ⊕ (g¹)*` of the original algebra for [`extract_phase_space`].
    pub fn frame(&self) -> &Matrix {
        &self.frame
    }

    /// Column `j` holds the functional `⟨d_j, ·⟩` on `V` in dual coordinates,
    /// where `d_j` is the `j`-th basis vector of the space identified with
    /// `V*`. The identity for [`extend_product`].
    pub fn identification(&self) -> &Matrix {
        &self.identification
    }

    /// The commutator of the extended product.
    pub fn bracket(&self) -> HomLieAlgebra {
        commutator(&self.total)
    }

    fn v_left(&self, u: &Vector) -> Matrix {
        self.v.product().left(u)
    }

    fn vstar_left(&self, alpha: &Vector) -> Matrix {
        self.vstar.product().left(alpha)
    }

    /// `ρ(u, α) = -L_{φu} Lᵗ_{φ*α} + Lᵗ_α L_u - φ Lᵗ_{Lᵗ_{φu} α} - L_{Lᵗ_{φ*α} u} φ`
    /// as an endomorphism of `V`.
    pub fn rho(&self, u: &Vector, alpha: &Vector) -> Matrix {
        let phi = self.v.twist();
        let phis = self.vstar.twist();
        let phi_u = phi.apply(u);
        let phis_alpha = phis.apply(alpha);
        let l_phi_u = self.v_left(&phi_u);
        let lt_phis_alpha = self.vstar_left(&phis_alpha).transpose();
        let t1 = &l_phi_u * &lt_phis_alpha;
        let t2 = &self.vstar_left(alpha).transpose() * &self.v_left(u);
        let t3 = phi * &self.vstar_left(&l_phi_u.transpose().apply(alpha)).transpose();
        let t4 = &self.v_left(&lt_phis_alpha.apply(u)) * phi;
        &(&(&t2 - &t1) - &t3) - &t4
    }

    /// `ρ*(α, u) = -L_{φ*α} Lᵗ_{φu} + Lᵗ_u L_α - φ* Lᵗ_{Lᵗ_{φ*α} u} - L_{Lᵗ_{φu} α} φ*`
    /// as an endomorphism of `V*`.
    pub fn rho_star(&self, alpha: &Vector, u: &Vector) -> Matrix {
        let phi = self.v.twist();
        let phis = self.vstar.twist();
        let phi_u = phi.apply(u);
        let phis_alpha = phis.apply(alpha);
        let l_phis_alpha = self.vstar_left(&phis_alpha);
        let lt_phi_u = self.v_left(&phi_u).transpose();
        let t1 = &l_phis_alpha * &lt_phi_u;
        let t2 = &self.v_left(u).transpose() * &self.vstar_left(alpha);
        let t3 = phis * &self.v_left(&l_phis_alpha.transpose().apply(u)).transpose();
        let t4 = &self.vstar_left(&lt_phi_u.apply(alpha)) * phis;
        &(&(&t2 - &t1) - &t3) - &t4
    }

    fn embed_v(&self, v: &Vector) -> Vector {
        v.concat(&Vector::zeros(self.half_dim()))
    }

    fn embed_vstar(&self, alpha: &Vector) -> Vector {
        Vector::zeros(self.half_dim()).concat(alpha)
    }
}

fn require_dims(v: &HomAlgebra, vstar: &HomAlgebra) -> Result<()> {
    if v.dim() != vstar.dim() {
        return Err(Error::DimensionMismatch {
            expected: v.dim(),
            found: vstar.dim(),
        });
    }
    Ok(())
}

/// Product (N1) on `V ⊕ V*`:
/// `(u + α)·(v + β) = u·v - Lᵗ_{φ*α} v - Lᵗ_{φu} β + α·β`, where `φ*` is the
/// twist of `vstar`.
fn extended_product(v: &HomAlgebra, vstar: &HomAlgebra) -> Result<StructureTensor> {
    let n = v.dim();
    let mut entries = Vec::new();
    for (i, j, k, c) in v.product().nonzero_entries() {
        entries.push((i, j, k, c));
    }
    for (a, b, k, c) in vstar.product().nonzero_entries() {
        entries.push((n + a, n + b, n + k, c));
    }
    for i in 0..n {
        let l = v.product().left(&v.twist().column(i));
        for b in 0..n {
            for k in 0..n {
                let c = l.get(b, k);
                if !c.is_zero() {
                    entries.push((i, n + b, n + k, -c.clone()));
                }
            }
        }
    }
    for a in 0..n {
        let l = vstar.product().left(&vstar.twist().column(a));
        for j in 0..n {
            for k in 0..n {
                let c = l.get(j, k);
                if !c.is_zero() {
                    entries.push((n + a, j, k, -c.clone()));
                }
            }
        }
    }
    StructureTensor::from_entries(2 * n, entries)
}

fn canonical_pieces(phi: &Matrix) -> (BilinearForm, BilinearForm, ProductStructure) {
    let n = phi.rows();
    let id = Matrix::identity(n);
    let zero = Matrix::zeros(n, n);
    let top = zero.hstack(&id);
    let omega_rows: Vec<_> = top
        .to_rows()
        .into_iter()
        .chain((-&id).hstack(&zero).to_rows())
        .collect();
    let metric_rows: Vec<_> = top.to_rows().into_iter().chain(id.hstack(&zero).to_rows()).collect();
    let omega = BilinearForm::skew(Matrix::from_rows(omega_rows).expect("rectangular")).expect("skew block form");
    let metric =
        BilinearForm::symmetric(Matrix::from_rows(metric_rows).expect("rectangular")).expect("symmetric block form");
    let k = Matrix::block_diagonal(phi, &-&phi.transpose());
    (omega, metric, ProductStructure::new(k))
}

/// Builds `T*V` from two involutive hom-left-symmetric algebras on `V` and
/// `V*` whose twists are mutually transpose.
pub fn extend_product(v: &HomAlgebra, vstar: &HomAlgebra) -> Result<PhaseSpaceBundle> {
    require_dims(v, vstar)?;
    let mut pre = CheckReport::new("phase space inputs");
    pre.absorb("V ", check_left_symmetric(v));
    pre.absorb("V* ", check_left_symmetric(vstar));
    for c in pre.checks.iter_mut() {
        if c.name.ends_with("hom-associative") {
            c.informational = true;
        }
    }
    pre.push(flag("V twist involutive", v.is_involutive(), None));
    pre.push(flag("V* twist involutive", vstar.is_involutive(), None));
    pre.push(flag(
        "V* twist is the transpose of V twist",
        *vstar.twist() == v.twist().transpose(),
        None,
    ));
    Error::require("involutive hom-left-symmetric pair", pre)?;

    let product = extended_product(v, vstar)?;
    let twist = Matrix::block_diagonal(v.twist(), vstar.twist());
    let total = HomAlgebra::new(product, twist)?;
    let (omega, metric, structure) = canonical_pieces(v.twist());
    let n = v.dim();
    Ok(PhaseSpaceBundle {
        v: v.clone(),
        vstar: vstar.clone(),
        total,
        omega,
        metric,
        structure,
        frame: Matrix::identity(2 * n),
        identification: Matrix::identity(n),
    })
}

/// Hom-algebra facts about the extension: `Φ` is a product morphism,
/// `Φ² = Id`, the pairing identities `⟨u·α, φv⟩ = -⟨u·v, φ*α⟩` and
/// `⟨α·u, φ*β⟩ = -⟨α·β, φu⟩`, and the closed form of the commutator
/// `[u+α, v+β] = [u,v] - Lᵗ_{φ*α}v + Lᵗ_{φ*β}u - Lᵗ_{φu}β + Lᵗ_{φv}α + [α,β]`.
pub fn check_extension(bundle: &PhaseSpaceBundle) -> CheckReport {
    let n = bundle.half_dim();
    let total = &bundle.total;
    let big = total.twist();
    let p = total.product();
    let phi = bundle.v.twist();
    let phis = bundle.vstar.twist();
    let mut report = CheckReport::new("extended hom-algebra");

    let mut morphism = Tally::new("twist is a product morphism");
    for i in 0..2 * n {
        for j in 0..2 * n {
            morphism.compare(
                &[i, j],
                &big.apply(&p.basis_product(i, j)),
                &p.apply(&big.column(i), &big.column(j)),
            );
        }
    }
    report.push(morphism.finish());
    report.push(flag("twist involutive", total.is_involutive(), None));

    let mut left = Tally::new("pairing ⟨u·α, φv⟩ = -⟨u·v, φ*α⟩");
    let mut right = Tally::new("pairing ⟨α·u, φ*β⟩ = -⟨α·β, φu⟩");
    for i in 0..n {
        let u = Vector::unit(n, i);
        for a in 0..n {
            let alpha = Vector::unit(n, a);
            let u_alpha = p.basis_product(i, n + a).slice(n, n);
            for j in 0..n {
                let v = Vector::unit(n, j);
                let uv = bundle.v.mul(&u, &v);
                let s = u_alpha.dot(&phi.apply(&v)) + uv.dot(&phis.apply(&alpha));
                left.defect(&[i, n + a, j], Vector::new(vec![s]));
            }
            let alpha_u = p.basis_product(n + a, i).slice(0, n);
            for b in 0..n {
                let beta = Vector::unit(n, b);
                let ab = bundle.vstar.mul(&alpha, &beta);
                let s = alpha_u.dot(&phis.apply(&beta)) + ab.dot(&phi.apply(&u));
                right.defect(&[n + a, i, n + b], Vector::new(vec![s]));
            }
        }
    }
    report.push(left.finish());
    report.push(right.finish());

    let bracket = bundle.bracket();
    let vb = bundle.v.product().commutator();
    let wb = bundle.vstar.product().commutator();
    let mut closed = Tally::new("commutator closed form");
    for x in 0..2 * n {
        for y in 0..2 * n {
            let (u, alpha) = split(&Vector::unit(2 * n, x), n);
            let (v, beta) = split(&Vector::unit(2 * n, y), n);
            let lt_v = |z: &Vector| bundle.v_left(z).transpose();
            let lt_w = |z: &Vector| bundle.vstar_left(z).transpose();
            let vpart =
                &(&vb.apply(&u, &v) - &lt_w(&phis.apply(&alpha)).apply(&v)) + &lt_w(&phis.apply(&beta)).apply(&u);
            let wpart =
                &(&wb.apply(&alpha, &beta) - &lt_v(&phi.apply(&u)).apply(&beta)) + &lt_v(&phi.apply(&v)).apply(&alpha);
            closed.compare(&[x, y], &bracket.bracket().basis_product(x, y), &vpart.concat(&wpart));
        }
    }
    report.push(closed.finish());
    report
}

fn split(x: &Vector, n: usize) -> (Vector, Vector) {
    (x.slice(0, n), x.slice(n, n))
}

/// `ρ(e_i, ε_a)` on `V` and `ρ*(ε_a, e_i)` on `V*`.
pub fn rho_pair(bundle: &PhaseSpaceBundle, i: usize, a: usize) -> Result<(DualizedOperator, DualizedOperator)> {
    let n = bundle.half_dim();
    for index in [i, a] {
        if index >= n {
            return Err(Error::IndexOutOfRange { index, dim: n });
        }
    }
    let u = Vector::unit(n, i);
    let alpha = Vector::unit(n, a);
    Ok((
        DualizedOperator {
            matrix: bundle.rho(&u, &alpha),
        },
        DualizedOperator {
            matrix: bundle.rho_star(&alpha, &u),
        },
    ))
}

/// The six curvature identities of the extended product, on every basis
/// tuple: `𝒦` vanishes on `(V,V)` and `(V*,V*)` pairs, and on mixed pairs
/// `𝒦(u,α)v = ρ(u,α)v`, `𝒦(α,u)β = ρ*(α,u)β`. Witness indices are positions
/// in `V ⊕ V*`.
pub fn curvature_profile(bundle: &PhaseSpaceBundle) -> CheckReport {
    let n = bundle.half_dim();
    let total = &bundle.total;
    let e = |x: usize| Vector::unit(2 * n, x);
    let k = |x: usize, y: usize, z: usize| curvature_of(total, &e(x), &e(y), &e(z));
    let mut report = CheckReport::new("curvature of the extended product");

    let mut vvv = Tally::new("𝒦(u,v)w = 0");
    let mut vva = Tally::new("𝒦(u,v)α = 0");
    let mut aav = Tally::new("𝒦(α,β)w = 0");
    let mut aaa = Tally::new("𝒦(α,β)γ = 0");
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                vvv.defect(&[x, y, z], k(x, y, z));
                vva.defect(&[x, y, n + z], k(x, y, n + z));
                aav.defect(&[n + x, n + y, z], k(n + x, n + y, z));
                aaa.defect(&[n + x, n + y, n + z], k(n + x, n + y, n + z));
            }
        }
    }

    let mut mixed = Tally::new("𝒦(u,α)v = ρ(u,α)v");
    let mut mixed_star = Tally::new("𝒦(α,u)β = ρ*(α,u)β");
    for i in 0..n {
        for a in 0..n {
            let (rho, rho_star) = rho_pair(bundle, i, a).expect("indices in range");
            for j in 0..n {
                mixed.compare(&[i, n + a, j], &k(i, n + a, j), &bundle.embed_v(&rho.matrix.column(j)));
                mixed_star.compare(
                    &[n + a, i, n + j],
                    &k(n + a, i, n + j),
                    &bundle.embed_vstar(&rho_star.matrix.column(j)),
                );
            }
        }
    }
    for t in [vvv, vva, aav, aaa, mixed, mixed_star] {
        report.push(t.finish());
    }
    report
}

/// The symmetry conditions `ρ(u,α)v = ρ(v,α)u` and `ρ*(α,u)β = ρ*(β,u)α`,
/// cross-checked against a direct hom-Jacobi check of the commutator, and
/// the vanishing of `ρ`, `ρ*` cross-checked against a direct left-symmetry
/// check of the extended product.
pub fn check_admissible_extension(bundle: &PhaseSpaceBundle) -> CheckReport {
    let n = bundle.half_dim();
    let mut report = CheckReport::new("admissible extension");
    let rho: Vec<Vec<Matrix>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|a| bundle.rho(&Vector::unit(n, i), &Vector::unit(n, a)))
                .collect()
        })
        .collect();
    let rho_star: Vec<Vec<Matrix>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|i| bundle.rho_star(&Vector::unit(n, a), &Vector::unit(n, i)))
                .collect()
        })
        .collect();

    let mut sym = Tally::new("ρ(u,α)v = ρ(v,α)u");
    let mut sym_star = Tally::new("ρ*(α,u)β = ρ*(β,u)α");
    let mut vanish = Tally::new("ρ and ρ* vanish").informational();
    for i in 0..n {
        for j in 0..n {
            for a in 0..n {
                sym.compare(&[i, j, n + a], &rho[i][a].column(j), &rho[j][a].column(i));
                sym_star.compare(&[n + i, j, n + a], &rho_star[i][j].column(a), &rho_star[a][j].column(i));
            }
        }
    }
    for i in 0..n {
        for a in 0..n {
            for j in 0..n {
                vanish.defect(&[i, n + a, j], bundle.embed_v(&rho[i][a].column(j)));
                vanish.defect(&[n + a, i, n + j], bundle.embed_vstar(&rho_star[a][i].column(j)));
            }
        }
    }
    let sym = sym.finish();
    let sym_star = sym_star.finish();
    let symmetric = sym.passed && sym_star.passed;
    report.push(sym);
    report.push(sym_star);

    let bracket = bundle.bracket();
    let jacobi = check_hom_lie(bracket.bracket(), bracket.twist()).passed();
    report.push(info("commutator is hom-Lie", jacobi, None));
    report.push(flag(
        "symmetry conditions agree with hom-Jacobi",
        symmetric == jacobi,
        None,
    ));

    let vanish = vanish.finish();
    let zero = vanish.passed;
    report.push(vanish);
    let left_symmetric = check_left_symmetric(&bundle.total).verdict("left-symmetry");
    report.push(info("extended product is hom-left-symmetric", left_symmetric, None));
    report.push(flag(
        "vanishing ρ agrees with left-symmetry",
        zero == left_symmetric,
        None,
    ));
    report
}

/// The full para-Kähler certificate of the canonical structures on a bundle
/// whose commutator is hom-Lie: `Ω` symplectic, the metric compatible, `K`
/// an almost product structure with `ΦK(u + α) = u - α`, the extended
/// product equal to the Levi-Civita product, and the para-Hermitian and
/// para-Kähler checks.
pub fn canonical_forms(bundle: &PhaseSpaceBundle) -> Result<CheckReport> {
    let lie = bundle.bracket();
    Error::require("hom-Lie extension", check_hom_lie(lie.bracket(), lie.twist()))?;
    let n = bundle.half_dim();
    let mut report = CheckReport::new("phase space certificate");

    let mut subalgebras = Tally::new("V and V* are subalgebras");
    for x in 0..2 * n {
        for y in 0..2 * n {
            if (x < n) != (y < n) {
                continue;
            }
            let w = lie.bracket().basis_product(x, y);
            let (wv, wa) = split(&w, n);
            let stray = if x < n { wa } else { wv };
            subalgebras.defect(&[x, y], stray);
        }
    }
    report.push(subalgebras.finish());

    report.absorb("Ω ", check_symplectic(&lie, &bundle.omega)?);
    report.absorb("metric ", check_metric(&lie, &bundle.metric)?);
    report.absorb("", check_almost_product(&lie, &bundle.structure));

    let s = bundle.structure.compose(lie.twist());
    let expected = Matrix::block_diagonal(&Matrix::identity(n), &-&Matrix::identity(n));
    let mut sk = Tally::new("ΦK(u + α) = u - α");
    for j in 0..2 * n {
        sk.compare(&[j], &s.column(j), &expected.column(j));
    }
    report.push(sk.finish());

    if !report.passed() {
        return Ok(report);
    }
    let lc = levi_civita(&lie, &bundle.metric)?;
    let mut same = Tally::new("extended product is the Levi-Civita product");
    for x in 0..2 * n {
        for y in 0..2 * n {
            same.compare(
                &[x, y],
                &bundle.total.product().basis_product(x, y),
                &lc.basis_product(x, y),
            );
        }
    }
    report.push(same.finish());
    report.absorb("", check_para_hermitian(&lie, &bundle.metric, &bundle.structure)?);
    report.absorb("", check_para_kahler(&lie, &bundle.metric, &bundle.structure)?);
    Ok(report)
}

/// Result of [`extract_phase_space`]: the bundle in the split basis and the
/// certificate that the transported data has the phase-space form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extraction {
    pub bundle: PhaseSpaceBundle,
    pub certificate: CheckReport,
}

/// Realizes a para-Kähler hom-Lie algebra as a phase space `T*g¹`.
///
/// `g⁻¹` is identified with `(g¹)*` through `ᾱ ↦ ⟨ᾱ, ·⟩`. In the basis of
/// `g¹` followed by the preimage of the dual basis, the Levi-Civita product
/// is certified against (N1) for `u·v`, `α·β`, `u·α = -Lᵗ_{φu}α` and
/// `α·u = -Lᵗ_{φ*α}u`, and the symplectic product `a` against
/// `a(u, α) = Rᵗ_{φ*α}u - adᵗ_{φu}α` and `a(α, u) = -adᵗ_{φ*α}u + Rᵗ_{φu}α`.
pub fn extract_phase_space(
    algebra: &HomLieAlgebra,
    metric: &BilinearForm,
    structure: &ProductStructure,
) -> Result<Extraction> {
    Error::require("para-Kähler structure", check_para_kahler(algebra, metric, structure)?)?;
    let split_spaces = eigensplit(algebra, structure)?;
    let plus = &split_spaces.plus;
    let minus = &split_spaces.minus;
    if plus.len() != minus.len() {
        return Err(Error::precondition("eigenspaces of different dimensions"));
    }
    let n = plus.len();
    let pairing = Matrix::from_fn(n, n, |i, j| metric.eval(&minus[j], &plus[i]));
    let inverse = pairing.inverse()?;
    let duals: Vec<Vector> = (0..n)
        .map(|a| {
            let mut acc = Vector::zeros(algebra.dim());
            for (j, d) in minus.iter().enumerate() {
                acc = &acc + &d.scale(inverse.get(j, a));
            }
            acc
        })
        .collect();
    let columns: Vec<Vector> = plus.iter().chain(duals.iter()).cloned().collect();
    let frame = Matrix::from_columns(algebra.dim(), &columns);

    let lc = levi_civita(algebra, metric)?;
    let moved = HomAlgebra::new(lc, algebra.twist().clone())?.change_basis(&frame)?;
    let moved_phi = moved.twist().clone();
    let phi1 = restrict_map(algebra.twist(), plus).ok_or_else(|| Error::precondition("g¹ not twist-stable"))?;
    let phi2 = moved_phi.block(n, n, n, n);
    let mut certificate = CheckReport::new("phase space extraction");
    certificate.push(flag(
        "twist is block diagonal",
        moved_phi.block(0, n, n, n).is_zero() && moved_phi.block(n, 0, n, n).is_zero(),
        None,
    ));
    let mut lemma = Tally::new("transported twist on (g¹)* is the transpose of φ|g¹");
    for j in 0..n {
        lemma.compare(&[n + j], &phi2.column(j), &phi1.transpose().column(j));
    }
    certificate.push(lemma.finish());

    let units = |offset: usize| -> Vec<Vector> { (0..n).map(|i| Vector::unit(2 * n, offset + i)).collect() };
    let restrict = |offset: usize| {
        moved
            .product()
            .restrict(&units(offset))
            .ok_or_else(|| Error::precondition("eigenspace not closed under the Levi-Civita product"))
    };
    let v = HomAlgebra::new(restrict(0)?, phi1.clone())?;
    let vstar = HomAlgebra::new(restrict(n)?, phi1.transpose())?;
    let bundle = extend_product(&v, &vstar)?;

    let mut formulas = [
        Tally::new("u·v"),
        Tally::new("α·β"),
        Tally::new("u·α = -Lᵗ_{φu}α"),
        Tally::new("α·u = -Lᵗ_{φ*α}u"),
    ];
    for x in 0..2 * n {
        for y in 0..2 * n {
            let slot = match (x < n, y < n) {
                (true, true) => 0,
                (false, false) => 1,
                (true, false) => 2,
                (false, true) => 3,
            };
            formulas[slot].compare(
                &[x, y],
                &moved.product().basis_product(x, y),
                &bundle.total.product().basis_product(x, y),
            );
        }
    }
    for t in formulas {
        certificate.push(t.finish());
    }

    let omega = BilinearForm::skew(&structure.compose(algebra.twist()).transpose() * metric.matrix())?;
    let a = symplectic_product(algebra, &omega)?.change_basis(&frame)?;
    let phi = v.twist();
    let phis = vstar.twist();
    let right_v = |z: &Vector| v.product().right(z);
    let right_w = |z: &Vector| vstar.product().right(z);
    let ad_v = |z: &Vector| v.product().commutator().left(z);
    let ad_w = |z: &Vector| vstar.product().commutator().left(z);
    let mut a_ua = Tally::new("a(u,α) = Rᵗ_{φ*α}u - adᵗ_{φu}α");
    let mut a_au = Tally::new("a(α,u) = -adᵗ_{φ*α}u + Rᵗ_{φu}α");
    for i in 0..n {
        let u = Vector::unit(n, i);
        for b in 0..n {
            let alpha = Vector::unit(n, b);
            let expect_ua = right_w(&phis.apply(&alpha))
                .transpose()
                .apply(&u)
                .concat(&-&ad_v(&phi.apply(&u)).transpose().apply(&alpha));
            a_ua.compare(&[i, n + b], &a.basis_product(i, n + b), &expect_ua);
            let expect_au = (-&ad_w(&phis.apply(&alpha)).transpose().apply(&u))
                .concat(&right_v(&phi.apply(&u)).transpose().apply(&alpha));
            a_au.compare(&[n + b, i], &a.basis_product(n + b, i), &expect_au);
        }
    }
    certificate.push(a_ua.finish());
    certificate.push(a_au.finish());

    let mut forms = Tally::new("transported metric is canonical");
    let moved_metric = metric.change_basis(&frame);
    for j in 0..2 * n {
        forms.compare(
            &[j],
            &moved_metric.matrix().column(j),
            &bundle.metric.matrix().column(j),
        );
    }
    certificate.push(forms.finish());
    let mut kk = Tally::new("transported K is canonical");
    let moved_k = &(&frame.inverse()? * structure.matrix()) * &frame;
    for j in 0..2 * n {
        kk.compare(&[j], &moved_k.column(j), &bundle.structure.matrix().column(j));
    }
    certificate.push(kk.finish());

    let bundle = PhaseSpaceBundle {
        frame,
        identification: pairing,
        ..bundle
    };
    Ok(Extraction { bundle, certificate })
}
