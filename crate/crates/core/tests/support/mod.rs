//! Seeded instance generators, independent oracles and the randomized
//! property suites shared by the integration tests and the acceptance runner.

#![allow(dead_code)]

use std::fmt::Write as _;

use homlie::geometry::{check_levi_civita, check_metric, levi_civita, BilinearForm};
use homlie::homalg::{hom_bianchi_defect, HomAlgebra, HomLieAlgebra, StructureTensor};
use homlie::phasespace::{extend_product, rho_pair};
use homlie::rep::{adjoint_rep, check_admissible, check_representation, dual_rep, Representation};
use homlie::{int, Matrix, Rational, Vector};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const INSTANCES: usize = 256;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn coeff(rng: &mut ChaCha8Rng) -> i64 {
    rng.gen_range(-2..=2)
}

pub fn nonzero_coeff(rng: &mut ChaCha8Rng) -> i64 {
    *[-2, -1, 1, 2].choose(rng).unwrap()
}

pub fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    Matrix::from_fn(n, n, |_, _| int(coeff(rng)))
}

pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let p = random_matrix(rng, n);
        if p.is_invertible() {
            return p;
        }
    }
}

pub fn random_tensor(rng: &mut ChaCha8Rng, n: usize) -> StructureTensor {
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                entries.push((i, j, k, coeff(rng)));
            }
        }
    }
    StructureTensor::from_i64(n, &entries).unwrap()
}

fn random_symmetric(rng: &mut ChaCha8Rng, n: usize, allowed: impl Fn(usize, usize) -> bool) -> Matrix {
    let mut m = Matrix::zeros(n, n).to_rows();
    for i in 0..n {
        for j in i..n {
            if allowed(i, j) {
                let c = int(coeff(rng));
                m[i][j] = c.clone();
                m[j][i] = c;
            }
        }
    }
    Matrix::from_rows(m).unwrap()
}

/// A hom-Lie algebra together with a symmetric form.
#[derive(Debug, Clone)]
pub struct MetricInstance {
    pub algebra: HomLieAlgebra,
    pub metric: BilinearForm,
    pub origin: &'static str,
}

type Constants = &'static [(usize, usize, usize, i64)];

const LIE_TEMPLATES: &[(usize, Constants)] = &[
    (2, &[]),
    (2, &[(0, 1, 0, 1)]),
    (3, &[(0, 1, 2, 1)]),
    (3, &[(0, 1, 2, 1), (2, 0, 0, 2), (2, 1, 1, -2)]),
    (3, &[(0, 1, 1, 1), (0, 2, 2, 1)]),
    (3, &[(0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1)]),
    (4, &[(0, 1, 0, 1), (2, 3, 2, 1)]),
    (4, &[(0, 1, 2, 1)]),
    (4, &[(0, 1, 1, 1), (0, 2, 2, 1), (0, 3, 3, 1)]),
    (4, &[(0, 1, 2, 1), (2, 0, 0, 2), (2, 1, 1, -2)]),
];

fn antisymmetric(n: usize, entries: &[(usize, usize, usize, i64)], scale: i64) -> StructureTensor {
    StructureTensor::antisymmetric_from_entries(n, entries.iter().map(|&(i, j, k, c)| (i, j, k, int(c * scale))))
        .unwrap()
}

/// A Lie algebra (twist the identity) in a random basis, with a random
/// symmetric form.
pub fn lie_instance(rng: &mut ChaCha8Rng) -> MetricInstance {
    let (n, entries) = *LIE_TEMPLATES.choose(rng).unwrap();
    let bracket = antisymmetric(n, entries, nonzero_coeff(rng));
    let p = random_invertible(rng, n);
    let algebra = HomLieAlgebra::new(bracket, Matrix::identity(n))
        .unwrap()
        .change_basis(&p)
        .unwrap();
    let metric = BilinearForm::symmetric(random_symmetric(rng, n, |_, _| true)).unwrap();
    MetricInstance {
        algebra,
        metric,
        origin: "lie",
    }
}

/// The four-dimensional split example with random nonzero parameters in a
/// random basis.
pub fn split_instance(rng: &mut ChaCha8Rng) -> MetricInstance {
    let (a, b, big_a) = (nonzero_coeff(rng), nonzero_coeff(rng), nonzero_coeff(rng));
    let data = homlie::catalog::split_example(int(a), int(b), int(big_a));
    let p = random_invertible(rng, 4);
    MetricInstance {
        algebra: data.algebra.change_basis(&p).unwrap(),
        metric: data.metric.change_basis(&p),
        origin: "split",
    }
}

/// Twist `diag(±1)`, a sparse random bracket respecting the grading and a
/// random form pairing only equal signs, in a random basis. Rejects until the
/// bracket satisfies hom-Jacobi.
pub fn graded_instance(rng: &mut ChaCha8Rng) -> MetricInstance {
    loop {
        let n = rng.gen_range(2..=4);
        let signs: Vec<i64> = (0..n).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
        let mut entries = Vec::new();
        for _ in 0..rng.gen_range(1..=3) {
            let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            if i != j && signs[i] * signs[j] == signs[k] {
                entries.push((i.min(j), i.max(j), k, nonzero_coeff(rng)));
            }
        }
        entries.sort();
        entries.dedup_by_key(|e| (e.0, e.1, e.2));
        let bracket = antisymmetric(n, &entries, 1);
        let Ok(algebra) = HomLieAlgebra::new(bracket, Matrix::diagonal_i64(&signs)) else {
            continue;
        };
        if !algebra.check().passed() {
            continue;
        }
        let metric = BilinearForm::symmetric(random_symmetric(rng, n, |i, j| signs[i] == signs[j])).unwrap();
        let p = random_invertible(rng, n);
        return MetricInstance {
            algebra: algebra.change_basis(&p).unwrap(),
            metric: metric.change_basis(&p),
            origin: "graded",
        };
    }
}

/// Draws from the three families, rejecting until `check_metric` passes.
pub fn metric_instance(rng: &mut ChaCha8Rng) -> MetricInstance {
    loop {
        let instance = match rng.gen_range(0..3) {
            0 => lie_instance(rng),
            1 => split_instance(rng),
            _ => graded_instance(rng),
        };
        if check_metric(&instance.algebra, &instance.metric).unwrap().passed() {
            return instance;
        }
    }
}

/// Dimension, structure constants and twist of a direct summand.
type Block = (usize, Vec<(usize, usize, usize, i64)>, Matrix);

/// Involutive hom-left-symmetric building blocks keyed by their twist.
fn block(rng: &mut ChaCha8Rng, kind: usize) -> Block {
    let c = coeff(rng);
    match kind {
        0 => (1, vec![(0, 0, 0, c)], Matrix::identity(1)),
        1 => (1, vec![], Matrix::diagonal_i64(&[-1])),
        2 => {
            if rng.gen_bool(0.5) {
                (2, vec![(0, 1, 0, c), (1, 1, 1, -c)], Matrix::diagonal_i64(&[-1, 1]))
            } else {
                (2, vec![(0, 0, 1, c)], Matrix::diagonal_i64(&[-1, 1]))
            }
        }
        // φ(x·y) for x·x = c x, y·y = c y and φ swapping x and y
        3 => (
            2,
            vec![(0, 0, 1, c), (1, 1, 0, c)],
            Matrix::from_i64(&[&[0, 1], &[1, 0]]),
        ),
        _ => {
            if rng.gen_bool(0.5) {
                (2, vec![(0, 0, 0, c), (0, 1, 1, c)], Matrix::identity(2))
            } else {
                (2, vec![(0, 0, 1, c)], Matrix::identity(2))
            }
        }
    }
}

fn assemble(blocks: &[Block]) -> HomAlgebra {
    let n: usize = blocks.iter().map(|b| b.0).sum();
    let mut entries = Vec::new();
    let mut twist = Matrix::zeros(0, 0);
    let mut offset = 0;
    for (dim, table, phi) in blocks {
        entries.extend(
            table
                .iter()
                .map(|&(i, j, k, c)| (i + offset, j + offset, k + offset, c)),
        );
        twist = Matrix::block_diagonal(&twist, phi);
        offset += dim;
    }
    HomAlgebra::new(StructureTensor::from_i64(n, &entries).unwrap(), twist).unwrap()
}

/// A pair `(V, V*)` of involutive hom-left-symmetric algebras of dimension
/// 2 to 4 with the twist of `V*` the transpose of the twist of `V`.
pub fn left_symmetric_pair(rng: &mut ChaCha8Rng) -> (HomAlgebra, HomAlgebra) {
    let target = rng.gen_range(2..=4);
    let mut kinds = Vec::new();
    let mut dim = 0;
    while dim < target {
        let kind = if target - dim == 1 {
            rng.gen_range(0..2)
        } else {
            rng.gen_range(0..5)
        };
        dim += if kind < 2 { 1 } else { 2 };
        kinds.push(kind);
    }
    let v = assemble(&kinds.iter().map(|&k| block(rng, k)).collect::<Vec<_>>());
    let w = assemble(&kinds.iter().map(|&k| block(rng, k)).collect::<Vec<_>>());
    let p = random_invertible(rng, dim);
    let q = p.inverse().unwrap().transpose();
    (v.change_basis(&p).unwrap(), w.change_basis(&q).unwrap())
}

/// Both cyclic sums of hom-Bianchi from the structure constants alone:
/// `Σ [φu,[v,w]]` and `Σ 𝒦(u,v)w`.
pub fn cyclic_sums(algebra: &HomAlgebra, i: usize, j: usize, k: usize) -> (Vec<Rational>, Vec<Rational>) {
    let n = algebra.dim();
    let c = |a: usize, b: usize, r: usize| algebra.product().get(a, b, r).clone();
    let phi = |r: usize, a: usize| algebra.twist().get(r, a).clone();
    let br = |a: &[Rational], b: &[Rational]| -> Vec<Rational> {
        let mut out = vec![Rational::zero(); n];
        for p in 0..n {
            for q in 0..n {
                let s = &a[p] * &b[q];
                if s.is_zero() {
                    continue;
                }
                for r in 0..n {
                    out[r] += &s * (c(p, q, r) - c(q, p, r));
                }
            }
        }
        out
    };
    let mul = |a: &[Rational], b: &[Rational]| -> Vec<Rational> {
        let mut out = vec![Rational::zero(); n];
        for p in 0..n {
            for q in 0..n {
                let s = &a[p] * &b[q];
                for r in 0..n {
                    out[r] += &s * c(p, q, r);
                }
            }
        }
        out
    };
    let tw = |a: &[Rational]| -> Vec<Rational> { (0..n).map(|r| (0..n).map(|q| phi(r, q) * &a[q]).sum()).collect() };
    let unit = |a: usize| -> Vec<Rational> { (0..n).map(|r| if r == a { int(1) } else { int(0) }).collect() };
    let curv = |u: &[Rational], v: &[Rational], w: &[Rational]| -> Vec<Rational> {
        let a = mul(&tw(u), &mul(v, w));
        let b = mul(&tw(v), &mul(u, w));
        let d = mul(&br(u, v), &tw(w));
        (0..n).map(|r| &a[r] - &b[r] - &d[r]).collect()
    };
    let mut left = vec![Rational::zero(); n];
    let mut right = vec![Rational::zero(); n];
    for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
        let (u, v, w) = (unit(x), unit(y), unit(z));
        let l = br(&tw(&u), &br(&v, &w));
        let r = curv(&u, &v, &w);
        for s in 0..n {
            left[s] += &l[s];
            right[s] += &r[s];
        }
    }
    (left, right)
}

/// Levi-Civita coefficients from the explicit formula
/// `Γ_ij^l = ½ ⟨e^k,e^m⟩ φ̃^l_m {c_ij^r φ_k^s g_rs + c_kj^r φ_i^s g_rs + c_ki^r φ_j^s g_rs}`
/// with `φ(e_i) = φ_i^k e_k` and `φ̃` the inverse twist.
pub fn closed_form_gamma(algebra: &HomLieAlgebra, metric: &BilinearForm) -> Vec<Vec<Vec<Rational>>> {
    let n = algebra.dim();
    let g = metric.matrix();
    let g_inv = g.inverse().unwrap();
    let phi_inv = algebra.twist().inverse().unwrap();
    let c = |i: usize, j: usize, r: usize| algebra.bracket().get(i, j, r).clone();
    let phi = |i: usize, s: usize| algebra.twist().get(s, i).clone();
    let phi_tilde = |m: usize, l: usize| phi_inv.get(l, m).clone();
    let term = |i: usize, j: usize, k: usize| -> Rational {
        let mut s = Rational::zero();
        for r in 0..n {
            for t in 0..n {
                s += c(i, j, r) * phi(k, t) * g.get(r, t);
            }
        }
        s
    };
    let half = Rational::new(1.into(), 2.into());
    let mut gamma = vec![vec![vec![Rational::zero(); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let mut s = Rational::zero();
                for k in 0..n {
                    let braces = term(i, j, k) + term(k, j, i) + term(k, i, j);
                    if braces.is_zero() {
                        continue;
                    }
                    for m in 0..n {
                        s += g_inv.get(k, m) * phi_tilde(m, l) * &braces;
                    }
                }
                gamma[i][j][l] = s * &half;
            }
        }
    }
    gamma
}

/// Outcome of a randomized suite.
#[derive(Debug, Default)]
pub struct Suite {
    pub instances: usize,
    pub failures: Vec<String>,
}

impl Suite {
    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.instances >= 200
    }

    fn fail(&mut self, message: String) {
        if self.failures.len() < 5 {
            self.failures.push(message);
        }
    }

    pub fn summary(&self) -> String {
        let mut s = format!("{} instances, {} failures", self.instances, self.failures.len());
        for f in &self.failures {
            let _ = write!(s, "\n    {f}");
        }
        s
    }
}

/// Hom-Bianchi on arbitrary products and twists.
pub fn bianchi_suite(seed: u64) -> Suite {
    let mut rng = rng(seed);
    let mut suite = Suite::default();
    for _ in 0..INSTANCES {
        let n = rng.gen_range(2..=4);
        let algebra = HomAlgebra::new(random_tensor(&mut rng, n), random_matrix(&mut rng, n)).unwrap();
        suite.instances += 1;
        if !hom_bianchi_defect(&algebra).verdict("hom-Bianchi identity") {
            suite.fail(format!("checker rejected {:?}", algebra.product().nonzero_entries()));
        }
        let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
        let (left, right) = cyclic_sums(&algebra, i, j, k);
        if left != right {
            suite.fail(format!("cyclic sums differ at ({i},{j},{k})"));
        }
    }
    suite
}

/// The Levi-Civita product reproduces the bracket and its post-identities.
pub fn levi_civita_suite(seed: u64) -> Suite {
    let mut rng = rng(seed);
    let mut suite = Suite::default();
    for _ in 0..INSTANCES {
        let instance = metric_instance(&mut rng);
        suite.instances += 1;
        let product = match levi_civita(&instance.algebra, &instance.metric) {
            Ok(p) => p,
            Err(e) => {
                suite.fail(format!("{}: {e}", instance.origin));
                continue;
            }
        };
        let n = product.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = product.get(i, j, k) - product.get(j, i, k);
                    if &lhs != instance.algebra.bracket().get(i, j, k) {
                        suite.fail(format!("{}: commutator differs at ({i},{j},{k})", instance.origin));
                    }
                }
            }
        }
        let post = check_levi_civita(&instance.algebra, &instance.metric, &product).unwrap();
        if !post.passed() {
            suite.fail(format!("{}: {post}", instance.origin));
        }
    }
    suite
}

/// The explicit Γ formula agrees with the linear-system solution on
/// involutive instances.
pub fn closed_form_suite(seed: u64) -> Suite {
    let mut rng = rng(seed);
    let mut suite = Suite::default();
    while suite.instances < INSTANCES {
        let instance = metric_instance(&mut rng);
        if !instance.algebra.is_involutive() {
            continue;
        }
        suite.instances += 1;
        let product = levi_civita(&instance.algebra, &instance.metric).unwrap();
        let gamma = closed_form_gamma(&instance.algebra, &instance.metric);
        let n = product.dim();
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    if product.get(i, j, l) != &gamma[i][j][l] {
                        suite.fail(format!("{}: Γ differs at ({i},{j},{l})", instance.origin));
                    }
                }
            }
        }
    }
    suite
}

/// `⟨ρ(u,α)v, β⟩ = ⟨ρ*(α,u)β, v⟩` on every basis tuple.
pub fn rho_duality_suite(seed: u64) -> Suite {
    let mut rng = rng(seed);
    let mut suite = Suite::default();
    for _ in 0..INSTANCES {
        let (v, w) = left_symmetric_pair(&mut rng);
        let bundle = match extend_product(&v, &w) {
            Ok(b) => b,
            Err(e) => {
                suite.fail(format!("generator produced an invalid pair: {e}"));
                continue;
            }
        };
        suite.instances += 1;
        let n = bundle.half_dim();
        for i in 0..n {
            for a in 0..n {
                let (rho, rho_star) = rho_pair(&bundle, i, a).unwrap();
                for x in 0..n {
                    for b in 0..n {
                        let lhs = Vector::unit(n, b).dot(&rho.matrix.apply(&Vector::unit(n, x)));
                        let rhs = Vector::unit(n, x).dot(&rho_star.matrix.apply(&Vector::unit(n, b)));
                        if lhs != rhs {
                            suite.fail(format!("pairing differs at u={i} α={a} v={x} β={b}"));
                        }
                    }
                }
            }
        }
    }
    suite
}

/// `dual_rep ∘ dual_rep` is the identity, on random data and on adjoint
/// representations; duals of adjoint representations of involutive algebras
/// are representations.
pub fn dual_involution_suite(seed: u64) -> Suite {
    let mut rng = rng(seed);
    let mut suite = Suite::default();
    for round in 0..INSTANCES {
        let instance = match round % 3 {
            0 => lie_instance(&mut rng),
            1 => split_instance(&mut rng),
            _ => graded_instance(&mut rng),
        };
        let n = instance.algebra.dim();
        suite.instances += 1;
        let rep = if round % 2 == 0 {
            adjoint_rep(&instance.algebra)
        } else {
            let m = rng.gen_range(1..=3);
            let rho = (0..n)
                .map(|_| Matrix::from_fn(m, m, |_, _| int(coeff(&mut rng))))
                .collect();
            let endo = Matrix::from_fn(m, m, |_, _| int(coeff(&mut rng)));
            Representation::new(instance.algebra.clone(), endo, rho).unwrap()
        };
        if dual_rep(&dual_rep(&rep)) != rep {
            suite.fail(format!("{}: double dual differs", instance.origin));
        }
        if round % 2 == 0 && instance.algebra.is_involutive() {
            let admissible = check_admissible(&rep).unwrap();
            if !admissible.passed() || !check_representation(&dual_rep(&rep)).passed() {
                suite.fail(format!("{}: adjoint dual is not a representation", instance.origin));
            }
        }
    }
    suite
}
