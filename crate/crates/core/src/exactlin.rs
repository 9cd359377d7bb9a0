//! Exact rational scalars, vectors and small dense matrices.
//!
//! Every routine here is exact: elimination picks the first nonzero pivot in
//! each column and never compares magnitudes. Values are immutable; every
//! operation returns a fresh value.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` as a rational. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("empty coefficient")]
    Empty,
    #[error("malformed coefficient {0:?}")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// Strict parser for `"p/q"` or `"p"`, with an optional leading `-` on the
/// numerator only.
pub fn parse_rational(text: &str) -> std::result::Result<Rational, ParseRationalError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let malformed = || ParseRationalError::Malformed(text.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = |part: &str| !part.is_empty() && part.bytes().all(|b| b.is_ascii_digit());
    let unsigned = num.strip_prefix('-').unwrap_or(num);
    if !digits(unsigned) {
        return Err(malformed());
    }
    let numerator = BigInt::from_str(num).map_err(|_| malformed())?;
    let denominator = match den {
        None => BigInt::one(),
        Some(d) => {
            if !digits(d) {
                return Err(malformed());
            }
            let d = BigInt::from_str(d).map_err(|_| malformed())?;
            if d.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(text.to_string()));
            }
            d
        }
    };
    Ok(Rational::new(numerator, denominator))
}

/// Coordinate column of an element in a chosen basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector(Vec<Rational>);

impl Vector {
    pub fn new(entries: Vec<Rational>) -> Self {
        Vector(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![Rational::zero(); dim])
    }

    /// The `index`-th standard basis vector.
    pub fn unit(dim: usize, index: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[index] = Rational::one();
        v
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        Vector(entries.iter().map(|&x| int(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Vector {
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    pub fn dot(&self, other: &Vector) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    /// Concatenation `self ⊕ other`.
    pub fn concat(&self, other: &Vector) -> Vector {
        let mut entries = self.0.clone();
        entries.extend(other.0.iter().cloned());
        Vector(entries)
    }

    /// Sub-vector of entries `start..start + len`.
    pub fn slice(&self, start: usize, len: usize) -> Vector {
        Vector(self.0[start..start + len].to_vec())
    }

    /// Renders the vector as a linear combination of the given basis labels,
    /// e.g. `-2·e4` or `e1 + 1/2·e3`. The zero vector renders as `0`.
    pub fn to_combination<S: AsRef<str>>(&self, labels: &[S]) -> String {
        let mut out = String::new();
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let label = labels
                .get(i)
                .map(|s| s.as_ref().to_string())
                .unwrap_or_else(|| format!("e{}", i + 1));
            let magnitude = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if magnitude.is_one() {
                out.push_str(&label);
            } else {
                out.push_str(&format!("{magnitude}·{label}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = (1..=self.dim()).map(|i| format!("e{i}")).collect();
        f.write_str(&self.to_combination(&labels))
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
    /// Number of row swaps performed; only meaningful for determinants.
    swaps: usize,
    /// Product of the pivots before normalisation.
    pivot_product: Rational,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    /// Builds a matrix from rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Matrix { rows: n, cols, entries })
    }

    /// Convenience constructor for integer literals. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let rows: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        Self::from_rows(rows).expect("ragged integer matrix")
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        let n = diag.len();
        Self::from_fn(n, n, |i, j| if i == j { diag[i].clone() } else { Rational::zero() })
    }

    pub fn diagonal_i64(diag: &[i64]) -> Self {
        let diag: Vec<Rational> = diag.iter().map(|&x| int(x)).collect();
        Self::diagonal(&diag)
    }

    /// Matrix whose columns are the given vectors, all of dimension `dim`.
    pub fn from_columns(dim: usize, columns: &[Vector]) -> Self {
        Self::from_fn(dim, columns.len(), |i, j| columns[j].get(i).clone())
    }

    /// Block diagonal `[[a, 0], [0, b]]`.
    pub fn block_diagonal(a: &Matrix, b: &Matrix) -> Self {
        let rows = a.rows + b.rows;
        let cols = a.cols + b.cols;
        Self::from_fn(rows, cols, |i, j| {
            if i < a.rows && j < a.cols {
                a.get(i, j).clone()
            } else if i >= a.rows && j >= a.cols {
                b.get(i - a.rows, j - a.cols).clone()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector(self.entries[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).into_entries()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square() && *self == -&self.transpose()
    }

    /// `self · v`.
    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.dim(), "matrix-vector dimension mismatch");
        Vector(
            (0..self.rows)
                .map(|i| {
                    (0..self.cols).fold(Rational::zero(), |acc, j| {
                        let a = self.get(i, j);
                        if a.is_zero() {
                            acc
                        } else {
                            acc + a * v.get(j)
                        }
                    })
                })
                .collect(),
        )
    }

    /// Bilinear evaluation `uᵀ · self · v`.
    pub fn bilinear(&self, u: &Vector, v: &Vector) -> Rational {
        u.dot(&self.apply(v))
    }

    /// Sub-matrix of rows `r0..r0+rows` and columns `c0..c0+cols`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Self::from_fn(rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// Gauss-Jordan elimination with first-nonzero pivoting.
    pub fn echelon(&self) -> Echelon {
        let mut m = self.to_rows();
        let mut pivots = Vec::new();
        let mut swaps = 0;
        let mut pivot_product = Rational::one();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            if p != row {
                m.swap(p, row);
                swaps += 1;
            }
            let pivot = m[row][col].clone();
            pivot_product *= &pivot;
            let inv = pivot.recip();
            for x in m[row].iter_mut() {
                *x *= &inv;
            }
            let pivot_row = m[row].clone();
            for (r, other) in m.iter_mut().enumerate() {
                if r == row || other[col].is_zero() {
                    continue;
                }
                let factor = other[col].clone();
                for (x, p) in other.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &factor * p;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        let reduced = Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: m.into_iter().flatten().collect(),
        };
        Echelon {
            reduced,
            pivots,
            swaps,
            pivot_product,
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    pub fn determinant(&self) -> Result<Rational> {
        self.require_square()?;
        let e = self.echelon();
        if e.pivots.len() < self.rows {
            return Ok(Rational::zero());
        }
        let det = e.pivot_product;
        Ok(if e.swaps % 2 == 1 { -det } else { det })
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Exact inverse; fails with [`Error::Singular`] when the matrix is not
    /// invertible.
    pub fn inverse(&self) -> Result<Matrix> {
        self.require_square()?;
        let n = self.rows;
        let e = self.hstack(&Matrix::identity(n)).echelon();
        if e.pivots.len() < n || e.pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        Ok(e.reduced.block(0, n, n, n))
    }

    /// Basis of the null space, one vector per free column, with the free
    /// coordinate set to one. Empty when the kernel is trivial.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let e = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !e.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (r, &p) in e.pivots.iter().enumerate() {
                    v[p] = -e.reduced.get(r, f).clone();
                }
                Vector(v)
            })
            .collect()
    }

    /// The unique `x` with `self · x = b`.
    pub fn solve(&self, b: &Vector) -> Result<Vector> {
        self.require_square()?;
        if b.dim() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: b.dim(),
            });
        }
        let n = self.rows;
        let e = self.hstack(&Matrix::from_columns(n, std::slice::from_ref(b))).echelon();
        if e.pivots.len() < n || e.pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        Ok(e.reduced.column(n))
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }
}

/// Coordinates of `v` with respect to `basis`, or `None` when `v` is outside
/// the span. `basis` must be linearly independent.
pub fn coordinates_in(basis: &[Vector], v: &Vector) -> Option<Vector> {
    let dim = v.dim();
    let k = basis.len();
    let aug = Matrix::from_columns(dim, basis).hstack(&Matrix::from_columns(dim, std::slice::from_ref(v)));
    let e = aug.echelon();
    if e.pivots.contains(&k) {
        return None;
    }
    let mut coords = vec![Rational::zero(); k];
    for (r, &p) in e.pivots.iter().enumerate() {
        coords[p] = e.reduced.get(r, k).clone();
    }
    Some(Vector(coords))
}

/// Whether `v` lies in the span of `basis`, decided by exact rank comparison.
pub fn in_span(basis: &[Vector], v: &Vector) -> bool {
    let dim = v.dim();
    let base = Matrix::from_columns(dim, basis);
    let with = base.hstack(&Matrix::from_columns(dim, std::slice::from_ref(v)));
    base.rank() == with.rank()
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(Rational::zero(), |acc, k| {
                let a = self.get(i, k);
                if a.is_zero() {
                    acc
                } else {
                    acc + a * rhs.get(k, j)
                }
            })
        })
    }
}

impl Mul<&Vector> for &Matrix {
    type Output = Vector;
    fn mul(self, rhs: &Vector) -> Vector {
        self.apply(rhs)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
