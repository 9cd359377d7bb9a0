//! Algebra documents: a JSON object with keys `name`, `dimension`, `basis`,
//! `bracket` and/or `product`, `phi`, and optional `metric`, `omega` and `K`.
//!
//! Tensors are lists of `[i, j, k, "c"]` entries meaning `e_i ∗ e_j` has
//! coefficient `c` on `e_k`, with 1-based indices. Bracket entries are
//! extended antisymmetrically. Matrices are dense row-major grids. Every
//! coefficient is a quoted rational such as `"-3"` or `"3/2"`.

use homlie::{
    parse_rational, BilinearForm, HomAlgebra, HomLieAlgebra, Matrix, ProductStructure, Rational, StructureTensor,
};
use num_traits::Zero;
use serde::Deserialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DocumentError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid document: {0}")]
    Validation(String),
}

fn invalid(message: impl Into<String>) -> DocumentError {
    DocumentError::Validation(message.into())
}

type RawTriple = (usize, usize, usize, String);
type RawGrid = Vec<Vec<String>>;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    name: String,
    dimension: usize,
    basis: Vec<String>,
    #[serde(default)]
    bracket: Option<Vec<RawTriple>>,
    #[serde(default)]
    product: Option<Vec<RawTriple>>,
    phi: RawGrid,
    #[serde(default)]
    metric: Option<RawGrid>,
    #[serde(default)]
    omega: Option<RawGrid>,
    #[serde(default, rename = "K")]
    k: Option<RawGrid>,
}

/// One structure constant, 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coefficient: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub name: String,
    pub dimension: usize,
    pub basis: Vec<String>,
    pub bracket: Option<Vec<Entry>>,
    pub product: Option<Vec<Entry>>,
    pub phi: Matrix,
    pub metric: Option<Matrix>,
    pub omega: Option<Matrix>,
    pub k: Option<Matrix>,
}

fn rational(text: &str, place: &str) -> Result<Rational, DocumentError> {
    parse_rational(text).map_err(|e| invalid(format!("{place}: {e}")))
}

fn entries(raw: &[RawTriple], n: usize, key: &str) -> Result<Vec<Entry>, DocumentError> {
    let mut out: Vec<Entry> = Vec::with_capacity(raw.len());
    for (pos, (i, j, k, c)) in raw.iter().enumerate() {
        let place = format!("{key}[{}]", pos + 1);
        for index in [*i, *j, *k] {
            if index == 0 || index > n {
                return Err(invalid(format!("{place}: index {index} outside 1..={n}")));
            }
        }
        let entry = Entry {
            i: i - 1,
            j: j - 1,
            k: k - 1,
            coefficient: rational(c, &place)?,
        };
        let clash = out.iter().any(|e| {
            let same = e.i == entry.i && e.j == entry.j;
            let mirrored = key == "bracket" && e.i == entry.j && e.j == entry.i;
            e.k == entry.k && (same || mirrored)
        });
        if clash {
            return Err(invalid(format!("{place}: entry ({i}, {j}, {k}) given twice")));
        }
        if key == "bracket" && i == j && !entry.coefficient.is_zero() {
            return Err(invalid(format!("{place}: [e{i}, e{i}] must vanish")));
        }
        out.push(entry);
    }
    Ok(out)
}

fn grid(raw: &RawGrid, n: usize, key: &str) -> Result<Matrix, DocumentError> {
    if raw.len() != n || raw.iter().any(|row| row.len() != n) {
        return Err(invalid(format!("{key}: expected a {n}x{n} grid")));
    }
    let mut rows = Vec::with_capacity(n);
    for (r, row) in raw.iter().enumerate() {
        let parsed = row
            .iter()
            .enumerate()
            .map(|(c, text)| rational(text, &format!("{key}[{}][{}]", r + 1, c + 1)))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(parsed);
    }
    Ok(Matrix::from_rows(rows).expect("validated shape"))
}

pub fn parse_document(text: &str) -> Result<AlgebraDocument, DocumentError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| DocumentError::Parse(e.to_string()))?;
    let n = raw.dimension;
    if n == 0 {
        return Err(invalid("dimension must be positive"));
    }
    if raw.basis.len() != n {
        return Err(invalid(format!(
            "basis: expected {n} labels, found {}",
            raw.basis.len()
        )));
    }
    let optional = |g: &Option<RawGrid>, key| g.as_ref().map(|g| grid(g, n, key)).transpose();
    Ok(AlgebraDocument {
        bracket: raw.bracket.as_deref().map(|b| entries(b, n, "bracket")).transpose()?,
        product: raw.product.as_deref().map(|p| entries(p, n, "product")).transpose()?,
        phi: grid(&raw.phi, n, "phi")?,
        metric: optional(&raw.metric, "metric")?,
        omega: optional(&raw.omega, "omega")?,
        k: optional(&raw.k, "K")?,
        name: raw.name,
        dimension: n,
        basis: raw.basis,
    })
}

impl AlgebraDocument {
    /// Canonical serialization: fixed key order, one tensor entry or grid
    /// row per line, rationals in lowest terms.
    pub fn to_json(&self) -> String {
        let quote = |text: &str| serde_json::to_string(text).expect("strings serialize");
        let mut fields = vec![
            format!("  \"name\": {}", quote(&self.name)),
            format!("  \"dimension\": {}", self.dimension),
            format!(
                "  \"basis\": [{}]",
                self.basis.iter().map(|b| quote(b)).collect::<Vec<_>>().join(", ")
            ),
        ];
        let block = |key: &str, lines: Vec<String>| {
            if lines.is_empty() {
                format!("  \"{key}\": []")
            } else {
                format!("  \"{key}\": [\n    {}\n  ]", lines.join(",\n    "))
            }
        };
        let tensor = |entries: &[Entry]| {
            entries
                .iter()
                .map(|e| {
                    format!(
                        "[{}, {}, {}, {}]",
                        e.i + 1,
                        e.j + 1,
                        e.k + 1,
                        quote(&e.coefficient.to_string())
                    )
                })
                .collect::<Vec<_>>()
        };
        let rows = |m: &Matrix| {
            m.to_rows()
                .iter()
                .map(|row| {
                    format!(
                        "[{}]",
                        row.iter().map(|c| quote(&c.to_string())).collect::<Vec<_>>().join(", ")
                    )
                })
                .collect::<Vec<_>>()
        };
        if let Some(b) = &self.bracket {
            fields.push(block("bracket", tensor(b)));
        }
        if let Some(p) = &self.product {
            fields.push(block("product", tensor(p)));
        }
        fields.push(block("phi", rows(&self.phi)));
        for (key, grid) in [("metric", &self.metric), ("omega", &self.omega), ("K", &self.k)] {
            if let Some(m) = grid {
                fields.push(block(key, rows(m)));
            }
        }
        format!("{{\n{}\n}}\n", fields.join(",\n"))
    }

    pub fn hom_lie(&self) -> Result<HomLieAlgebra, DocumentError> {
        let entries = self.bracket.as_ref().ok_or_else(|| invalid("missing key `bracket`"))?;
        let tensor = StructureTensor::antisymmetric_from_entries(
            self.dimension,
            entries.iter().map(|e| (e.i, e.j, e.k, e.coefficient.clone())),
        )
        .map_err(|e| invalid(format!("bracket: {e}")))?;
        HomLieAlgebra::new(tensor, self.phi.clone()).map_err(|e| invalid(format!("bracket: {e}")))
    }

    pub fn hom_algebra(&self) -> Result<HomAlgebra, DocumentError> {
        let entries = self.product.as_ref().ok_or_else(|| invalid("missing key `product`"))?;
        let tensor = StructureTensor::from_entries(
            self.dimension,
            entries.iter().map(|e| (e.i, e.j, e.k, e.coefficient.clone())),
        )
        .map_err(|e| invalid(format!("product: {e}")))?;
        HomAlgebra::new(tensor, self.phi.clone()).map_err(|e| invalid(format!("product: {e}")))
    }

    pub fn metric_form(&self) -> Result<Option<BilinearForm>, DocumentError> {
        self.metric
            .clone()
            .map(|m| BilinearForm::symmetric(m).map_err(|e| invalid(format!("metric: {e}"))))
            .transpose()
    }

    pub fn omega_form(&self) -> Result<Option<BilinearForm>, DocumentError> {
        self.omega
            .clone()
            .map(|m| BilinearForm::skew(m).map_err(|e| invalid(format!("omega: {e}"))))
            .transpose()
    }

    pub fn require_metric(&self) -> Result<BilinearForm, DocumentError> {
        self.metric_form()?.ok_or_else(|| invalid("missing key `metric`"))
    }

    pub fn structure(&self) -> Result<ProductStructure, DocumentError> {
        self.k
            .clone()
            .map(ProductStructure::new)
            .ok_or_else(|| invalid("missing key `K`"))
    }
}
