use crate::geometry::FormKind;
use crate::report::CheckReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("expected a {expected} form, got a {found} one")]
    KindMismatch { expected: FormKind, found: FormKind },
    #[error("matrix is not {0}")]
    InvalidForm(FormKind),
    #[error("bracket is not antisymmetric at ({i}, {j})")]
    NotAntisymmetric { i: usize, j: usize },
    #[error("precondition failed: {what}")]
    PreconditionFailed {
        what: String,
        report: Option<Box<CheckReport>>,
    },
}

impl Error {
    pub(crate) fn precondition(what: impl Into<String>) -> Self {
        Error::PreconditionFailed {
            what: what.into(),
            report: None,
        }
    }

    /// Fails with the report attached unless it passes.
    pub(crate) fn require(what: &str, report: CheckReport) -> Result<CheckReport> {
        if report.passed() {
            Ok(report)
        } else {
            Err(Error::PreconditionFailed {
                what: what.to_string(),
                report: Some(Box::new(report)),
            })
        }
    }
}
