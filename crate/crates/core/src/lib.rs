//! Exact verification and construction toolkit for finite-dimensional
//! hom-Lie algebras: axiom checks, curvature, representations, symplectic
//! and pseudo-Riemannian structures, the hom-Levi-Civita product,
//! para-Kähler structures and phase spaces.
//!
//! All arithmetic is exact over the rationals. Checkers return a
//! [`CheckReport`] of named verdicts with counterexample witnesses instead
//! of failing.

pub mod catalog;
pub mod error;
pub mod exactlin;
pub mod geometry;
pub mod homalg;
pub mod parakahler;
pub mod phasespace;
pub mod rep;
pub mod report;

pub use error::{Error, Result};
pub use exactlin::{frac, int, parse_rational, Matrix, Rational, Vector};
pub use geometry::{BilinearForm, FormKind};
pub use homalg::{HomAlgebra, HomLieAlgebra, StructureTensor};
pub use parakahler::{Decomposition, ProductStructure};
pub use phasespace::{DualizedOperator, Extraction, PhaseSpaceBundle};
pub use rep::Representation;
pub use report::{Check, CheckReport, Witness};
