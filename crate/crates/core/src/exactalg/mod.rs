//! Exact integer and rational linear algebra.

mod group;
pub mod json;
mod matrix;
mod snf;

use num_bigint::BigInt;
use thiserror::Error;

pub use group::{cokernel, ElementOrder, FgAbelianGroup};
pub use matrix::{rational_inverse, IntMatrix, RatMatrix};
pub use snf::{smith_normal_form, SnfResult};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactAlgError {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("torsion coefficient must be positive, got {0}")]
    BadTorsionCoefficient(BigInt),
    #[error("group carries no presentation data")]
    NoPresentation,
}
