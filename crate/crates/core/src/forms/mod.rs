//! Bilinear and trilinear forms carried by the cohomology of a 3-manifold.

mod linking;
mod trilinear;

use num_bigint::BigInt;
use thiserror::Error;

pub use linking::{frac, LinkingForm};
pub use trilinear::{AlternatingTrilinearForm, CoefficientRing};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormError {
    #[error("index {index} out of range for dimension {dimension}")]
    IndexOutOfRange { index: usize, dimension: usize },
    #[error("alternating forms vanish on repeated arguments")]
    RepeatedIndex,
    #[error("value {0} does not lie in {1}")]
    NotInRing(String, CoefficientRing),
    #[error("unknown coefficient ring {0:?}")]
    UnknownRing(String),
    #[error("operation not supported over {0}")]
    UnsupportedRing(CoefficientRing),
    #[error("cannot combine forms over {0} and {1}")]
    RingMismatch(CoefficientRing, CoefficientRing),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("cyclic order must be at least 2, got {0}")]
    BadOrder(BigInt),
    #[error("Gram matrix is not symmetric")]
    NotSymmetric,
    #[error("Gram entry ({i},{j}) is not killed by the order of generator {i}")]
    IllDefined { i: usize, j: usize },
    #[error("group of order {order} exceeds the brute-force cutoff {cutoff}")]
    CutoffExceeded { order: BigInt, cutoff: u64 },
}
