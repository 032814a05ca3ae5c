//! Surgery and Seifert presentations of 3-manifolds and the bundle of
//! homology cobordism invariants computed from them.

mod descriptor;
mod plumbing;
mod primes;
mod surgery;

use thiserror::Error;

use crate::exactalg::ExactAlgError;
use crate::forms::FormError;
use crate::magnus::MagnusError;
use crate::seifert::SeifertError;

pub use descriptor::{
    connected_sum, descriptor_from_seifert, descriptor_from_surgery, DescriptorOptions,
    ManifoldDescriptor, Provenance,
};
pub use plumbing::{negative_continued_fraction, seifert_linking_form, seifert_plumbing_matrix};
pub use primes::{is_prime, odd_prime_divisors};
pub use surgery::{
    cup_form_mod_p, cup_form_zero_surgery, h1_from_surgery, linking_form_from_surgery,
    torsion_linking_form, SurgeryPresentation,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ManifoldError {
    #[error("surgery matrix is singular, so the manifold is not a rational homology sphere")]
    NotRationalHomologySphere,
    #[error("zero surgery requires a zero linking matrix")]
    NonZeroLinkingMatrix,
    #[error("operation requires link longitudes")]
    MissingLinkData,
    #[error("linking matrix entries are not all divisible by {0}")]
    MatrixNotDivisibleByP(u64),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("surgery matrix must be square and symmetric")]
    BadMatrix,
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("linking matrix does not match the link: {0}")]
    LinkMismatch(String),
    #[error(transparent)]
    Seifert(#[from] SeifertError),
    #[error(transparent)]
    Magnus(#[from] MagnusError),
    #[error(transparent)]
    Form(#[from] FormError),
    #[error(transparent)]
    Algebra(#[from] ExactAlgError),
}
