//! Seifert fibered spaces given by unnormalized Seifert invariants
//! `(±g | α1/β1, ..., αk/βk)`: presentations, first homology, Euler number,
//! and the rational cohomology ring type.

mod invariants;
mod notation;
mod presentation;

use thiserror::Error;

pub use invariants::{CohomologyRingType, Filling, SeifertInvariants};
pub use notation::{parse_seifert, ParseError};
pub use presentation::{fundamental_group_presentation, GroupPresentation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeifertError {
    #[error("parse error {0}")]
    Parse(ParseError),
    #[error("invalid Seifert data: {0}")]
    Domain(String),
    #[error("operation requires an orientable base")]
    UnsupportedBase,
    #[error("first homology has 2-torsion")]
    TwoTorsionPresent,
}
