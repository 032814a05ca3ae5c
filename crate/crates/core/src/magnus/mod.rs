//! Free-group words, truncated Magnus expansions, Milnor invariants, and a
//! small catalog of links.

mod catalog;
mod lie;
mod milnor;
mod series;
mod word;

use thiserror::Error;

pub use catalog::{catalog, CatalogLink, CatalogParams, LinkCatalogEntry};
pub use milnor::{all_multi_indices, milnor_degree, mu, mu_bar, MilnorContext, MilnorDegree, MuBar, MultiIndex};
pub use series::{magnus_expansion, magnus_expansion_in, TruncatedSeries};
pub use word::{FreeWord, Letter};

/// Default truncation degree of Magnus expansions.
pub const DEFAULT_MAGNUS_DEGREE: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MagnusError {
    #[error("component index {index} out of range for {components} components")]
    IndexOutOfRange { index: usize, components: usize },
    #[error("degree {requested} requested but expansion truncated at {available}")]
    DegreeTooHigh { requested: usize, available: usize },
    #[error("bad multi-index {0:?}")]
    BadMultiIndex(String),
    #[error("bad word token {0:?}")]
    BadWord(String),
    #[error("series have different shapes")]
    IncompatibleSeries,
    #[error("series without constant term 1 is not invertible")]
    NotInvertible,
    #[error("unknown catalog link {0:?}")]
    UnknownCatalogName(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("inconsistent link data: {0}")]
    LinkingMismatch(String),
}
