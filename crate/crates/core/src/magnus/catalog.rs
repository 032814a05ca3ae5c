//! Links used by the example families, encoded by linking matrix and
//! longitude words in the free group on the meridians.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::lie::{balanced_longitudes, sum_to_word};
use super::{FreeWord, MagnusError};
use crate::exactalg::IntMatrix;

/// A framed link: symmetric linking matrix (framings on the diagonal) and
/// one longitude word per component.
///
/// Longitude `j` has exponent sum `lk(i, j)` in meridian `x_i` for `i != j`
/// and exponent sum zero in its own meridian.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "LinkRepr")]
pub struct LinkCatalogEntry {
    name: String,
    linking_matrix: IntMatrix,
    longitudes: Vec<FreeWord>,
}

#[derive(Deserialize)]
struct LinkRepr {
    name: String,
    linking_matrix: IntMatrix,
    longitudes: Vec<FreeWord>,
}

impl TryFrom<LinkRepr> for LinkCatalogEntry {
    type Error = MagnusError;

    fn try_from(r: LinkRepr) -> Result<Self, MagnusError> {
        LinkCatalogEntry::new(r.name, r.linking_matrix, r.longitudes)
    }
}

impl LinkCatalogEntry {
    pub fn new(
        name: impl Into<String>,
        linking_matrix: IntMatrix,
        longitudes: Vec<FreeWord>,
    ) -> Result<Self, MagnusError> {
        let n = longitudes.len();
        let name = name.into();
        if linking_matrix.rows() != n || linking_matrix.cols() != n {
            return Err(MagnusError::LinkingMismatch(format!(
                "{name}: {n} longitudes but a {}x{} linking matrix",
                linking_matrix.rows(),
                linking_matrix.cols()
            )));
        }
        if !linking_matrix.is_symmetric() {
            return Err(MagnusError::LinkingMismatch(format!(
                "{name}: linking matrix is not symmetric"
            )));
        }
        for (j, l) in longitudes.iter().enumerate() {
            if l.max_generator() > n {
                return Err(MagnusError::IndexOutOfRange {
                    index: l.max_generator(),
                    components: n,
                });
            }
            for i in 0..n {
                let sum = BigInt::from(l.exponent_sum(i + 1));
                let expected = if i == j {
                    BigInt::from(0)
                } else {
                    linking_matrix.get(i, j).clone()
                };
                if sum != expected {
                    return Err(MagnusError::LinkingMismatch(format!(
                        "{name}: longitude {} has exponent sum {sum} in x{}, expected {expected}",
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(LinkCatalogEntry {
            name,
            linking_matrix,
            longitudes,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn components(&self) -> usize {
        self.longitudes.len()
    }

    pub fn linking_matrix(&self) -> &IntMatrix {
        &self.linking_matrix
    }

    pub fn longitudes(&self) -> &[FreeWord] {
        &self.longitudes
    }

    pub fn framings(&self) -> Vec<BigInt> {
        (0..self.components())
            .map(|i| self.linking_matrix.get(i, i).clone())
            .collect()
    }

    /// Same link with new framings.
    pub fn with_framings(&self, framings: &[BigInt]) -> Result<Self, MagnusError> {
        if framings.len() != self.components() {
            return Err(MagnusError::BadParameter(format!(
                "{} framings for a {}-component link",
                framings.len(),
                self.components()
            )));
        }
        let mut m = self.linking_matrix.clone();
        for (i, f) in framings.iter().enumerate() {
            m.set(i, i, f.clone());
        }
        Ok(LinkCatalogEntry {
            linking_matrix: m,
            ..self.clone()
        })
    }

    /// Split union; components of `other` are renumbered after those of `self`.
    pub fn split_union(&self, other: &LinkCatalogEntry) -> LinkCatalogEntry {
        let off = self.components();
        let mut longitudes = self.longitudes.clone();
        longitudes.extend(other.longitudes.iter().map(|l| l.shifted(off)));
        LinkCatalogEntry {
            name: format!("{} + {}", self.name, other.name),
            linking_matrix: self.linking_matrix.block_sum(&other.linking_matrix),
            longitudes,
        }
    }
}

impl fmt::Display for LinkCatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} components)", self.name, self.components())
    }
}

/// Named members of the catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalogLink {
    Unlink(usize),
    Borromean,
    Whitehead,
    /// Three components whose first nonvanishing Milnor invariants have
    /// length `d + 1`.
    Ld(usize),
    /// Borromean rings with one component replaced by its `(k, 1)` cable.
    CabledBorromean(i64),
    /// Borromean rings with framing `p` on every component.
    BorromeanFramed(i64),
}

pub type CatalogParams = BTreeMap<String, i64>;

fn param(name: &str, params: &CatalogParams, key: &str) -> Result<i64, MagnusError> {
    params.get(key).copied().ok_or_else(|| {
        MagnusError::BadParameter(format!("{name} needs parameter {key}"))
    })
}

impl CatalogLink {
    pub const NAMES: [&'static str; 6] = [
        "unlink",
        "borromean",
        "whitehead",
        "L_d",
        "cabled_borromean",
        "borromean_framed",
    ];

    pub fn parse(name: &str, params: &CatalogParams) -> Result<Self, MagnusError> {
        let link = match name {
            "unlink" => {
                let n = param(name, params, "n")?;
                if n < 1 {
                    return Err(MagnusError::BadParameter(format!("unlink needs n >= 1, got {n}")));
                }
                CatalogLink::Unlink(n as usize)
            }
            "borromean" => CatalogLink::Borromean,
            "whitehead" => CatalogLink::Whitehead,
            "L_d" => {
                let d = param(name, params, "d")?;
                if d < 3 {
                    return Err(MagnusError::BadParameter(format!("L_d needs d >= 3, got {d}")));
                }
                CatalogLink::Ld(d as usize)
            }
            "cabled_borromean" => {
                let k = param(name, params, "k")?;
                if k < 1 {
                    return Err(MagnusError::BadParameter(format!(
                        "cabled_borromean needs k >= 1, got {k}"
                    )));
                }
                CatalogLink::CabledBorromean(k)
            }
            "borromean_framed" => CatalogLink::BorromeanFramed(param(name, params, "p")?),
            other => return Err(MagnusError::UnknownCatalogName(other.to_string())),
        };
        Ok(link)
    }

    pub fn build(self) -> LinkCatalogEntry {
        let x = FreeWord::generator;
        let comm = |a: &FreeWord, b: &FreeWord| FreeWord::commutator(a, b);
        let (name, matrix, longitudes) = match self {
            CatalogLink::Unlink(n) => (
                format!("unlink({n})"),
                IntMatrix::zeros(n, n),
                vec![FreeWord::identity(); n],
            ),
            CatalogLink::Borromean => (
                "borromean".to_string(),
                IntMatrix::zeros(3, 3),
                borromean_longitudes(1),
            ),
            CatalogLink::BorromeanFramed(p) => (
                format!("borromean_framed({p})"),
                IntMatrix::diagonal([p, p, p]),
                borromean_longitudes(1),
            ),
            CatalogLink::CabledBorromean(k) => (
                format!("cabled_borromean({k})"),
                IntMatrix::zeros(3, 3),
                borromean_longitudes(k),
            ),
            CatalogLink::Whitehead => (
                "whitehead".to_string(),
                IntMatrix::zeros(2, 2),
                vec![comm(&x(2), &comm(&x(2), &x(1))), comm(&x(1), &comm(&x(1), &x(2)))],
            ),
            CatalogLink::Ld(d) => {
                let [e1, e2, e3] = balanced_longitudes(d);
                (
                    format!("L_d({d})"),
                    IntMatrix::zeros(3, 3),
                    vec![sum_to_word(&e1), sum_to_word(&e2), sum_to_word(&e3)],
                )
            }
        };
        let longitudes = longitudes.iter().map(FreeWord::reduced).collect();
        LinkCatalogEntry::new(name, matrix, longitudes).expect("catalog entries are consistent")
    }
}

/// Borromean longitudes `[x2, x3]^k, [x3, x1^k], [x1^k, x2]`; `k = 1` is the
/// Borromean rings and general `k` its cable on the first component.
fn borromean_longitudes(k: i64) -> Vec<FreeWord> {
    let x = FreeWord::generator;
    vec![
        FreeWord::commutator(&x(2), &x(3)).pow(k),
        FreeWord::commutator(&x(3), &x(1).pow(k)),
        FreeWord::commutator(&x(1).pow(k), &x(2)),
    ]
}

/// Builds a catalog entry by name.
pub fn catalog(name: &str, params: &CatalogParams) -> Result<LinkCatalogEntry, MagnusError> {
    Ok(CatalogLink::parse(name, params)?.build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magnus::{milnor_degree, mu_bar, MilnorDegree, MultiIndex};

    fn idx(s: &str) -> MultiIndex {
        s.parse().unwrap()
    }

    #[test]
    fn borromean_triple_invariant() {
        let link = CatalogLink::Borromean.build();
        let v = mu_bar(link.longitudes(), &idx("123")).unwrap();
        assert_eq!(v.value.magnitude(), &1u32.into());
        assert_eq!(v.modulus, BigInt::from(0));
        assert_eq!(
            milnor_degree(link.longitudes(), 6).unwrap(),
            MilnorDegree::Exact(2)
        );
    }

    #[test]
    fn whitehead_length_four() {
        let link = CatalogLink::Whitehead.build();
        let v = mu_bar(link.longitudes(), &idx("1122")).unwrap();
        assert_eq!(v.value.magnitude(), &1u32.into());
        assert_eq!(
            milnor_degree(link.longitudes(), 6).unwrap(),
            MilnorDegree::Exact(3)
        );
    }

    #[test]
    fn cabled_scales_triple() {
        for k in 1..=4 {
            let link = CatalogLink::CabledBorromean(k).build();
            let v = mu_bar(link.longitudes(), &idx("123")).unwrap();
            assert_eq!(v.value.magnitude(), &BigInt::from(k).magnitude().clone());
        }
    }

    #[test]
    fn ld_has_expected_degree() {
        for d in 3..=6 {
            let link = CatalogLink::Ld(d).build();
            assert_eq!(
                milnor_degree(link.longitudes(), 7).unwrap(),
                MilnorDegree::Exact(d as u32),
                "L_d({d})"
            );
        }
    }

    #[test]
    fn unlink_is_infinite() {
        let link = CatalogLink::Unlink(3).build();
        assert_eq!(milnor_degree(link.longitudes(), 5).unwrap(), MilnorDegree::Infinite);
    }

    #[test]
    fn parse_names() {
        let mut p = CatalogParams::new();
        assert!(matches!(
            catalog("trefoil", &p),
            Err(MagnusError::UnknownCatalogName(_))
        ));
        assert!(catalog("L_d", &p).is_err());
        p.insert("d".into(), 4);
        assert_eq!(catalog("L_d", &p).unwrap().components(), 3);
    }

    #[test]
    fn split_union_renumbers() {
        let b = CatalogLink::Borromean.build();
        let u = CatalogLink::Unlink(1).build();
        let s = b.split_union(&u);
        assert_eq!(s.components(), 4);
        assert_eq!(s.linking_matrix().rows(), 4);
    }

    #[test]
    fn rejects_bad_exponent_sums() {
        let x = FreeWord::generator;
        let err = LinkCatalogEntry::new("bad", IntMatrix::zeros(2, 2), vec![x(2), x(1)]);
        assert!(err.is_err());
    }
}
