//! Milnor invariants from Magnus coefficients of longitudes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::series::{magnus_expansion_in, TruncatedSeries};
use super::{FreeWord, MagnusError};

/// A multi-index `i_1 ... i_k j` of 1-based component numbers. The last
/// entry selects the longitude, the others the monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    pub fn new(indices: Vec<usize>) -> Result<Self, MagnusError> {
        if indices.len() < 2 {
            return Err(MagnusError::BadMultiIndex(format!(
                "{indices:?}: need at least two indices"
            )));
        }
        if indices.contains(&0) {
            return Err(MagnusError::BadMultiIndex(format!(
                "{indices:?}: indices are 1-based"
            )));
        }
        Ok(MultiIndex(indices))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Accepts `"1122"` (single-digit components) or separated forms like
/// `"1,1,2,2"` / `"1 1 2 2"`.
impl FromStr for MultiIndex {
    type Err = MagnusError;

    fn from_str(s: &str) -> Result<Self, MagnusError> {
        let s = s.trim();
        let bad = || MagnusError::BadMultiIndex(s.to_string());
        let indices: Vec<usize> = if s.contains([',', ' ']) {
            s.split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_, _>>()?
        };
        MultiIndex::new(indices)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&i| i < 10) {
            for i in &self.0 {
                write!(f, "{i}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// A Milnor invariant as a residue: `value` is defined modulo `modulus`,
/// and `modulus == 0` means it is a well-defined integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuBar {
    #[serde(with = "crate::exactalg::json::big_int")]
    pub value: BigInt,
    #[serde(with = "crate::exactalg::json::big_int")]
    pub modulus: BigInt,
}

impl MuBar {
    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

impl fmt::Display for MuBar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus.is_zero() {
            write!(f, "{}", self.value)
        } else {
            write!(f, "{} mod {}", self.value, self.modulus)
        }
    }
}

/// Milnor degree: one less than the length of the shortest nonvanishing
/// Milnor invariant (equivalently the length of the first nonvanishing
/// Massey product). Bounds record a search that stopped at a cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum MilnorDegree {
    Exact(u32),
    AtLeast(u32),
    Infinite,
}

impl MilnorDegree {
    /// Degree of a connected sum; unknown parts only yield bounds.
    pub fn combine(self, other: MilnorDegree) -> MilnorDegree {
        use MilnorDegree::*;
        match (self, other) {
            (Infinite, x) | (x, Infinite) => x,
            (Exact(a), Exact(b)) => Exact(a.min(b)),
            (Exact(a), AtLeast(b)) | (AtLeast(b), Exact(a)) => {
                if a <= b {
                    Exact(a)
                } else {
                    AtLeast(b)
                }
            }
            (AtLeast(a), AtLeast(b)) => AtLeast(a.min(b)),
        }
    }

    pub fn exact(self) -> Option<u32> {
        match self {
            MilnorDegree::Exact(d) => Some(d),
            _ => None,
        }
    }
}

impl fmt::Display for MilnorDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MilnorDegree::Exact(d) => write!(f, "{d}"),
            MilnorDegree::AtLeast(d) => write!(f, ">= {d}"),
            MilnorDegree::Infinite => write!(f, "infinite"),
        }
    }
}

/// Magnus expansions of a set of longitudes, computed once to a fixed degree.
#[derive(Clone, Debug)]
pub struct MilnorContext {
    expansions: Vec<TruncatedSeries>,
    degree: usize,
}

impl MilnorContext {
    /// Expands every longitude in `longitudes.len()` variables up to `degree`,
    /// enough for invariants of length `degree + 1`.
    pub fn new(longitudes: &[FreeWord], degree: usize) -> Result<Self, MagnusError> {
        let n = longitudes.len();
        let expansions = longitudes
            .iter()
            .map(|l| magnus_expansion_in(l, n, degree))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MilnorContext { expansions, degree })
    }

    pub fn components(&self) -> usize {
        self.expansions.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn expansion(&self, component: usize) -> &TruncatedSeries {
        &self.expansions[component - 1]
    }

    fn check(&self, index: &MultiIndex) -> Result<(), MagnusError> {
        let n = self.components();
        if let Some(&bad) = index.indices().iter().find(|&&i| i > n) {
            return Err(MagnusError::IndexOutOfRange {
                index: bad,
                components: n,
            });
        }
        if index.len() > self.degree + 1 {
            return Err(MagnusError::DegreeTooHigh {
                requested: index.len() - 1,
                available: self.degree,
            });
        }
        Ok(())
    }

    /// Raw coefficient `mu(i_1 ... i_k j)`.
    pub fn mu(&self, index: &MultiIndex) -> Result<BigInt, MagnusError> {
        self.check(index)?;
        let (&j, monomial) = index.indices().split_last().expect("len >= 2");
        self.expansion(j).coefficient(monomial).cloned()
    }

    fn mu_raw(&self, indices: &[usize]) -> BigInt {
        let (&j, monomial) = indices.split_last().expect("len >= 2");
        let s = &self.expansions[j - 1];
        let n = s.generators();
        let idx = monomial.iter().fold(0, |acc, &g| acc * n + (g - 1));
        s.degree_block(monomial.len())[idx].clone()
    }

    /// Indeterminacy: gcd of `mu` over cyclic permutations of proper
    /// subsequences of length at least two.
    pub fn indeterminacy(&self, index: &MultiIndex) -> Result<BigInt, MagnusError> {
        self.check(index)?;
        let idx = index.indices();
        let k = idx.len();
        let mut g = BigInt::zero();
        // Subsets as bitmasks, excluding the full set.
        for mask in 1u64..(1u64 << k) - 1 {
            if mask.count_ones() < 2 {
                continue;
            }
            let sub: Vec<usize> = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| idx[b]).collect();
            for r in 0..sub.len() {
                let mut rot = sub[r..].to_vec();
                rot.extend_from_slice(&sub[..r]);
                g = g.gcd(&self.mu_raw(&rot));
                if g.is_one() {
                    return Ok(g);
                }
            }
        }
        Ok(g)
    }

    pub fn mu_bar(&self, index: &MultiIndex) -> Result<MuBar, MagnusError> {
        let raw = self.mu(index)?;
        let modulus = self.indeterminacy(index)?;
        let value = if modulus.is_zero() {
            raw
        } else {
            raw.mod_floor(&modulus)
        };
        Ok(MuBar { value, modulus })
    }

    /// Milnor degree searched up to `max_degree` (invariants of length up to
    /// `max_degree + 1`), which must not exceed the context degree.
    pub fn milnor_degree(&self, max_degree: usize) -> Result<MilnorDegree, MagnusError> {
        if max_degree > self.degree {
            return Err(MagnusError::DegreeTooHigh {
                requested: max_degree,
                available: self.degree,
            });
        }
        let n = self.components();
        // While every shorter raw coefficient vanishes, all indeterminacies
        // are zero and mu_bar equals the raw coefficient.
        let mut all_shorter_vanish = true;
        for len in 2..=max_degree + 1 {
            let mut any_nonzero = false;
            for index in all_multi_indices(n, len) {
                let raw = self.mu_raw(&index);
                if raw.is_zero() {
                    continue;
                }
                any_nonzero = true;
                let nonzero_bar = all_shorter_vanish || {
                    let mi = MultiIndex(index.clone());
                    !self.mu_bar(&mi)?.is_zero()
                };
                if nonzero_bar {
                    return Ok(MilnorDegree::Exact((len - 1) as u32));
                }
            }
            if any_nonzero {
                all_shorter_vanish = false;
            }
        }
        Ok(MilnorDegree::AtLeast(max_degree as u32 + 1))
    }
}

/// Every multi-index of the given length over `n` components, in
/// lexicographic order.
pub fn all_multi_indices(n: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.pow(len as u32);
    (0..total).map(move |mut code| {
        let mut v = vec![0; len];
        for slot in v.iter_mut().rev() {
            *slot = code % n + 1;
            code /= n;
        }
        v
    })
}

/// Raw Milnor coefficient `mu(I)` of a set of longitudes.
pub fn mu(longitudes: &[FreeWord], index: &MultiIndex) -> Result<BigInt, MagnusError> {
    MilnorContext::new(longitudes, index.len() - 1)?.mu(index)
}

/// `mu(I)` reduced modulo its indeterminacy.
pub fn mu_bar(longitudes: &[FreeWord], index: &MultiIndex) -> Result<MuBar, MagnusError> {
    MilnorContext::new(longitudes, index.len() - 1)?.mu_bar(index)
}

/// Milnor degree of the link with these longitudes, searched up to
/// `max_degree`.
pub fn milnor_degree(longitudes: &[FreeWord], max_degree: usize) -> Result<MilnorDegree, MagnusError> {
    if max_degree < 1 {
        return Err(MagnusError::BadParameter("max degree must be at least 1".into()));
    }
    if longitudes.iter().all(|l| l.reduced().is_empty()) {
        return Ok(MilnorDegree::Infinite);
    }
    MilnorContext::new(longitudes, max_degree)?.milnor_degree(max_degree)
}
