use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::FormError;
use crate::exactalg::json::JsonInt;
use crate::exactalg::RatMatrix;

/// Coefficients of a cup product form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoefficientRing {
    Integers,
    Rationals,
    /// Integers modulo an odd prime.
    ModP(u64),
}

impl CoefficientRing {
    fn reduce(&self, v: BigRational) -> Result<BigRational, FormError> {
        match self {
            CoefficientRing::Rationals => Ok(v),
            CoefficientRing::Integers => {
                if v.is_integer() {
                    Ok(v)
                } else {
                    Err(FormError::NotInRing(v.to_string(), *self))
                }
            }
            CoefficientRing::ModP(p) => {
                if !v.is_integer() {
                    return Err(FormError::NotInRing(v.to_string(), *self));
                }
                Ok(BigRational::from_integer(
                    v.to_integer().mod_floor(&BigInt::from(*p)),
                ))
            }
        }
    }

    pub fn is_char_zero(&self) -> bool {
        !matches!(self, CoefficientRing::ModP(_))
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Integers => write!(f, "Z"),
            CoefficientRing::Rationals => write!(f, "Q"),
            CoefficientRing::ModP(p) => write!(f, "Z/{p}"),
        }
    }
}

impl std::str::FromStr for CoefficientRing {
    type Err = FormError;

    fn from_str(s: &str) -> Result<Self, FormError> {
        match s.trim() {
            "Z" => Ok(CoefficientRing::Integers),
            "Q" => Ok(CoefficientRing::Rationals),
            other => other
                .strip_prefix("Z/")
                .and_then(|p| p.parse::<u64>().ok())
                .filter(|p| *p >= 3 && p % 2 == 1)
                .map(CoefficientRing::ModP)
                .ok_or_else(|| FormError::UnknownRing(other.to_string())),
        }
    }
}

/// An alternating trilinear form on a free module with a chosen basis,
/// stored by its values on strictly increasing basis triples.
///
/// Indices are 0-based. The value on an arbitrary basis triple is the
/// alternating extension, and repeated arguments give zero; for `ModP` this
/// is only meaningful because `p` is odd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingTrilinearForm {
    dimension: usize,
    ring: CoefficientRing,
    constants: BTreeMap<(usize, usize, usize), BigRational>,
}

/// Sorts three distinct indices and returns the permutation sign.
fn sort_triple(i: usize, j: usize, k: usize) -> Option<((usize, usize, usize), bool)> {
    if i == j || j == k || i == k {
        return None;
    }
    let mut v = [i, j, k];
    let mut negate = false;
    for a in 0..3 {
        for b in 0..2 - a {
            if v[b] > v[b + 1] {
                v.swap(b, b + 1);
                negate = !negate;
            }
        }
    }
    Some(((v[0], v[1], v[2]), negate))
}

fn det3(a: [&BigRational; 3], b: [&BigRational; 3], c: [&BigRational; 3]) -> BigRational {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
}

impl AlternatingTrilinearForm {
    pub fn zero(dimension: usize, ring: CoefficientRing) -> Self {
        AlternatingTrilinearForm {
            dimension,
            ring,
            constants: BTreeMap::new(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn ring(&self) -> CoefficientRing {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.constants.is_empty()
    }

    /// Sets the value on the basis triple `(i, j, k)`; the other orderings
    /// follow by alternation.
    pub fn set(
        &mut self,
        i: usize,
        j: usize,
        k: usize,
        value: impl Into<BigRational>,
    ) -> Result<(), FormError> {
        let n = self.dimension;
        if i >= n || j >= n || k >= n {
            return Err(FormError::IndexOutOfRange {
                index: i.max(j).max(k),
                dimension: n,
            });
        }
        let value = value.into();
        let Some((key, negate)) = sort_triple(i, j, k) else {
            return if value.is_zero() {
                Ok(())
            } else {
                Err(FormError::RepeatedIndex)
            };
        };
        let value = self.ring.reduce(if negate { -value } else { value })?;
        if value.is_zero() {
            self.constants.remove(&key);
        } else {
            self.constants.insert(key, value);
        }
        Ok(())
    }

    /// Value on basis vectors `e_i, e_j, e_k`.
    pub fn value(&self, i: usize, j: usize, k: usize) -> BigRational {
        let Some((key, negate)) = sort_triple(i, j, k) else {
            return BigRational::zero();
        };
        let v = self
            .constants
            .get(&key)
            .cloned()
            .unwrap_or_else(BigRational::zero);
        let v = if negate { -v } else { v };
        self.ring.reduce(v).expect("stored values lie in the ring")
    }

    /// Value on arbitrary coordinate vectors.
    pub fn evaluate(
        &self,
        a: &[BigRational],
        b: &[BigRational],
        c: &[BigRational],
    ) -> Result<BigRational, FormError> {
        for v in [a, b, c] {
            if v.len() != self.dimension {
                return Err(FormError::DimensionMismatch {
                    expected: self.dimension,
                    found: v.len(),
                });
            }
        }
        let mut total = BigRational::zero();
        for (&(i, j, k), w) in &self.constants {
            total += w * det3([&a[i], &a[j], &a[k]], [&b[i], &b[j], &b[k]], [&c[i], &c[j], &c[k]]);
        }
        self.ring.reduce(total)
    }

    /// Nonzero values on increasing triples.
    pub fn triples(&self) -> impl Iterator<Item = ((usize, usize, usize), &BigRational)> {
        self.constants.iter().map(|(k, v)| (*k, v))
    }

    /// Block sum with no cross terms; the basis of `other` follows that of `self`.
    pub fn block_sum(&self, other: &Self) -> Result<Self, FormError> {
        if self.ring != other.ring {
            return Err(FormError::RingMismatch(self.ring, other.ring));
        }
        let off = self.dimension;
        let mut out = self.clone();
        out.dimension += other.dimension;
        for (&(i, j, k), v) in &other.constants {
            out.constants.insert((i + off, j + off, k + off), v.clone());
        }
        Ok(out)
    }

    /// Same structure constants read in another ring (integers to rationals,
    /// or integers reduced mod p).
    pub fn change_ring(&self, ring: CoefficientRing) -> Result<Self, FormError> {
        let mut out = Self::zero(self.dimension, ring);
        for (&(i, j, k), v) in &self.constants {
            out.set(i, j, k, v.clone())?;
        }
        Ok(out)
    }

    /// The form in the basis whose `a`-th vector is column `a` of `basis`.
    pub fn change_basis(&self, basis: &RatMatrix) -> Result<Self, FormError> {
        if basis.rows() != self.dimension {
            return Err(FormError::DimensionMismatch {
                expected: self.dimension,
                found: basis.rows(),
            });
        }
        let m = basis.cols();
        let cols: Vec<Vec<BigRational>> = (0..m)
            .map(|a| (0..basis.rows()).map(|i| basis.get(i, a).clone()).collect())
            .collect();
        let mut out = Self::zero(m, self.ring);
        for a in 0..m {
            for b in a + 1..m {
                for c in b + 1..m {
                    let v = self.evaluate(&cols[a], &cols[b], &cols[c])?;
                    out.set(a, b, c, v)?;
                }
            }
        }
        Ok(out)
    }

    /// The matrix of `x -> (y, z) -> T(x, y, z)`: one row per pair `y < z`,
    /// one column per basis vector.
    fn contraction_matrix(&self) -> RatMatrix {
        let n = self.dimension;
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|j| (j + 1..n).map(move |k| (j, k)))
            .collect();
        let mut m = RatMatrix::zeros(pairs.len(), n);
        for (r, &(j, k)) in pairs.iter().enumerate() {
            for i in 0..n {
                m.set(r, i, self.value(i, j, k));
            }
        }
        m
    }

    /// Basis of the radical `{x : T(x, -, -) = 0}` computed over the rationals.
    /// For a 3-manifold this is the set of classes whose cup product with
    /// every degree-one class vanishes.
    pub fn radical(&self) -> Result<Vec<Vec<BigRational>>, FormError> {
        if !self.ring.is_char_zero() {
            return Err(FormError::UnsupportedRing(self.ring));
        }
        Ok(self.contraction_matrix().nullspace())
    }

    pub fn radical_dimension(&self) -> Result<usize, FormError> {
        if !self.ring.is_char_zero() {
            return Err(FormError::UnsupportedRing(self.ring));
        }
        Ok(self.dimension - self.contraction_matrix().rank())
    }

    /// Gcd of all values of an integral form; an invariant of the form up to
    /// change of integral basis.
    pub fn content(&self) -> Result<BigInt, FormError> {
        if self.ring != CoefficientRing::Integers {
            return Err(FormError::UnsupportedRing(self.ring));
        }
        Ok(self
            .constants
            .values()
            .fold(BigInt::zero(), |g, v| g.gcd(&v.to_integer())))
    }

    /// First nonzero structure constant in index order.
    pub fn first_nonzero(&self) -> Option<((usize, usize, usize), BigRational)> {
        self.constants.iter().next().map(|(k, v)| (*k, v.clone()))
    }
}

impl fmt::Display for AlternatingTrilinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.constants.is_empty() {
            return write!(f, "0 (dim {}, {})", self.dimension, self.ring);
        }
        let terms: Vec<String> = self
            .constants
            .iter()
            .map(|((i, j, k), v)| format!("({i},{j},{k})->{v}"))
            .collect();
        write!(f, "{} (dim {}, {})", terms.join(", "), self.dimension, self.ring)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum TripleValue {
    Int(JsonInt),
    Text(String),
}

#[derive(Serialize, Deserialize)]
struct FormRepr {
    dimension: usize,
    ring: String,
    triples: Vec<(usize, usize, usize, TripleValue)>,
}

impl Serialize for AlternatingTrilinearForm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let triples = self
            .constants
            .iter()
            .map(|(&(i, j, k), v)| {
                let value = match self.ring {
                    CoefficientRing::Rationals if !v.is_integer() => TripleValue::Text(v.to_string()),
                    _ => TripleValue::Int(JsonInt(v.to_integer())),
                };
                (i, j, k, value)
            })
            .collect();
        FormRepr {
            dimension: self.dimension,
            ring: self.ring.to_string(),
            triples,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlternatingTrilinearForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = FormRepr::deserialize(d)?;
        let ring: CoefficientRing = repr.ring.parse().map_err(D::Error::custom)?;
        let mut form = AlternatingTrilinearForm::zero(repr.dimension, ring);
        for (i, j, k, v) in repr.triples {
            let value = match v {
                TripleValue::Int(n) => BigRational::from_integer(n.0),
                TripleValue::Text(t) => t
                    .parse::<BigRational>()
                    .map_err(|_| D::Error::custom(format!("bad rational {t:?}")))?,
            };
            form.set(i, j, k, value).map_err(D::Error::custom)?;
        }
        Ok(form)
    }
}
