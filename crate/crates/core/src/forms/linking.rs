use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::FormError;
use crate::exactalg::json::{JsonInt, JsonRational};
use crate::exactalg::{cokernel, FgAbelianGroup, IntMatrix};

/// Reduces a rational into `[0, 1)`.
pub fn frac(v: &BigRational) -> BigRational {
    v - BigRational::from_integer(v.floor().to_integer())
}

/// A symmetric `Q/Z`-valued bilinear pairing on `Z/d_1 + ... + Z/d_s`,
/// given by its Gram matrix on the cyclic generators.
///
/// The orders `d_i` are the normal-form torsion coefficients unless the form
/// was assembled from pieces; [`LinkingForm::in_normal_form`] rewrites it on
/// divisor-chain generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingForm {
    orders: Vec<BigInt>,
    gram: Vec<Vec<BigRational>>,
}

impl LinkingForm {
    pub fn new(orders: Vec<BigInt>, gram: Vec<Vec<BigRational>>) -> Result<Self, FormError> {
        let s = orders.len();
        if let Some(d) = orders.iter().find(|d| *d < &BigInt::from(2)) {
            return Err(FormError::BadOrder(d.clone()));
        }
        if gram.len() != s || gram.iter().any(|r| r.len() != s) {
            return Err(FormError::DimensionMismatch {
                expected: s,
                found: gram.len(),
            });
        }
        let gram: Vec<Vec<BigRational>> =
            gram.iter().map(|r| r.iter().map(frac).collect()).collect();
        for (i, row) in gram.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if *v != gram[j][i] {
                    return Err(FormError::NotSymmetric);
                }
                let scaled = v * BigRational::from_integer(orders[i].clone());
                if !scaled.is_integer() {
                    return Err(FormError::IllDefined { i, j });
                }
            }
        }
        Ok(LinkingForm { orders, gram })
    }

    pub fn trivial() -> Self {
        LinkingForm {
            orders: Vec::new(),
            gram: Vec::new(),
        }
    }

    /// The form `(a/n)` on `Z/n`.
    pub fn cyclic(n: impl Into<BigInt>, a: impl Into<BigInt>) -> Result<Self, FormError> {
        let n = n.into();
        let v = BigRational::new(a.into(), n.clone());
        LinkingForm::new(vec![n], vec![vec![v]])
    }

    pub fn orders(&self) -> &[BigInt] {
        &self.orders
    }

    pub fn gram(&self) -> &[Vec<BigRational>] {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn group(&self) -> FgAbelianGroup {
        FgAbelianGroup::from_invariants(0, self.orders.iter().cloned()).expect("orders >= 2")
    }

    pub fn group_order(&self) -> BigInt {
        self.orders.iter().product()
    }

    pub fn evaluate(&self, x: &[BigInt], y: &[BigInt]) -> BigRational {
        let mut total = BigRational::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                total += &self.gram[i][j] * BigRational::from_integer(xi * yj);
            }
        }
        frac(&total)
    }

    /// Every element of the group as a coordinate vector, in lexicographic order.
    pub fn elements(&self) -> Vec<Vec<BigInt>> {
        let mut out = vec![Vec::new()];
        for d in &self.orders {
            let d = d.to_u64().expect("brute force on small groups only");
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..d).map(move |c| {
                        let mut v = prefix.clone();
                        v.push(BigInt::from(c));
                        v
                    })
                })
                .collect();
        }
        out
    }

    /// Orthogonal sum; the generators of `other` follow those of `self`.
    pub fn orthogonal_sum(&self, other: &LinkingForm) -> LinkingForm {
        let s = self.rank();
        let t = other.rank();
        let mut gram = vec![vec![BigRational::zero(); s + t]; s + t];
        for (row, src) in gram.iter_mut().zip(&self.gram) {
            row[..s].clone_from_slice(src);
        }
        for (row, src) in gram[s..].iter_mut().zip(&other.gram) {
            row[s..].clone_from_slice(src);
        }
        let mut orders = self.orders.clone();
        orders.extend(other.orders.iter().cloned());
        LinkingForm { orders, gram }
    }

    /// The same pairing written on divisor-chain normal-form generators.
    pub fn in_normal_form(&self) -> LinkingForm {
        let rel = IntMatrix::diagonal(self.orders.iter().cloned());
        let group = cokernel(&rel);
        let reps = group.generator_reps().expect("cokernel has reps");
        let m = group.coordinate_count();
        let rows: Vec<Vec<BigInt>> = (0..m).map(|c| reps.row(c).to_vec()).collect();
        let gram = (0..m)
            .map(|a| (0..m).map(|b| self.evaluate(&rows[a], &rows[b])).collect())
            .collect();
        LinkingForm {
            orders: group.torsion().to_vec(),
            gram,
        }
    }

    /// True when `x -> lambda(x, -)` is injective, checked by brute force.
    pub fn is_nonsingular(&self, cutoff: u64) -> Result<bool, FormError> {
        self.check_cutoff(cutoff)?;
        let gens: Vec<Vec<BigInt>> = (0..self.rank())
            .map(|i| {
                (0..self.rank())
                    .map(|j| BigInt::from(u8::from(i == j)))
                    .collect()
            })
            .collect();
        Ok(self.elements().into_iter().all(|x| {
            x.iter().all(Zero::is_zero) || gens.iter().any(|e| !self.evaluate(&x, e).is_zero())
        }))
    }

    pub fn check_cutoff(&self, cutoff: u64) -> Result<(), FormError> {
        let order = self.group_order();
        if order > BigInt::from(cutoff) {
            return Err(FormError::CutoffExceeded { order, cutoff });
        }
        Ok(())
    }

    /// Order of a coordinate vector.
    pub fn element_order(&self, x: &[BigInt]) -> BigInt {
        x.iter()
            .zip(&self.orders)
            .fold(BigInt::one(), |acc, (c, d)| acc.lcm(&(d / c.gcd(d))))
    }
}

impl fmt::Display for LinkingForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return write!(f, "trivial");
        }
        let group: Vec<String> = self.orders.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "on {}: [", group.join(" + "))?;
        for (i, r) in self.gram.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = r.iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
struct LinkingRepr {
    torsion: Vec<JsonInt>,
    gram: Vec<Vec<JsonRational>>,
}

impl Serialize for LinkingForm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        LinkingRepr {
            torsion: self.orders.iter().cloned().map(JsonInt).collect(),
            gram: self
                .gram
                .iter()
                .map(|r| r.iter().cloned().map(JsonRational).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LinkingForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = LinkingRepr::deserialize(d)?;
        LinkingForm::new(
            repr.torsion.into_iter().map(|j| j.0).collect(),
            repr.gram
                .into_iter()
                .map(|r| r.into_iter().map(|j| j.0).collect())
                .collect(),
        )
        .map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn reduces_mod_one() {
        let f = LinkingForm::cyclic(5, -1).unwrap();
        assert_eq!(f.gram()[0][0], q(4, 5));
    }

    #[test]
    fn rejects_bad_gram() {
        assert_eq!(
            LinkingForm::new(vec![3.into()], vec![vec![q(1, 2)]]),
            Err(FormError::IllDefined { i: 0, j: 0 })
        );
        assert_eq!(
            LinkingForm::new(
                vec![3.into(), 3.into()],
                vec![vec![q(0, 1), q(1, 3)], vec![q(2, 3), q(0, 1)]]
            ),
            Err(FormError::NotSymmetric)
        );
    }

    #[test]
    fn nonsingularity_by_brute_force() {
        assert!(LinkingForm::cyclic(7, 3).unwrap().is_nonsingular(2000).unwrap());
        let degenerate =
            LinkingForm::new(vec![3.into(), 3.into()], vec![vec![q(1, 3), q(0, 1)], vec![q(0, 1), q(0, 1)]])
                .unwrap();
        assert!(!degenerate.is_nonsingular(2000).unwrap());
        assert!(LinkingForm::cyclic(9, 0).unwrap().is_nonsingular(5).is_err());
    }

    #[test]
    fn normal_form_of_coprime_sum() {
        let f = LinkingForm::cyclic(3, 1)
            .unwrap()
            .orthogonal_sum(&LinkingForm::cyclic(5, 1).unwrap());
        let n = f.in_normal_form();
        assert_eq!(n.orders(), &[BigInt::from(15)]);
        assert!(n.is_nonsingular(100).unwrap());
    }

    #[test]
    fn json_shape() {
        let f = LinkingForm::cyclic(3, 1).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"torsion":[3],"gram":[[[1,3]]]}"#);
        assert_eq!(serde_json::from_str::<LinkingForm>(&s).unwrap(), f);
    }
}
