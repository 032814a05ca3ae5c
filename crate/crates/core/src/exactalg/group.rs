use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::json::big_int_vec;
use super::snf::smith_normal_form_with_inverse;
use super::{ExactAlgError, IntMatrix};

/// Order of an element in a finitely generated abelian group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ElementOrder {
    Finite(#[serde(with = "super::json::big_int")] BigInt),
    Infinite,
}

impl fmt::Display for ElementOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementOrder::Finite(n) => write!(f, "{n}"),
            ElementOrder::Infinite => write!(f, "infinite"),
        }
    }
}

/// A finitely generated abelian group `Z^rank + Z/d_1 + ... + Z/d_s` with
/// `2 <= d_1 | d_2 | ... | d_s`.
///
/// Normal-form coordinates list the torsion summands first, then the free
/// ones. `gen_map` has one row per generator of the presentation the group
/// came from, giving that generator in normal-form coordinates (torsion
/// entries reduced into `[0, d_i)`); `generator_reps` has one row per
/// normal-form generator, giving a preimage in presentation generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GroupRepr")]
pub struct FgAbelianGroup {
    rank: usize,
    #[serde(with = "big_int_vec")]
    torsion: Vec<BigInt>,
    #[serde(skip)]
    gen_map: Option<IntMatrix>,
    #[serde(skip)]
    generator_reps: Option<IntMatrix>,
}

#[derive(Deserialize)]
struct GroupRepr {
    rank: usize,
    #[serde(with = "big_int_vec")]
    torsion: Vec<BigInt>,
}

impl TryFrom<GroupRepr> for FgAbelianGroup {
    type Error = ExactAlgError;

    fn try_from(r: GroupRepr) -> Result<Self, Self::Error> {
        FgAbelianGroup::from_invariants(r.rank, r.torsion)
    }
}

impl FgAbelianGroup {
    /// The group presented by the given invariants; its presentation
    /// generators are the normal-form generators themselves. Torsion entries
    /// need not form a divisor chain and entries equal to 1 are dropped.
    pub fn from_invariants<T: Into<BigInt>>(
        rank: usize,
        torsion: impl IntoIterator<Item = T>,
    ) -> Result<Self, ExactAlgError> {
        let torsion: Vec<BigInt> = torsion.into_iter().map(Into::into).collect();
        if let Some(bad) = torsion.iter().find(|d| !d.is_positive()) {
            return Err(ExactAlgError::BadTorsionCoefficient(bad.clone()));
        }
        let n = torsion.len() + rank;
        let mut rel = IntMatrix::zeros(torsion.len(), n);
        for (i, d) in torsion.into_iter().enumerate() {
            rel.set(i, i, d);
        }
        Ok(cokernel(&rel))
    }

    pub fn trivial() -> Self {
        FgAbelianGroup::from_invariants::<i64>(0, []).expect("valid")
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup::from_invariants::<i64>(rank, []).expect("valid")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    /// Number of normal-form generators.
    pub fn coordinate_count(&self) -> usize {
        self.torsion.len() + self.rank
    }

    /// Number of generators of the originating presentation, if known.
    pub fn presentation_generators(&self) -> Option<usize> {
        self.gen_map.as_ref().map(IntMatrix::rows)
    }

    pub fn gen_map(&self) -> Option<&IntMatrix> {
        self.gen_map.as_ref()
    }

    pub fn generator_reps(&self) -> Option<&IntMatrix> {
        self.generator_reps.as_ref()
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.rank == 0).then(|| self.torsion.iter().product())
    }

    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    pub fn has_even_torsion(&self) -> bool {
        self.torsion.iter().any(Integer::is_even)
    }

    pub fn is_isomorphic(&self, other: &FgAbelianGroup) -> bool {
        self.rank == other.rank && self.torsion == other.torsion
    }

    /// Reduces a coordinate vector into canonical representatives.
    pub fn normalize(&self, coords: &mut [BigInt]) {
        assert_eq!(coords.len(), self.coordinate_count());
        for (c, d) in coords.iter_mut().zip(&self.torsion) {
            *c = c.mod_floor(d);
        }
    }

    /// Normal-form coordinates of a combination of presentation generators.
    pub fn element(&self, combination: &[BigInt]) -> Result<Vec<BigInt>, ExactAlgError> {
        let map = self.gen_map.as_ref().ok_or(ExactAlgError::NoPresentation)?;
        if combination.len() != map.rows() {
            return Err(ExactAlgError::ShapeMismatch {
                expected: map.rows(),
                found: combination.len(),
            });
        }
        let mut coords = map.left_apply(combination);
        self.normalize(&mut coords);
        Ok(coords)
    }

    /// Normal-form coordinates of presentation generator `j`.
    pub fn generator_image(&self, j: usize) -> Result<Vec<BigInt>, ExactAlgError> {
        let map = self.gen_map.as_ref().ok_or(ExactAlgError::NoPresentation)?;
        Ok(map.row(j).to_vec())
    }

    pub fn element_order(&self, coords: &[BigInt]) -> ElementOrder {
        assert_eq!(coords.len(), self.coordinate_count());
        let (tors, free) = coords.split_at(self.torsion.len());
        if free.iter().any(|c| !c.is_zero()) {
            return ElementOrder::Infinite;
        }
        let order = tors
            .iter()
            .zip(&self.torsion)
            .fold(BigInt::one(), |acc, (c, d)| {
                let o = d / c.gcd(d);
                acc.lcm(&o)
            });
        ElementOrder::Finite(order)
    }

    /// Torsion subgroup, presented on its own normal-form generators.
    pub fn torsion_subgroup(&self) -> FgAbelianGroup {
        FgAbelianGroup::from_invariants(0, self.torsion.iter().cloned()).expect("valid")
    }

    /// Direct sum; presentation generators are those of `self` followed by
    /// those of `other` when both are known, else the normal-form generators.
    pub fn direct_sum(&self, other: &FgAbelianGroup) -> FgAbelianGroup {
        let k1 = self.torsion.len();
        let k2 = other.torsion.len();
        let n = self.coordinate_count() + other.coordinate_count();
        // Relations on the concatenated normal-form generators.
        let mut rel = IntMatrix::zeros(k1 + k2, n);
        for (i, d) in self.torsion.iter().enumerate() {
            rel.set(i, i, d.clone());
        }
        let off = self.coordinate_count();
        for (i, d) in other.torsion.iter().enumerate() {
            rel.set(k1 + i, off + i, d.clone());
        }
        let coarse = cokernel(&rel);
        match (&self.gen_map, &other.gen_map, &self.generator_reps, &other.generator_reps) {
            (Some(m1), Some(m2), Some(r1), Some(r2)) => {
                let block = m1.block_sum(m2);
                let reps_block = r1.block_sum(r2);
                let gen_map = block
                    .mul(coarse.gen_map.as_ref().expect("cokernel has map"))
                    .expect("shapes agree");
                let reps = coarse
                    .generator_reps
                    .as_ref()
                    .expect("cokernel has reps")
                    .mul(&reps_block)
                    .expect("shapes agree");
                let mut out = FgAbelianGroup {
                    gen_map: Some(gen_map),
                    generator_reps: Some(reps),
                    ..coarse
                };
                out.normalize_map();
                out
            }
            _ => coarse,
        }
    }

    fn normalize_map(&mut self) {
        if let Some(map) = self.gen_map.as_mut() {
            for i in 0..map.rows() {
                for (j, d) in self.torsion.iter().enumerate() {
                    let v = map.get(i, j).mod_floor(d);
                    map.set(i, j, v);
                }
            }
        }
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Cokernel of `a`, read as rows = relations on `a.cols()` generators.
pub fn cokernel(a: &IntMatrix) -> FgAbelianGroup {
    let n = a.cols();
    let (snf, v_inv) = smith_normal_form_with_inverse(a);
    let diag = snf.diagonal();
    let invariant = |i: usize| diag.get(i).cloned().unwrap_or_else(BigInt::zero);
    let torsion_idx: Vec<usize> = (0..n)
        .filter(|&i| {
            let d = invariant(i);
            !d.is_zero() && !d.is_one()
        })
        .collect();
    let free_idx: Vec<usize> = (0..n).filter(|&i| invariant(i).is_zero()).collect();
    let kept: Vec<usize> = torsion_idx.iter().chain(&free_idx).copied().collect();
    let torsion: Vec<BigInt> = torsion_idx.iter().map(|&i| invariant(i)).collect();

    let mut gen_map = IntMatrix::zeros(n, kept.len());
    for g in 0..n {
        for (c, &k) in kept.iter().enumerate() {
            gen_map.set(g, c, snf.v.get(g, k).clone());
        }
    }
    let mut reps = IntMatrix::zeros(kept.len(), n);
    for (c, &k) in kept.iter().enumerate() {
        for g in 0..n {
            reps.set(c, g, v_inv.get(k, g).clone());
        }
    }
    let mut group = FgAbelianGroup {
        rank: free_idx.len(),
        torsion,
        gen_map: Some(gen_map),
        generator_reps: Some(reps),
    };
    group.normalize_map();
    group
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn single_relation() {
        let g = cokernel(&IntMatrix::from_rows(&[[3]]));
        assert_eq!(g.rank(), 0);
        assert_eq!(g.torsion(), big(&[3]).as_slice());
    }

    #[test]
    fn no_relations() {
        let g = cokernel(&IntMatrix::zeros(0, 4));
        assert_eq!(g.rank(), 4);
        assert!(g.torsion().is_empty());
        assert_eq!(g.to_string(), "Z^4");
    }

    #[test]
    fn generator_images_respect_relations() {
        // x + 2y = 0, 4y = 0 on generators x, y: group Z/4 generated by y.
        let a = IntMatrix::from_rows(&[[1, 2], [0, 4]]);
        let g = cokernel(&a);
        assert_eq!(g.torsion(), big(&[4]).as_slice());
        let y = g.generator_image(1).unwrap();
        assert_eq!(g.element_order(&y), ElementOrder::Finite(4.into()));
        // Each relation maps to zero.
        for i in 0..a.rows() {
            assert!(g.element(a.row(i)).unwrap().iter().all(Zero::is_zero));
        }
        // Representatives map back to the unit coordinate vectors.
        let reps = g.generator_reps().unwrap();
        for c in 0..g.coordinate_count() {
            let e = g.element(reps.row(c)).unwrap();
            for (k, x) in e.iter().enumerate() {
                assert_eq!(x, &BigInt::from(i64::from(k == c)));
            }
        }
    }

    #[test]
    fn invariants_are_merged() {
        let g = FgAbelianGroup::from_invariants(1, [2i64, 3]).unwrap();
        assert_eq!(g.torsion(), big(&[6]).as_slice());
        assert_eq!(g.to_string(), "Z + Z/6");
        let h = FgAbelianGroup::from_invariants(0, [1i64]).unwrap();
        assert!(h.is_trivial());
        assert_eq!(h.to_string(), "0");
        assert!(FgAbelianGroup::from_invariants(0, [0i64]).is_err());
    }

    #[test]
    fn direct_sum_tracks_generators() {
        let a = cokernel(&IntMatrix::from_rows(&[[2]]));
        let b = cokernel(&IntMatrix::from_rows(&[[3, 0]]));
        let s = a.direct_sum(&b);
        assert_eq!(s.rank(), 1);
        assert_eq!(s.torsion(), big(&[6]).as_slice());
        assert_eq!(s.presentation_generators(), Some(3));
        let e = s.generator_image(0).unwrap();
        assert_eq!(s.element_order(&e), ElementOrder::Finite(2.into()));
        let e = s.generator_image(1).unwrap();
        assert_eq!(s.element_order(&e), ElementOrder::Finite(3.into()));
        let e = s.generator_image(2).unwrap();
        assert_eq!(s.element_order(&e), ElementOrder::Infinite);
    }
}
