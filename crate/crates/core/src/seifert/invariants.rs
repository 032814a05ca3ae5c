use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{fundamental_group_presentation, SeifertError};
use crate::exactalg::{cokernel, ElementOrder, FgAbelianGroup, IntMatrix};
use crate::forms::{AlternatingTrilinearForm, CoefficientRing};

/// An exceptional filling of slope `alpha / beta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filling {
    pub alpha: i64,
    pub beta: i64,
}

impl Filling {
    /// Requires `alpha >= 1`, `beta != 0` and `gcd(alpha, beta) = 1`.
    pub fn new(alpha: i64, beta: i64) -> Result<Self, SeifertError> {
        if alpha < 1 {
            return Err(SeifertError::Domain(format!(
                "alpha must be at least 1 in {alpha}/{beta}"
            )));
        }
        if beta == 0 {
            return Err(SeifertError::Domain(format!("beta must be nonzero in {alpha}/{beta}")));
        }
        if alpha.gcd(&beta) != 1 {
            return Err(SeifertError::Domain(format!(
                "{alpha}/{beta} is not in lowest terms"
            )));
        }
        Ok(Filling { alpha, beta })
    }

    pub fn slope(&self) -> BigRational {
        BigRational::new(self.alpha.into(), self.beta.into())
    }
}

/// Seifert invariants `(±g | α1/β1, ..., αk/βk)`. Serialized as notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SeifertInvariants {
    pub(super) orientable: bool,
    pub(super) genus: u32,
    pub(super) fillings: Vec<Filling>,
}

impl TryFrom<String> for SeifertInvariants {
    type Error = SeifertError;

    fn try_from(s: String) -> Result<Self, SeifertError> {
        s.parse()
    }
}

impl From<SeifertInvariants> for String {
    fn from(s: SeifertInvariants) -> String {
        s.to_string()
    }
}

/// Rational cohomology ring classes that occur for Seifert fibered spaces
/// without 2-torsion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CohomologyRingType {
    /// Ring of `S^1 × Σ_h`; `β1 = 2h + 1`.
    ProductS1Sigma { h: u32 },
    /// Ring of a connected sum of `n` copies of `S^1 × S^2`; `β1 = n`.
    ConnectedSumS1S2 { n: u32 },
    Unclassified,
}

impl fmt::Display for CohomologyRingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CohomologyRingType::ProductS1Sigma { h } => write!(f, "S1 x Sigma_{h}"),
            CohomologyRingType::ConnectedSumS1S2 { n: 0 } => write!(f, "S3"),
            CohomologyRingType::ConnectedSumS1S2 { n } => write!(f, "#{n} S1 x S2"),
            CohomologyRingType::Unclassified => write!(f, "unclassified"),
        }
    }
}

impl SeifertInvariants {
    pub fn new(orientable: bool, genus: u32, fillings: Vec<Filling>) -> Result<Self, SeifertError> {
        if !orientable && genus == 0 {
            return Err(SeifertError::Domain(
                "a non-orientable base needs genus at least 1".into(),
            ));
        }
        Ok(SeifertInvariants {
            orientable,
            genus,
            fillings,
        })
    }

    pub fn orientable(&self) -> bool {
        self.orientable
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn fillings(&self) -> &[Filling] {
        &self.fillings
    }

    fn generator_count(&self) -> usize {
        let g = self.genus as usize;
        let surface = if self.orientable { 2 * g } else { g };
        surface + self.fillings.len() + 1
    }

    /// Column of the regular fiber `t` in the homology presentations.
    pub fn fiber_index(&self) -> usize {
        self.generator_count() - 1
    }

    /// Relation matrix of `H1` as a module over the presentation
    /// generators: `αj μj + βj t`, the surface relation `Σ μj` (orientable)
    /// or `2 Σ xi + Σ μj` together with `2t` (non-orientable).
    pub fn homology_relations(&self) -> IntMatrix {
        let n = self.generator_count();
        let g = self.genus as usize;
        let mu0 = if self.orientable { 2 * g } else { g };
        let t = n - 1;
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        let zero_row = || vec![BigInt::zero(); n];
        if !self.orientable {
            let mut r = zero_row();
            r[t] = 2.into();
            rows.push(r);
        }
        for (j, fl) in self.fillings.iter().enumerate() {
            let mut r = zero_row();
            r[mu0 + j] = fl.alpha.into();
            r[t] = fl.beta.into();
            rows.push(r);
        }
        let mut surface = zero_row();
        if !self.orientable {
            for x in surface.iter_mut().take(g) {
                *x = 2.into();
            }
        }
        for j in 0..self.fillings.len() {
            surface[mu0 + j] = BigInt::one();
        }
        rows.push(surface);
        IntMatrix::from_big_rows(rows, n).expect("rows have the generator count")
    }

    /// `H1(M)` with `gen_map` giving the images of the presentation
    /// generators.
    pub fn first_homology(&self) -> FgAbelianGroup {
        cokernel(&self.homology_relations())
    }

    /// `H1(M)` computed by abelianizing the fundamental group presentation.
    pub fn first_homology_from_presentation(&self) -> FgAbelianGroup {
        cokernel(&fundamental_group_presentation(self).abelianization())
    }

    /// Order of the regular fiber class in `H1(M)`.
    pub fn regular_fiber_order(&self) -> ElementOrder {
        let h = self.first_homology();
        let image = h
            .generator_image(self.fiber_index())
            .expect("fiber is a presentation generator");
        h.element_order(&image)
    }

    pub fn betti_one(&self) -> usize {
        self.first_homology().rank()
    }

    pub fn has_two_torsion(&self) -> bool {
        self.first_homology().has_even_torsion()
    }

    /// Euler number `e = −Σ βj/αj`.
    pub fn euler_number(&self) -> Result<BigRational, SeifertError> {
        if !self.orientable {
            return Err(SeifertError::UnsupportedBase);
        }
        Ok(-self
            .fillings
            .iter()
            .map(|fl| BigRational::new(fl.beta.into(), fl.alpha.into()))
            .fold(BigRational::zero(), |a, b| a + b))
    }

    pub fn rational_cohomology_type(&self) -> CohomologyRingType {
        let h = self.first_homology();
        if !self.orientable || h.has_even_torsion() {
            return CohomologyRingType::Unclassified;
        }
        let b = h.rank() as u32;
        if b % 2 == 1 {
            CohomologyRingType::ProductS1Sigma { h: (b - 1) / 2 }
        } else {
            CohomologyRingType::ConnectedSumS1S2 { n: b }
        }
    }

    /// Triple cup product form on `H^1(M; Q)`.
    ///
    /// When `β1 = 2g + 1` the basis is `t*, a1, b1, ..., ag, bg` (indices
    /// 0, 1, 2, ...) with value 1 on each `(t*, ai, bi)`. When `β1 = 2g`
    /// the form is zero.
    pub fn standard_triple_cup_form(&self) -> Result<AlternatingTrilinearForm, SeifertError> {
        if !self.orientable {
            return Err(SeifertError::UnsupportedBase);
        }
        let h = self.first_homology();
        if h.has_even_torsion() {
            return Err(SeifertError::TwoTorsionPresent);
        }
        let b = h.rank();
        let mut form = AlternatingTrilinearForm::zero(b, CoefficientRing::Rationals);
        if b % 2 == 1 {
            for i in 0..self.genus as usize {
                form.set(0, 2 * i + 1, 2 * i + 2, BigRational::one())
                    .expect("indices within the dimension");
            }
        }
        Ok(form)
    }
}
