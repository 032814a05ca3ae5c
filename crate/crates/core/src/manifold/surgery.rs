use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{is_prime, ManifoldError};
use crate::exactalg::{cokernel, FgAbelianGroup, IntMatrix};
use crate::forms::{AlternatingTrilinearForm, CoefficientRing, LinkingForm};
use crate::magnus::{LinkCatalogEntry, MilnorContext, MultiIndex};

/// Integral surgery on a framed link in `S^3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurgeryPresentation {
    matrix: IntMatrix,
    link: Option<LinkCatalogEntry>,
}

impl SurgeryPresentation {
    /// Surgery with the given linking matrix; when `link` is present its
    /// linking numbers must match the off-diagonal entries.
    pub fn new(matrix: IntMatrix, link: Option<LinkCatalogEntry>) -> Result<Self, ManifoldError> {
        if !matrix.is_square() || !matrix.is_symmetric() {
            return Err(ManifoldError::BadMatrix);
        }
        if let Some(l) = &link {
            let n = matrix.rows();
            if l.components() != n {
                return Err(ManifoldError::LinkMismatch(format!(
                    "{} components but a {n}x{n} matrix",
                    l.components()
                )));
            }
            for i in 0..n {
                for j in 0..n {
                    if i != j && matrix.get(i, j) != l.linking_matrix().get(i, j) {
                        return Err(ManifoldError::LinkMismatch(format!(
                            "entry ({}, {}) is {} but the linking number is {}",
                            i + 1,
                            j + 1,
                            matrix.get(i, j),
                            l.linking_matrix().get(i, j)
                        )));
                    }
                }
            }
        }
        Ok(SurgeryPresentation { matrix, link })
    }

    /// Surgery on a link with the framings recorded in its linking matrix.
    pub fn from_link(link: LinkCatalogEntry) -> Self {
        SurgeryPresentation {
            matrix: link.linking_matrix().clone(),
            link: Some(link),
        }
    }

    pub fn components(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn link(&self) -> Option<&LinkCatalogEntry> {
        self.link.as_ref()
    }

    pub fn framings(&self) -> Vec<BigInt> {
        (0..self.components()).map(|i| self.matrix.get(i, i).clone()).collect()
    }

    fn require_link(&self) -> Result<&LinkCatalogEntry, ManifoldError> {
        self.link.as_ref().ok_or(ManifoldError::MissingLinkData)
    }
}

/// `H1` of the surgered manifold: the cokernel of the linking matrix.
pub fn h1_from_surgery(sp: &SurgeryPresentation) -> FgAbelianGroup {
    cokernel(sp.matrix())
}

/// Linking form `−A^{-1} mod 1` of a rational homology sphere.
pub fn linking_form_from_surgery(sp: &SurgeryPresentation) -> Result<LinkingForm, ManifoldError> {
    if sp.matrix().determinant()?.is_zero() {
        return Err(ManifoldError::NotRationalHomologySphere);
    }
    torsion_linking_form(sp.matrix())
}

/// Linking form on the torsion of `coker A` for any symmetric `A`.
///
/// For torsion classes `x, y` represented by integer vectors, choose a
/// rational `w` with `A w = y`; then `λ(x, y) = −x·w mod 1`.
pub fn torsion_linking_form(a: &IntMatrix) -> Result<LinkingForm, ManifoldError> {
    if !a.is_square() || !a.is_symmetric() {
        return Err(ManifoldError::BadMatrix);
    }
    let group = cokernel(a);
    let k = group.torsion().len();
    if k == 0 {
        return Ok(LinkingForm::trivial());
    }
    let reps = group.generator_reps().expect("cokernel has reps");
    let ra = a.to_rational();
    let vectors: Vec<Vec<BigRational>> = (0..k)
        .map(|c| reps.row(c).iter().cloned().map(BigRational::from_integer).collect())
        .collect();
    let solutions: Vec<Vec<BigRational>> = vectors
        .iter()
        .map(|v| ra.solve(v).expect("torsion classes lie in the rational image"))
        .collect();
    let gram = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    -vectors[i]
                        .iter()
                        .zip(&solutions[j])
                        .fold(BigRational::zero(), |acc, (x, w)| acc + x * w)
                })
                .collect()
        })
        .collect();
    Ok(LinkingForm::new(group.torsion().to_vec(), gram)?)
}

/// Triple cup product form of zero surgery on a link with vanishing linking
/// numbers: the value on the dual basis triple `(i, j, k)` is `μ̄(ijk)`.
pub fn cup_form_zero_surgery(
    sp: &SurgeryPresentation,
) -> Result<AlternatingTrilinearForm, ManifoldError> {
    if !sp.matrix().is_zero() {
        return Err(ManifoldError::NonZeroLinkingMatrix);
    }
    let link = sp.require_link()?;
    triple_form(link, CoefficientRing::Integers)
}

/// Triple cup product form on `H^1(M; Z/p)` when every entry of the
/// linking matrix is divisible by the odd prime `p`.
pub fn cup_form_mod_p(
    sp: &SurgeryPresentation,
    p: u64,
) -> Result<AlternatingTrilinearForm, ManifoldError> {
    if p == 2 || !is_prime(p) {
        return Err(ManifoldError::NotOddPrime(p));
    }
    let bp = BigInt::from(p);
    if sp.matrix().entries().iter().any(|e| !e.is_multiple_of(&bp)) {
        return Err(ManifoldError::MatrixNotDivisibleByP(p));
    }
    let link = sp.require_link()?;
    triple_form(link, CoefficientRing::ModP(p))
}

fn triple_form(
    link: &LinkCatalogEntry,
    ring: CoefficientRing,
) -> Result<AlternatingTrilinearForm, ManifoldError> {
    let n = link.components();
    let mut form = AlternatingTrilinearForm::zero(n, ring);
    if n < 3 {
        return Ok(form);
    }
    let ctx = MilnorContext::new(link.longitudes(), 2)?;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let index = MultiIndex::new(vec![i + 1, j + 1, k + 1])?;
                let v = ctx.mu(&index)?;
                form.set(i, j, k, BigRational::from_integer(v))?;
            }
        }
    }
    Ok(form)
}
