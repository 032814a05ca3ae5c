use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{
    cup_form_mod_p, cup_form_zero_surgery, h1_from_surgery, odd_prime_divisors,
    seifert_linking_form, torsion_linking_form, ManifoldError, SurgeryPresentation,
};
use crate::exactalg::json::big_int_vec;
use crate::exactalg::FgAbelianGroup;
use crate::forms::{AlternatingTrilinearForm, CoefficientRing, LinkingForm};
use crate::magnus::{milnor_degree, MagnusError, MilnorDegree, DEFAULT_MAGNUS_DEGREE};
use crate::seifert::{CohomologyRingType, SeifertInvariants};

/// One step in the construction of a descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum Provenance {
    Seifert {
        notation: String,
    },
    Surgery {
        link: String,
        components: usize,
        #[serde(with = "big_int_vec")]
        framings: Vec<BigInt>,
    },
}

/// Knobs for [`descriptor_from_surgery`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescriptorOptions {
    /// Largest Milnor degree searched.
    pub milnor_cap: usize,
    /// Largest Magnus truncation degree allowed; must be at least
    /// `milnor_cap`.
    pub magnus_degree: usize,
    /// Extra odd primes for which a mod-p cup form is attempted.
    pub primes: Vec<u64>,
}

impl Default for DescriptorOptions {
    fn default() -> Self {
        DescriptorOptions {
            milnor_cap: 6,
            magnus_degree: DEFAULT_MAGNUS_DEGREE,
            primes: Vec::new(),
        }
    }
}

/// Homology cobordism invariants of a closed oriented 3-manifold.
///
/// `H1 = Z^beta1 + torsion`. Cup forms live on `H^1` with the stated
/// coefficients; `cup_forms_mod_p[p]` has dimension `dim H^1(M; Z/p)`.
/// Absent fields were not computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifoldDescriptor {
    pub beta1: usize,
    pub torsion: FgAbelianGroup,
    pub linking_form: Option<LinkingForm>,
    pub cup_form_q: Option<AlternatingTrilinearForm>,
    pub cup_form_z: Option<AlternatingTrilinearForm>,
    pub cup_forms_mod_p: BTreeMap<u64, AlternatingTrilinearForm>,
    pub milnor_degree: Option<MilnorDegree>,
    pub ring_type: Option<CohomologyRingType>,
    pub provenance: Vec<Provenance>,
}

impl ManifoldDescriptor {
    /// Descriptor of `S^3`, the unit for [`connected_sum`].
    pub fn s3() -> Self {
        ManifoldDescriptor {
            beta1: 0,
            torsion: FgAbelianGroup::trivial(),
            linking_form: Some(LinkingForm::trivial()),
            cup_form_q: Some(AlternatingTrilinearForm::zero(0, CoefficientRing::Rationals)),
            cup_form_z: Some(AlternatingTrilinearForm::zero(0, CoefficientRing::Integers)),
            cup_forms_mod_p: BTreeMap::new(),
            milnor_degree: Some(MilnorDegree::Infinite),
            ring_type: Some(CohomologyRingType::ConnectedSumS1S2 { n: 0 }),
            provenance: Vec::new(),
        }
    }

    /// `dim H^1(M; Z/p)`.
    pub fn mod_p_dimension(&self, p: u64) -> usize {
        let bp = BigInt::from(p);
        self.beta1 + self.torsion.torsion().iter().filter(|d| d.is_multiple_of(&bp)).count()
    }

    pub fn first_homology(&self) -> FgAbelianGroup {
        FgAbelianGroup::from_invariants(self.beta1, self.torsion.torsion().iter().cloned())
            .expect("valid invariants")
    }

    fn forced_mod_p_forms(&mut self) {
        for p in odd_prime_divisors(&self.torsion.torsion_order()) {
            let dim = self.mod_p_dimension(p);
            if dim < 3 {
                self.cup_forms_mod_p
                    .entry(p)
                    .or_insert_with(|| AlternatingTrilinearForm::zero(dim, CoefficientRing::ModP(p)));
            }
        }
    }
}

fn canonical_torsion(h: &FgAbelianGroup) -> FgAbelianGroup {
    FgAbelianGroup::from_invariants(0, h.torsion().iter().cloned()).expect("valid invariants")
}

/// Invariants of a surgered manifold.
///
/// The linking form is always computed. Cup and Milnor data need link
/// longitudes: zero surgery yields the integral and rational triple forms
/// and the Milnor degree; for each odd prime dividing the torsion (and each
/// requested prime) the mod-p form is computed when the matrix vanishes
/// mod p.
pub fn descriptor_from_surgery(
    sp: &SurgeryPresentation,
    options: &DescriptorOptions,
) -> Result<ManifoldDescriptor, ManifoldError> {
    if options.milnor_cap > options.magnus_degree {
        return Err(MagnusError::DegreeTooHigh {
            requested: options.milnor_cap,
            available: options.magnus_degree,
        }
        .into());
    }
    let h = h1_from_surgery(sp);
    let beta1 = h.rank();
    let mut d = ManifoldDescriptor {
        beta1,
        torsion: canonical_torsion(&h),
        linking_form: Some(torsion_linking_form(sp.matrix())?),
        cup_form_q: None,
        cup_form_z: None,
        cup_forms_mod_p: BTreeMap::new(),
        milnor_degree: None,
        ring_type: None,
        provenance: vec![Provenance::Surgery {
            link: sp.link().map_or_else(|| "custom".to_string(), |l| l.name().to_string()),
            components: sp.components(),
            framings: sp.framings(),
        }],
    };
    let zero_surgery = sp.matrix().is_zero() && sp.link().is_some();
    if zero_surgery {
        let z = cup_form_zero_surgery(sp)?;
        d.cup_form_q = Some(z.change_ring(CoefficientRing::Rationals)?);
        d.cup_form_z = Some(z);
        let link = sp.link().expect("checked");
        d.milnor_degree = Some(milnor_degree(link.longitudes(), options.milnor_cap.max(1))?);
    } else if beta1 == 0 {
        d.cup_form_q = Some(AlternatingTrilinearForm::zero(0, CoefficientRing::Rationals));
        d.cup_form_z = Some(AlternatingTrilinearForm::zero(0, CoefficientRing::Integers));
        d.milnor_degree = Some(MilnorDegree::Infinite);
    }
    let mut primes = odd_prime_divisors(&h.torsion_order());
    primes.extend(options.primes.iter().copied());
    primes.sort_unstable();
    primes.dedup();
    for p in primes {
        match cup_form_mod_p(sp, p) {
            Ok(f) => {
                d.cup_forms_mod_p.insert(p, f);
            }
            Err(ManifoldError::MatrixNotDivisibleByP(_)) | Err(ManifoldError::MissingLinkData) => {}
            Err(e) => return Err(e),
        }
    }
    d.forced_mod_p_forms();
    Ok(d)
}

/// Invariants of a Seifert fibered space: the standard triple form when the
/// base is orientable and `H1` has no 2-torsion, and the plumbing linking
/// form for orientable rational homology spheres.
pub fn descriptor_from_seifert(s: &SeifertInvariants) -> Result<ManifoldDescriptor, ManifoldError> {
    let h = s.first_homology();
    let beta1 = h.rank();
    let cup_form_q = if s.orientable() && !h.has_even_torsion() {
        Some(s.standard_triple_cup_form()?)
    } else {
        None
    };
    let rational_sphere = beta1 == 0;
    let linking_form = if rational_sphere && s.orientable() {
        Some(seifert_linking_form(s)?)
    } else {
        None
    };
    let mut d = ManifoldDescriptor {
        beta1,
        torsion: canonical_torsion(&h),
        linking_form,
        cup_form_q,
        cup_form_z: (beta1 < 3)
            .then(|| AlternatingTrilinearForm::zero(beta1, CoefficientRing::Integers)),
        cup_forms_mod_p: BTreeMap::new(),
        milnor_degree: rational_sphere.then_some(MilnorDegree::Infinite),
        ring_type: Some(s.rational_cohomology_type()),
        provenance: vec![Provenance::Seifert {
            notation: s.to_string(),
        }],
    };
    if rational_sphere && s.orientable() && d.cup_form_q.is_none() {
        d.cup_form_q = Some(AlternatingTrilinearForm::zero(0, CoefficientRing::Rationals));
    }
    d.forced_mod_p_forms();
    Ok(d)
}

fn both<T>(a: &Option<T>, b: &Option<T>, f: impl FnOnce(&T, &T) -> Option<T>) -> Option<T> {
    match (a, b) {
        (Some(x), Some(y)) => f(x, y),
        _ => None,
    }
}

fn combine_ring(a: CohomologyRingType, b: CohomologyRingType) -> CohomologyRingType {
    use CohomologyRingType::*;
    match (a, b) {
        (ConnectedSumS1S2 { n: 0 }, x) | (x, ConnectedSumS1S2 { n: 0 }) => x,
        (ConnectedSumS1S2 { n }, ConnectedSumS1S2 { n: m }) => ConnectedSumS1S2 { n: n + m },
        _ => Unclassified,
    }
}

/// Invariants of `M1 # M2`. Forms are block sums with no cross terms; a
/// field known for only one summand survives only when the other summand
/// contributes nothing to it.
pub fn connected_sum(d1: &ManifoldDescriptor, d2: &ManifoldDescriptor) -> ManifoldDescriptor {
    let torsion = canonical_torsion(&d1.torsion.direct_sum(&d2.torsion));
    let forms = |a: &AlternatingTrilinearForm, b: &AlternatingTrilinearForm| a.block_sum(b).ok();
    let mut mod_p = BTreeMap::new();
    let primes: std::collections::BTreeSet<u64> = d1
        .cup_forms_mod_p
        .keys()
        .chain(d2.cup_forms_mod_p.keys())
        .copied()
        .collect();
    for p in primes {
        let f = match (d1.cup_forms_mod_p.get(&p), d2.cup_forms_mod_p.get(&p)) {
            (Some(a), Some(b)) => a.block_sum(b).ok(),
            (Some(a), None) if d2.mod_p_dimension(p) == 0 => Some(a.clone()),
            (None, Some(b)) if d1.mod_p_dimension(p) == 0 => Some(b.clone()),
            _ => None,
        };
        if let Some(f) = f {
            mod_p.insert(p, f);
        }
    }
    let mut provenance = d1.provenance.clone();
    provenance.extend(d2.provenance.iter().cloned());
    ManifoldDescriptor {
        beta1: d1.beta1 + d2.beta1,
        torsion,
        linking_form: both(&d1.linking_form, &d2.linking_form, |a, b| Some(a.orthogonal_sum(b))),
        cup_form_q: both(&d1.cup_form_q, &d2.cup_form_q, forms),
        cup_form_z: both(&d1.cup_form_z, &d2.cup_form_z, forms),
        cup_forms_mod_p: mod_p,
        milnor_degree: both(&d1.milnor_degree, &d2.milnor_degree, |a, b| Some(a.combine(*b))),
        ring_type: both(&d1.ring_type, &d2.ring_type, |a, b| Some(combine_ring(*a, *b))),
        provenance,
    }
}
