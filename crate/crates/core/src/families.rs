//! Constructions of manifolds whose homology cobordism classes contain no
//! Seifert fibered space.

use num_integer::Integer;

use crate::magnus::{CatalogLink, LinkCatalogEntry};
use crate::manifold::{
    connected_sum, descriptor_from_seifert, descriptor_from_surgery, DescriptorOptions,
    ManifoldDescriptor, ManifoldError, SurgeryPresentation,
};
use crate::seifert::SeifertInvariants;

fn zero_surgery(
    link: LinkCatalogEntry,
    options: &DescriptorOptions,
) -> Result<ManifoldDescriptor, ManifoldError> {
    descriptor_from_surgery(&SurgeryPresentation::from_link(link), options)
}

/// `S^1 × S^2`, as zero surgery on the unknot.
pub fn s1_x_s2() -> ManifoldDescriptor {
    zero_surgery(CatalogLink::Unlink(1).build(), &DescriptorOptions::default())
        .expect("unknot surgery")
}

/// Connected sum of `copies` copies of `S^1 × S^2`.
pub fn s1_x_s2_sum(copies: usize) -> ManifoldDescriptor {
    let s = s1_x_s2();
    (0..copies).fold(ManifoldDescriptor::s3(), |acc, _| connected_sum(&acc, &s))
}

/// Descriptor of the rational homology sphere carrying the torsion: `S^3`
/// when absent, else an orientable Seifert fibered space with `β1 = 0` and
/// odd `|H1|`.
pub fn torsion_summand(q: Option<&SeifertInvariants>) -> Result<ManifoldDescriptor, ManifoldError> {
    let Some(q) = q else {
        return Ok(ManifoldDescriptor::s3());
    };
    if !q.orientable() || q.betti_one() != 0 {
        return Err(ManifoldError::BadParameter(format!(
            "{q} must be an orientable rational homology sphere"
        )));
    }
    if q.first_homology().torsion_order().is_even() {
        return Err(ManifoldError::BadParameter(format!("{q} has even torsion")));
    }
    descriptor_from_seifert(q)
}

/// `Q # N_d # (2m − 2)(S^1 × S^2)` where `N_d` is zero surgery on `L_d`:
/// `β1 = 2m + 1`, vanishing rational cup products, Milnor degree `d`.
pub fn odd_betti_member(
    d: usize,
    m: usize,
    q: Option<&SeifertInvariants>,
    options: &DescriptorOptions,
) -> Result<ManifoldDescriptor, ManifoldError> {
    if d < 3 || m < 1 {
        return Err(ManifoldError::BadParameter(format!("need d >= 3 and m >= 1, got d = {d}, m = {m}")));
    }
    let n = zero_surgery(CatalogLink::Ld(d).build(), options)?;
    let sum = connected_sum(&torsion_summand(q)?, &n);
    Ok(connected_sum(&sum, &s1_x_s2_sum(2 * m - 2)))
}

/// `Q # N_k # (2m − 3)(S^1 × S^2)` where `N_k` is zero surgery on the
/// `(k, 1)` cabled Borromean rings: `β1 = 2m` and triple form content `k`.
pub fn even_betti_member(
    k: i64,
    m: usize,
    q: Option<&SeifertInvariants>,
    options: &DescriptorOptions,
) -> Result<ManifoldDescriptor, ManifoldError> {
    if k < 1 || m < 2 {
        return Err(ManifoldError::BadParameter(format!("need k >= 1 and m >= 2, got k = {k}, m = {m}")));
    }
    let n = zero_surgery(CatalogLink::CabledBorromean(k).build(), options)?;
    let sum = connected_sum(&torsion_summand(q)?, &n);
    Ok(connected_sum(&sum, &s1_x_s2_sum(2 * m - 3)))
}

/// Zero surgery on the Borromean rings split with `2r − 3` unknots.
pub fn even_component_member(r: usize, options: &DescriptorOptions) -> Result<ManifoldDescriptor, ManifoldError> {
    if r < 2 {
        return Err(ManifoldError::BadParameter(format!("need r >= 2, got {r}")));
    }
    let link = CatalogLink::Borromean
        .build()
        .split_union(&CatalogLink::Unlink(2 * r - 3).build());
    zero_surgery(link, options)
}

/// Surgery with framing `p` on each component of the Borromean rings.
pub fn framed_borromean_member(p: i64, options: &DescriptorOptions) -> Result<ManifoldDescriptor, ManifoldError> {
    if p.is_even() {
        return Err(ManifoldError::BadParameter(format!("p must be odd, got {p}")));
    }
    zero_surgery(CatalogLink::BorromeanFramed(p).build(), options)
}

/// Zero surgery on the Whitehead link, a circle bundle over the torus.
pub fn whitehead_zero_surgery(options: &DescriptorOptions) -> Result<ManifoldDescriptor, ManifoldError> {
    zero_surgery(CatalogLink::Whitehead.build(), options)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magnus::MilnorDegree;
    use crate::obstruct::{distinguish, obstruct, RuleTag};
    use crate::seifert::parse_seifert;

    #[test]
    fn odd_family_shape() {
        let q = parse_seifert("(+0 | 1/3)").unwrap();
        let d = odd_betti_member(3, 2, Some(&q), &Default::default()).unwrap();
        assert_eq!(d.beta1, 5);
        assert_eq!(d.torsion.torsion(), &[3.into()]);
        assert!(d.cup_form_q.as_ref().unwrap().is_zero());
        assert_eq!(d.milnor_degree, Some(MilnorDegree::Exact(3)));
        assert_eq!(d.linking_form.as_ref().unwrap().group_order(), 3.into());
        assert_eq!(obstruct(&d).fired_tags(), vec![RuleTag::OddBettiRadical]);
    }

    #[test]
    fn even_family_distinct() {
        let a = even_betti_member(1, 2, None, &Default::default()).unwrap();
        let b = even_betti_member(2, 2, None, &Default::default()).unwrap();
        assert_eq!(a.beta1, 4);
        assert!(obstruct(&a).is_obstructed());
        assert!(distinguish(&a, &b, 2000).distinct);
        assert!(!distinguish(&a, &a, 2000).distinct);
    }

    #[test]
    fn bad_parameters() {
        assert!(odd_betti_member(2, 1, None, &Default::default()).is_err());
        assert!(even_betti_member(1, 1, None, &Default::default()).is_err());
        assert!(framed_borromean_member(4, &Default::default()).is_err());
        let even = parse_seifert("(+0 | 1/2)").unwrap();
        assert!(torsion_summand(Some(&even)).is_err());
    }
}
