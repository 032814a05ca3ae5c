//! Star-shaped plumbing presentations of Seifert fibered spaces over the
//! sphere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{torsion_linking_form, ManifoldError};
use crate::exactalg::IntMatrix;
use crate::forms::LinkingForm;
use crate::seifert::{SeifertError, SeifertInvariants};

/// Negative continued fraction `r = b0 − 1/(b1 − 1/(... − 1/bn))` with
/// `b_i = ⌈r_i⌉` and `r_{i+1} = 1/(b_i − r_i)`; every `b_i` after the first
/// is at least 2.
pub fn negative_continued_fraction(r: &BigRational) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut r = r.clone();
    loop {
        let b = r.ceil().to_integer();
        out.push(b.clone());
        let rest = BigRational::from_integer(b) - &r;
        if rest.is_zero() {
            return out;
        }
        r = rest.recip();
    }
}

/// Linking matrix of the plumbing for `(+0 | α1/β1, ..., αk/βk)`: a central
/// vertex of framing 0 whose arm `j` is the chain of framings from the
/// negative continued fraction of `αj/βj`, adjacent vertices linking once.
/// Vertex 0 is the center; arms follow in order.
pub fn seifert_plumbing_matrix(s: &SeifertInvariants) -> Result<IntMatrix, SeifertError> {
    if !s.orientable() {
        return Err(SeifertError::UnsupportedBase);
    }
    if s.genus() != 0 {
        return Err(SeifertError::Domain(
            "plumbing presentation needs a base of genus 0".into(),
        ));
    }
    let arms: Vec<Vec<BigInt>> = s
        .fillings()
        .iter()
        .map(|f| negative_continued_fraction(&f.slope()))
        .collect();
    let n = 1 + arms.iter().map(Vec::len).sum::<usize>();
    let mut m = IntMatrix::zeros(n, n);
    let mut next = 1;
    for arm in &arms {
        let mut prev = 0;
        for b in arm {
            m.set(next, next, b.clone());
            m.set(prev, next, BigInt::one());
            m.set(next, prev, BigInt::one());
            prev = next;
            next += 1;
        }
    }
    Ok(m)
}

/// Linking form of an orientable Seifert fibered rational homology sphere,
/// from its plumbing matrix with the convention `λ = −A^{-1} mod 1`.
pub fn seifert_linking_form(s: &SeifertInvariants) -> Result<LinkingForm, ManifoldError> {
    if !s.orientable() {
        return Err(SeifertError::UnsupportedBase.into());
    }
    if s.betti_one() != 0 {
        return Err(ManifoldError::NotRationalHomologySphere);
    }
    let a = seifert_plumbing_matrix(s)?;
    debug_assert!(!a.determinant()?.is_zero());
    torsion_linking_form(&a)
}

/// Value of a negative continued fraction.
#[cfg(test)]
fn evaluate(cf: &[BigInt]) -> BigRational {
    let mut it = cf.iter().rev();
    let mut v = BigRational::from_integer(it.next().expect("nonempty").clone());
    for b in it {
        v = BigRational::from_integer(b.clone()) - v.recip();
    }
    v
}
