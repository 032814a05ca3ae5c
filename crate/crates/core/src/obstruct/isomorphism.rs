use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::forms::{FormError, LinkingForm};

/// Default bound on group orders for brute-force searches.
pub const DEFAULT_CUTOFF: u64 = 2000;

/// Decides whether two linking forms are isomorphic by searching over
/// images of the normal-form generators of `f1` in the group of `f2`.
///
/// Forms on groups of different orders are never isomorphic; otherwise both
/// orders must be at most `cutoff`.
pub fn linking_forms_isomorphic(
    f1: &LinkingForm,
    f2: &LinkingForm,
    cutoff: u64,
) -> Result<bool, FormError> {
    if f1.group_order() != f2.group_order() {
        return Ok(false);
    }
    f1.check_cutoff(cutoff)?;
    f2.check_cutoff(cutoff)?;
    let a = f1.in_normal_form();
    let b = f2.in_normal_form();
    if a.orders() != b.orders() {
        return Ok(false);
    }
    Ok(find_isometry(&a, &b).is_some())
}

/// Images in `b` of the generators of `a` defining an isometry, if any.
pub fn find_isometry(a: &LinkingForm, b: &LinkingForm) -> Option<Vec<Vec<BigInt>>> {
    let s = a.rank();
    let elements = b.elements();
    let candidates: Vec<Vec<&Vec<BigInt>>> = (0..s)
        .map(|i| {
            let e = unit(s, i);
            let self_value = a.evaluate(&e, &e);
            elements
                .iter()
                .filter(|y| b.element_order(y) == a.orders()[i] && b.evaluate(y, y) == self_value)
                .collect()
        })
        .collect();
    let gram_a: Vec<Vec<BigRational>> = a.gram().to_vec();
    let mut chosen: Vec<&Vec<BigInt>> = Vec::with_capacity(s);
    if search(b, &gram_a, &candidates, &mut chosen) {
        Some(chosen.into_iter().cloned().collect())
    } else {
        None
    }
}

fn unit(s: usize, i: usize) -> Vec<BigInt> {
    (0..s).map(|j| BigInt::from(u8::from(i == j))).collect()
}

fn search<'a>(
    b: &LinkingForm,
    gram_a: &[Vec<BigRational>],
    candidates: &[Vec<&'a Vec<BigInt>>],
    chosen: &mut Vec<&'a Vec<BigInt>>,
) -> bool {
    let i = chosen.len();
    if i == candidates.len() {
        return generates(b, chosen);
    }
    for &y in &candidates[i] {
        if chosen
            .iter()
            .enumerate()
            .all(|(j, x)| b.evaluate(x, y) == gram_a[j][i])
        {
            chosen.push(y);
            if search(b, gram_a, candidates, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// True when the elements generate the whole group of `b`.
fn generates(b: &LinkingForm, gens: &[&Vec<BigInt>]) -> bool {
    let orders = b.orders();
    let reduce = |v: Vec<BigInt>| -> Vec<BigInt> {
        v.into_iter().zip(orders).map(|(c, d)| c.mod_floor(d)).collect()
    };
    let zero = vec![BigInt::zero(); orders.len()];
    let mut seen: HashSet<Vec<BigInt>> = HashSet::from([zero.clone()]);
    let mut frontier = vec![zero];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = reduce(x.iter().zip(g.iter()).map(|(a, c)| a + c).collect());
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    BigInt::from(seen.len()) == b.group_order()
}
