//! Lie brackets realized as group commutators.
//!
//! A Lie element of weight `w` is turned into a word whose Magnus expansion
//! is `1 + (the element) + (terms of degree > w)`: brackets become
//! commutators, negation becomes inversion, and sums of equal weight become
//! products.

use super::FreeWord;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Lie {
    Gen(usize),
    Bracket(Box<Lie>, Box<Lie>),
    Neg(Box<Lie>),
}

impl Lie {
    pub(crate) fn bracket(a: Lie, b: Lie) -> Lie {
        Lie::Bracket(Box::new(a), Box::new(b))
    }

    pub(crate) fn neg(self) -> Lie {
        match self {
            Lie::Neg(inner) => *inner,
            other => Lie::Neg(Box::new(other)),
        }
    }

    pub(crate) fn to_word(&self) -> FreeWord {
        match self {
            Lie::Gen(i) => FreeWord::generator(*i),
            Lie::Bracket(a, b) => FreeWord::commutator(&a.to_word(), &b.to_word()),
            Lie::Neg(a) => a.to_word().inverse(),
        }
    }
}

pub(crate) fn sum_to_word(terms: &[Lie]) -> FreeWord {
    terms
        .iter()
        .fold(FreeWord::identity(), |acc, t| acc * t.to_word())
}

/// Left-normed `[[...[x_1, x_2], x_2], ..., x_2]` of weight `weight`.
pub(crate) fn left_normed(weight: usize) -> Lie {
    (1..weight).fold(Lie::Gen(1), |acc, _| Lie::bracket(acc, Lie::Gen(2)))
}

/// Rewrites `[left_normed(m), c]` as `sum [x_j, eta]` with `j` in {1, 2},
/// returning the pairs `(j, eta)`.
fn outer_on_first_two(m: usize, c: Lie) -> Vec<(usize, Lie)> {
    if m == 1 {
        return vec![(1, c)];
    }
    // [[w, x2], c] = [w, [x2, c]] - [x2, [w, c]]
    let w = left_normed(m - 1);
    let mut out = outer_on_first_two(m - 1, Lie::bracket(Lie::Gen(2), c.clone()));
    out.push((2, Lie::bracket(w, c).neg()));
    out
}

/// Leading Lie elements `(eta_1, eta_2, eta_3)` of three longitudes with
/// `eta_3 = left_normed(weight)` and `sum_j [x_j, eta_j] = 0`.
pub(crate) fn balanced_longitudes(weight: usize) -> [Vec<Lie>; 3] {
    assert!(weight >= 2);
    let eta3 = left_normed(weight);
    // [x3, [w, x2]] = -[x2, [x3, w]] + [w, [x3, x2]] with w = left_normed(weight - 1)
    let w = left_normed(weight - 1);
    let mut pieces = vec![(2, Lie::bracket(Lie::Gen(3), w).neg())];
    pieces.extend(outer_on_first_two(
        weight - 1,
        Lie::bracket(Lie::Gen(3), Lie::Gen(2)),
    ));
    let mut eta1 = Vec::new();
    let mut eta2 = Vec::new();
    for (j, t) in pieces {
        // move [x3, eta3] to the other side of the relation
        let t = t.neg();
        if j == 1 {
            eta1.push(t);
        } else {
            eta2.push(t);
        }
    }
    [eta1, eta2, vec![eta3]]
}
