//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeMap;

use hcobord::exactalg::IntMatrix;
use hcobord::magnus::{FreeWord, Letter};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

fn minors_gcd(a: &IntMatrix, k: usize) -> BigInt {
    fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        (0..n)
            .flat_map(|last| {
                combos(last, k - 1).into_iter().map(move |mut c| {
                    c.push(last);
                    c
                })
            })
            .collect()
    }
    let mut g = BigInt::zero();
    for rs in combos(a.rows(), k) {
        for cs in combos(a.cols(), k) {
            let sub: Vec<Vec<BigInt>> = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| a.get(i, j).clone()).collect())
                .collect();
            g = g.gcd(&laplace_det(&sub));
        }
    }
    g
}

fn laplace_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &m[0][j] * laplace_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Invariant factors from determinantal divisors `D_k = gcd of k x k
/// minors`: `d_k = D_k / D_{k-1}`, zeros once the rank is exceeded.
pub fn invariant_factors_oracle(a: &IntMatrix) -> Vec<BigInt> {
    let n = a.rows().min(a.cols());
    let mut out = Vec::new();
    let mut prev = BigInt::one();
    for k in 1..=n {
        let dk = minors_gcd(a, k);
        if dk.is_zero() {
            out.extend((k..=n).map(|_| BigInt::zero()));
            break;
        }
        out.push(&dk / &prev);
        prev = dk;
    }
    out
}

/// Sparse noncommutative polynomial keyed by monomials.
pub type Poly = BTreeMap<Vec<usize>, BigInt>;

fn poly_mul(a: &Poly, b: &Poly, degree: usize) -> Poly {
    let mut out = Poly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            if ma.len() + mb.len() > degree {
                continue;
            }
            let mut m = ma.clone();
            m.extend(mb);
            *out.entry(m).or_insert_with(BigInt::zero) += ca * cb;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn letter_poly(l: Letter, degree: usize) -> Poly {
    let mut p = Poly::new();
    p.insert(vec![], BigInt::one());
    if l.inverse {
        for k in 1..=degree {
            let sign = if k % 2 == 1 { -1 } else { 1 };
            p.insert(vec![l.generator; k], BigInt::from(sign));
        }
    } else if degree >= 1 {
        p.insert(vec![l.generator], BigInt::one());
    }
    p
}

/// Magnus expansion by multiplying sparse letter expansions one by one.
pub fn magnus_oracle(w: &FreeWord, degree: usize) -> Poly {
    let mut p = Poly::new();
    p.insert(vec![], BigInt::one());
    for &l in w.letters() {
        p = poly_mul(&p, &letter_poly(l, degree), degree);
    }
    p
}
