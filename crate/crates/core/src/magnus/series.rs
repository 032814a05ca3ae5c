//! Truncated noncommutative power series in `X_1, ..., X_n`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{FreeWord, MagnusError};

/// Coefficients of all monomials of length at most `degree`, stored densely
/// per degree. A monomial `X_{i_1} ... X_{i_d}` (0-based `i`) lives at index
/// `i_1 n^{d-1} + ... + i_d` of the degree-`d` block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    generators: usize,
    degree: usize,
    coeffs: Vec<Vec<BigInt>>,
}

impl TruncatedSeries {
    pub fn zero(generators: usize, degree: usize) -> Self {
        let coeffs = (0..=degree)
            .map(|d| vec![BigInt::zero(); generators.pow(d as u32)])
            .collect();
        TruncatedSeries {
            generators,
            degree,
            coeffs,
        }
    }

    pub fn one(generators: usize, degree: usize) -> Self {
        let mut s = Self::zero(generators, degree);
        s.coeffs[0][0] = BigInt::one();
        s
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn index(&self, monomial: &[usize]) -> usize {
        monomial.iter().fold(0, |acc, &g| acc * self.generators + g)
    }

    fn monomial(&self, d: usize, mut idx: usize) -> Vec<usize> {
        let mut m = vec![0; d];
        for slot in m.iter_mut().rev() {
            *slot = idx % self.generators;
            idx /= self.generators;
        }
        m
    }

    /// Coefficient of a monomial given by 1-based generator indices.
    pub fn coefficient(&self, monomial: &[usize]) -> Result<&BigInt, MagnusError> {
        if monomial.len() > self.degree {
            return Err(MagnusError::DegreeTooHigh {
                requested: monomial.len(),
                available: self.degree,
            });
        }
        if let Some(&g) = monomial.iter().find(|&&g| g == 0 || g > self.generators) {
            return Err(MagnusError::IndexOutOfRange {
                index: g,
                components: self.generators,
            });
        }
        let zero_based: Vec<usize> = monomial.iter().map(|g| g - 1).collect();
        Ok(&self.coeffs[monomial.len()][self.index(&zero_based)])
    }

    /// Coefficients of degree `d`, indexed as described on the type.
    pub fn degree_block(&self, d: usize) -> &[BigInt] {
        &self.coeffs[d]
    }

    /// Nonzero terms as (1-based monomial, coefficient), by degree then index.
    pub fn terms(&self) -> Vec<(Vec<usize>, BigInt)> {
        let mut out = Vec::new();
        for (d, block) in self.coeffs.iter().enumerate() {
            for (idx, c) in block.iter().enumerate() {
                if !c.is_zero() {
                    let m = self.monomial(d, idx).into_iter().map(|g| g + 1).collect();
                    out.push((m, c.clone()));
                }
            }
        }
        out
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0][0].is_one() && self.coeffs[1..].iter().flatten().all(Zero::is_zero)
    }

    /// Lowest degree `d >= 1` with a nonzero coefficient.
    pub fn lowest_nonconstant_degree(&self) -> Option<usize> {
        (1..=self.degree).find(|&d| self.coeffs[d].iter().any(|c| !c.is_zero()))
    }

    /// Right multiplication by `1 + X_g` (or its inverse), in place; `g` is 0-based.
    fn mul_letter(&mut self, g: usize, inverse: bool) {
        let n = self.generators;
        if inverse {
            // Solve T (1 + X_g) = S degree by degree: T[u X_g] = S[u X_g] - T[u].
            for d in 1..=self.degree {
                let (lower, upper) = self.coeffs.split_at_mut(d);
                let prev = &lower[d - 1];
                let cur = &mut upper[0];
                for (u, c) in prev.iter().enumerate() {
                    if !c.is_zero() {
                        cur[u * n + g] -= c;
                    }
                }
            }
        } else {
            for d in (1..=self.degree).rev() {
                let (lower, upper) = self.coeffs.split_at_mut(d);
                let prev = &lower[d - 1];
                let cur = &mut upper[0];
                for (u, c) in prev.iter().enumerate() {
                    if !c.is_zero() {
                        cur[u * n + g] += c;
                    }
                }
            }
        }
    }

    /// Truncated product.
    pub fn product(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, MagnusError> {
        self.check_compatible(other)?;
        let n = self.generators;
        let mut out = Self::zero(n, self.degree);
        for da in 0..=self.degree {
            for (ia, a) in self.coeffs[da].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for db in 0..=self.degree - da {
                    let shift = n.pow(db as u32);
                    for (ib, b) in other.coeffs[db].iter().enumerate() {
                        if !b.is_zero() {
                            out.coeffs[da + db][ia * shift + ib] += a * b;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Truncated multiplicative inverse of a series with constant term 1.
    pub fn inverse(&self) -> Result<TruncatedSeries, MagnusError> {
        if !self.coeffs[0][0].is_one() {
            return Err(MagnusError::NotInvertible);
        }
        let mut nilpotent = self.clone();
        nilpotent.coeffs[0][0] = BigInt::zero();
        for block in nilpotent.coeffs.iter_mut() {
            for c in block.iter_mut() {
                *c = -&*c;
            }
        }
        // sum_{k <= degree} (-N)^k
        let mut total = Self::one(self.generators, self.degree);
        let mut power = Self::one(self.generators, self.degree);
        for _ in 0..self.degree {
            power = power.product(&nilpotent)?;
            for (block, add) in total.coeffs.iter_mut().zip(&power.coeffs) {
                for (c, a) in block.iter_mut().zip(add) {
                    *c += a;
                }
            }
        }
        Ok(total)
    }

    fn check_compatible(&self, other: &TruncatedSeries) -> Result<(), MagnusError> {
        if self.generators != other.generators || self.degree != other.degree {
            return Err(MagnusError::IncompatibleSeries);
        }
        Ok(())
    }
}

/// Magnus expansion `x_i -> 1 + X_i` of `word` in `generators` variables,
/// truncated above `degree`.
pub fn magnus_expansion_in(
    word: &FreeWord,
    generators: usize,
    degree: usize,
) -> Result<TruncatedSeries, MagnusError> {
    let mut s = TruncatedSeries::one(generators, degree);
    for l in word.letters() {
        if l.generator > generators {
            return Err(MagnusError::IndexOutOfRange {
                index: l.generator,
                components: generators,
            });
        }
        s.mul_letter(l.generator - 1, l.inverse);
    }
    Ok(s)
}

/// Magnus expansion using as many variables as the largest generator in `word`.
pub fn magnus_expansion(word: &FreeWord, degree: usize) -> TruncatedSeries {
    let n = word.max_generator().max(1);
    magnus_expansion_in(word, n, degree).expect("generator count covers the word")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn terms(s: &TruncatedSeries) -> Vec<(Vec<usize>, i64)> {
        s.terms()
            .into_iter()
            .map(|(m, c)| (m, i64::try_from(c).unwrap()))
            .collect()
    }

    #[test]
    fn single_generator() {
        let s = magnus_expansion(&FreeWord::generator(1), 3);
        assert_eq!(terms(&s), vec![(vec![], 1), (vec![1], 1)]);
    }

    #[test]
    fn inverse_generator_alternates() {
        let s = magnus_expansion(&FreeWord::generator(1).inverse(), 4);
        assert_eq!(
            terms(&s),
            vec![(vec![], 1), (vec![1], -1), (vec![1, 1], 1), (vec![1, 1, 1], -1), (vec![1, 1, 1, 1], 1)]
        );
    }

    #[test]
    fn word_times_inverse_is_one() {
        let w: FreeWord = "x1 x1^-1".parse().unwrap();
        for d in 1..5 {
            assert!(magnus_expansion_in(&w, 2, d).unwrap().is_one());
        }
    }

    #[test]
    fn out_of_range_generator() {
        let w = FreeWord::generator(3);
        assert!(magnus_expansion_in(&w, 2, 2).is_err());
        let s = magnus_expansion_in(&w, 3, 2).unwrap();
        assert!(s.coefficient(&[4]).is_err());
        assert!(s.coefficient(&[1, 1, 1]).is_err());
    }
}
