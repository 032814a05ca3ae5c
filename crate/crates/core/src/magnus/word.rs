use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::MagnusError;

/// A generator (1-based) or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn inverted(self) -> Letter {
        Letter {
            inverse: !self.inverse,
            ..self
        }
    }

    pub fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// A word in a free group with generators `x1, x2, ...`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn generator(i: usize) -> Self {
        assert!(i >= 1, "generators are 1-based");
        FreeWord {
            letters: vec![Letter {
                generator: i,
                inverse: false,
            }],
        }
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        FreeWord { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> FreeWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        FreeWord { letters }
    }

    /// `a b a^-1 b^-1`
    pub fn commutator(a: &FreeWord, b: &FreeWord) -> FreeWord {
        a * b * a.inverse() * b.inverse()
    }

    /// Freely reduced form.
    pub fn reduced(&self) -> FreeWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverted()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeWord { letters: out }
    }

    pub fn exponent_sum(&self, generator: usize) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.generator == generator)
            .map(|l| l.exponent())
            .sum()
    }

    pub fn max_generator(&self) -> usize {
        self.letters.iter().map(|l| l.generator).max().unwrap_or(0)
    }

    /// Renumbers generator `i` as `i + offset`.
    pub fn shifted(&self, offset: usize) -> FreeWord {
        FreeWord {
            letters: self
                .letters
                .iter()
                .map(|l| Letter {
                    generator: l.generator + offset,
                    ..*l
                })
                .collect(),
        }
    }

    /// Writes the word with custom generator names, collapsing runs
    /// into powers.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            let name = names
                .get(l.generator - 1)
                .cloned()
                .unwrap_or_else(|| format!("x{}", l.generator));
            let exp = l.exponent() * run as i64;
            parts.push(if exp == 1 {
                name
            } else {
                format!("{name}^{exp}")
            });
            i += run;
        }
        parts.join(" ")
    }
}

impl Mul for &FreeWord {
    type Output = FreeWord;

    fn mul(self, rhs: &FreeWord) -> FreeWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        FreeWord { letters }
    }
}

impl Mul<&FreeWord> for FreeWord {
    type Output = FreeWord;

    fn mul(mut self, rhs: &FreeWord) -> FreeWord {
        self.letters.extend_from_slice(&rhs.letters);
        self
    }
}

impl Mul for FreeWord {
    type Output = FreeWord;

    fn mul(mut self, rhs: FreeWord) -> FreeWord {
        self.letters.extend(rhs.letters);
        self
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}

/// Parses whitespace-separated tokens `x<i>` or `x<i>^<n>`; `1` or the empty
/// string is the identity.
impl FromStr for FreeWord {
    type Err = MagnusError;

    fn from_str(s: &str) -> Result<Self, MagnusError> {
        let bad = |tok: &str| MagnusError::BadWord(tok.to_string());
        let mut word = FreeWord::identity();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let body = tok.strip_prefix('x').ok_or_else(|| bad(tok))?;
            let (idx, exp) = match body.split_once('^') {
                Some((i, e)) => (i, e.parse::<i64>().map_err(|_| bad(tok))?),
                None => (body, 1),
            };
            let idx: usize = idx.parse().map_err(|_| bad(tok))?;
            if idx == 0 {
                return Err(bad(tok));
            }
            word = word * FreeWord::generator(idx).pow(exp);
        }
        Ok(word)
    }
}

impl Serialize for FreeWord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FreeWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
