use std::fmt;

use serde::{Deserialize, Serialize};

use super::SeifertInvariants;
use crate::exactalg::IntMatrix;
use crate::magnus::FreeWord;

/// Finite presentation with named generators; relator letters index into
/// `generators` starting at 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<FreeWord>,
}

impl GroupPresentation {
    /// Exponent-sum matrix: one row per relator, one column per generator.
    pub fn abelianization(&self) -> IntMatrix {
        let n = self.generators.len();
        let mut m = IntMatrix::zeros(self.relators.len(), n);
        for (r, w) in self.relators.iter().enumerate() {
            for g in 0..n {
                m.set(r, g, w.exponent_sum(g + 1).into());
            }
        }
        m
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|r| r.display_with(&self.generators))
            .collect();
        write!(f, "< {} | {} >", self.generators.join(", "), rels.join(", "))
    }
}

/// Standard presentation of the fundamental group.
///
/// Generators are ordered `x1, y1, ..., xg, yg, mu1, ..., muk, t` for an
/// orientable base and `x1, ..., xg, mu1, ..., muk, t` otherwise, where `muj`
/// is the boundary of the j-th exceptional neighbourhood and `t` the
/// regular fiber.
pub fn fundamental_group_presentation(s: &SeifertInvariants) -> GroupPresentation {
    let g = s.genus() as usize;
    let k = s.fillings().len();
    let mut generators = Vec::new();
    if s.orientable() {
        for i in 1..=g {
            generators.push(format!("x{i}"));
            generators.push(format!("y{i}"));
        }
    } else {
        generators.extend((1..=g).map(|i| format!("x{i}")));
    }
    let mu0 = generators.len();
    generators.extend((1..=k).map(|j| format!("mu{j}")));
    generators.push("t".to_string());
    let gen = FreeWord::generator;
    let t = gen(generators.len());
    let mu = |j: usize| gen(mu0 + j + 1);

    let mut relators = Vec::new();
    let mut product = FreeWord::identity();
    if s.orientable() {
        for i in 0..g {
            let (x, y) = (gen(2 * i + 1), gen(2 * i + 2));
            relators.push(FreeWord::commutator(&x, &t));
            relators.push(FreeWord::commutator(&y, &t));
            product = product * FreeWord::commutator(&x, &y);
        }
    } else {
        for i in 0..g {
            let x = gen(i + 1);
            relators.push(&(&(&x * &t) * &x.inverse()) * &t);
            product = product * x.pow(2);
        }
    }
    for (j, fl) in s.fillings().iter().enumerate() {
        relators.push(FreeWord::commutator(&mu(j), &t));
        relators.push(mu(j).pow(fl.alpha) * t.pow(fl.beta));
        product = product * mu(j);
    }
    relators.push(product);
    GroupPresentation {
        generators,
        relators,
    }
}
