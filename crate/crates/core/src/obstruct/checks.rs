use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use super::{FiredRule, ObstructionReport, RuleTag, Verdict, Witness};
use crate::forms::AlternatingTrilinearForm;
use crate::manifold::{ManifoldDescriptor, Provenance};

/// Whether a rational triple form on `H^1(M; Q)` is isomorphic to the form
/// of `S^1 × Σ_g` (odd dimension) or to the zero form (even dimension).
/// `None` when the question is not decided (odd dimension at least 5 with
/// zero radical).
pub fn rational_form_equivalent_to_standard(form: &AlternatingTrilinearForm) -> Option<bool> {
    let n = form.dimension();
    if n.is_multiple_of(2) || n == 1 {
        return Some(form.is_zero());
    }
    if n == 3 {
        return Some(!form.is_zero());
    }
    match form.radical_dimension() {
        Ok(0) => None,
        _ => Some(false),
    }
}

fn single_surgery(d: &ManifoldDescriptor) -> Option<(&str, usize, &[BigInt])> {
    match d.provenance.as_slice() {
        [Provenance::Surgery {
            link,
            components,
            framings,
        }] => Some((link.as_str(), *components, framings.as_slice())),
        _ => None,
    }
}

/// Rational cup product test for manifolds without 2-torsion.
///
/// A Seifert fibered space with no 2-torsion has the rational cohomology
/// ring of `S^1 × Σ` (odd `β1`) or of a connected sum of `S^1 × S^2`
/// (even `β1`). So a nonzero form with even `β1`, or a nonzero radical
/// with odd `β1 ≥ 3`, rules out a Seifert representative.
pub fn check_rational_cup_form(d: &ManifoldDescriptor) -> ObstructionReport {
    if d.torsion.has_even_torsion() {
        return ObstructionReport::inapplicable("H1 has 2-torsion, so the rational cup form test does not apply");
    }
    let Some(form) = &d.cup_form_q else {
        return ObstructionReport::inapplicable("no rational cup form available");
    };
    if d.beta1 == 0 {
        return ObstructionReport::inapplicable("beta1 = 0, so there is no rational cup form to test");
    }
    let b = d.beta1;
    if b.is_multiple_of(2) {
        let Some(((i, j, k), value)) = form.first_nonzero() else {
            return ObstructionReport::consistent(vec![format!(
                "beta1 = {b} is even and the rational cup form vanishes"
            )]);
        };
        let witness = Witness::Triple {
            indices: [i, j, k],
            value,
        };
        let mut rules = vec![FiredRule {
            tag: RuleTag::EvenBettiCupForm,
            witness: witness.clone(),
            explanation: format!("beta1 = {b} is even but the rational cup form is nonzero"),
        }];
        if let Some((_, n, framings)) = single_surgery(d) {
            if n % 2 == 0 && n == b && framings.iter().all(Zero::is_zero) {
                rules.push(FiredRule {
                    tag: RuleTag::EvenComponentZeroSurgery,
                    witness,
                    explanation: format!(
                        "zero surgery on a {n}-component link with a nonzero triple linking number"
                    ),
                });
            }
        }
        return ObstructionReport::obstructed(rules, Vec::new());
    }
    if b == 1 {
        return ObstructionReport::consistent(vec!["beta1 = 1, so every triple form vanishes".into()]);
    }
    let radical = form.radical().expect("rational form");
    if let Some(vector) = radical.into_iter().next() {
        return ObstructionReport::obstructed(
            vec![FiredRule {
                tag: RuleTag::OddBettiRadical,
                witness: Witness::Radical { vector },
                explanation: format!(
                    "beta1 = {b} is odd but some nonzero class has vanishing cup product with all of H^1(M; Q)"
                ),
            }],
            Vec::new(),
        );
    }
    if b == 3 {
        ObstructionReport::consistent(vec![
            "beta1 = 3 and the rational cup form is nonzero, hence equivalent to the form of S1 x T2".into(),
        ])
    } else {
        ObstructionReport::consistent(vec![format!(
            "beta1 = {b}: the radical vanishes, but isomorphism with the form of S1 x Sigma_{} is not decided",
            (b - 1) / 2
        )])
    }
}

/// Mod-p cup product test for rational homology spheres: Seifert fibered
/// rational homology spheres have vanishing cup products on `H^1(M; Z/p)`
/// for odd `p`.
pub fn check_mod_p_cup_form(d: &ManifoldDescriptor) -> ObstructionReport {
    if d.beta1 > 0 {
        return ObstructionReport::inapplicable("beta1 > 0, so the mod-p test does not apply");
    }
    let forms: Vec<(u64, &AlternatingTrilinearForm)> = d
        .cup_forms_mod_p
        .iter()
        .filter(|(p, _)| **p != 2 && d.mod_p_dimension(**p) > 0)
        .map(|(p, f)| (*p, f))
        .collect();
    if forms.is_empty() {
        return ObstructionReport::inapplicable("no mod-p cup form available for an odd prime dividing the torsion");
    }
    let mut rules = Vec::new();
    let mut notes = Vec::new();
    for (p, form) in forms {
        let Some(((i, j, k), value)) = form.first_nonzero() else {
            notes.push(format!("mod {p} cup form vanishes"));
            continue;
        };
        let witness = Witness::ModPTriple {
            p,
            indices: [i, j, k],
            value: value.to_integer(),
        };
        rules.push(FiredRule {
            tag: RuleTag::ModPCupForm,
            witness: witness.clone(),
            explanation: format!("rational homology sphere with a nonzero cup product mod {p}"),
        });
        if let Some((link, _, framings)) = single_surgery(d) {
            let bp = BigInt::from(p);
            if link.starts_with("borromean")
                && framings.iter().all(|f| !f.is_zero() && f.is_multiple_of(&bp))
            {
                rules.push(FiredRule {
                    tag: RuleTag::FramedBorromean,
                    witness,
                    explanation: format!("surgery on the Borromean rings with framings divisible by {p}"),
                });
            }
        }
    }
    if rules.is_empty() {
        ObstructionReport::consistent(notes)
    } else {
        ObstructionReport::obstructed(rules, notes)
    }
}

/// Runs every test and merges the results. The verdict is `Obstructed` when
/// any rule fires and otherwise records that the necessary checks passed.
pub fn obstruct(d: &ManifoldDescriptor) -> ObstructionReport {
    let mut fired = Vec::new();
    let mut notes = Vec::new();
    for (name, report) in [
        ("rational cup form", check_rational_cup_form(d)),
        ("mod-p cup form", check_mod_p_cup_form(d)),
    ] {
        notes.push(format!("{name}: {}", report.verdict));
        notes.extend(report.notes.into_iter().map(|n| format!("{name}: {n}")));
        fired.extend(report.fired_rules);
    }
    if fired.is_empty() {
        if let Some(crate::magnus::MilnorDegree::Exact(k)) = d.milnor_degree {
            if k > 2 && d.beta1.is_multiple_of(2) {
                notes.push(format!(
                    "nonvanishing Massey products of length {k} do not obstruct: Seifert fibered spaces with even beta1 can have them"
                ));
            }
        }
        ObstructionReport::consistent(notes)
    } else {
        ObstructionReport::obstructed(fired, notes)
    }
}

/// Recomputes a witness from the descriptor; used to double-check reports.
pub(crate) fn witness_holds(d: &ManifoldDescriptor, w: &Witness) -> bool {
    match w {
        Witness::Triple { indices: [i, j, k], value } => d
            .cup_form_q
            .as_ref()
            .is_some_and(|f| !value.is_zero() && &f.value(*i, *j, *k) == value),
        Witness::Radical { vector } => d.cup_form_q.as_ref().is_some_and(|f| {
            let n = f.dimension();
            vector.len() == n
                && vector.iter().any(|v| !v.is_zero())
                && (0..n).all(|a| {
                    (0..n).all(|b| {
                        let total = (0..n).fold(BigRational::zero(), |acc, c| {
                            acc + &vector[c] * f.value(c, a, b)
                        });
                        total.is_zero()
                    })
                })
        }),
        Witness::ModPTriple { p, indices: [i, j, k], value } => d
            .cup_forms_mod_p
            .get(p)
            .is_some_and(|f| !value.is_zero() && f.value(*i, *j, *k).to_integer() == *value),
    }
}

impl ObstructionReport {
    /// True when every witness in the report checks out on `d`.
    pub fn witnesses_hold(&self, d: &ManifoldDescriptor) -> bool {
        (self.verdict != Verdict::Obstructed || !self.fired_rules.is_empty())
            && self.fired_rules.iter().all(|r| witness_holds(d, &r.witness))
    }
}
