//! Obstructions to a homology cobordism class containing a Seifert fibered
//! space, and invariants that separate classes.

mod checks;
mod distinguish;
mod isomorphism;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::exactalg::json::{big_int, rational, rational_vec};

pub use checks::{
    check_mod_p_cup_form, check_rational_cup_form, obstruct, rational_form_equivalent_to_standard,
};
pub use distinguish::{distinguish, DistinctionReport, Evidence};
pub use isomorphism::{find_isometry, linking_forms_isomorphic, DEFAULT_CUTOFF};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Obstructed,
    ConsistentNecessaryChecksPassed,
    Inapplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Obstructed => "obstructed",
            Verdict::ConsistentNecessaryChecksPassed => "consistent (necessary checks passed)",
            Verdict::Inapplicable => "inapplicable",
        })
    }
}

/// Stable rule identifiers used in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RuleTag {
    #[serde(rename = "Thm1.1")]
    EvenBettiCupForm,
    #[serde(rename = "Cor1.2")]
    OddBettiRadical,
    #[serde(rename = "Thm1.3")]
    ModPCupForm,
    #[serde(rename = "Prop4.2")]
    EvenComponentZeroSurgery,
    #[serde(rename = "Prop4.4")]
    FramedBorromean,
}

impl RuleTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            RuleTag::EvenBettiCupForm => "Thm1.1",
            RuleTag::OddBettiRadical => "Cor1.2",
            RuleTag::ModPCupForm => "Thm1.3",
            RuleTag::EvenComponentZeroSurgery => "Prop4.2",
            RuleTag::FramedBorromean => "Prop4.4",
        }
    }
}

impl fmt::Display for RuleTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Data that certifies a fired rule; indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A nonzero value of the rational triple form.
    Triple {
        indices: [usize; 3],
        #[serde(with = "rational")]
        value: BigRational,
    },
    /// A nonzero class in the radical of the rational triple form.
    Radical {
        #[serde(with = "rational_vec")]
        vector: Vec<BigRational>,
    },
    /// A nonzero value of the mod-p triple form.
    ModPTriple {
        p: u64,
        indices: [usize; 3],
        #[serde(with = "big_int")]
        value: BigInt,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Triple { indices: [i, j, k], value } => {
                write!(f, "cup form value on (e{i}, e{j}, e{k}) is {value}")
            }
            Witness::Radical { vector } => {
                let v: Vec<String> = vector.iter().map(ToString::to_string).collect();
                write!(f, "radical contains ({})", v.join(", "))
            }
            Witness::ModPTriple { p, indices: [i, j, k], value } => {
                write!(f, "mod {p} cup form value on (e{i}, e{j}, e{k}) is {value}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiredRule {
    pub tag: RuleTag,
    pub witness: Witness,
    pub explanation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub verdict: Verdict,
    pub fired_rules: Vec<FiredRule>,
    pub notes: Vec<String>,
}

impl ObstructionReport {
    fn consistent(notes: Vec<String>) -> Self {
        ObstructionReport {
            verdict: Verdict::ConsistentNecessaryChecksPassed,
            fired_rules: Vec::new(),
            notes,
        }
    }

    fn inapplicable(note: impl Into<String>) -> Self {
        ObstructionReport {
            verdict: Verdict::Inapplicable,
            fired_rules: Vec::new(),
            notes: vec![note.into()],
        }
    }

    fn obstructed(fired_rules: Vec<FiredRule>, notes: Vec<String>) -> Self {
        ObstructionReport {
            verdict: Verdict::Obstructed,
            fired_rules,
            notes,
        }
    }

    pub fn is_obstructed(&self) -> bool {
        self.verdict == Verdict::Obstructed
    }

    pub fn fired_tags(&self) -> Vec<RuleTag> {
        self.fired_rules.iter().map(|r| r.tag).collect()
    }
}
