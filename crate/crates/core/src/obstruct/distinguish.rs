use serde::{Deserialize, Serialize};

use super::linking_forms_isomorphic;
use crate::forms::FormError;
use crate::magnus::MilnorDegree;
use crate::manifold::ManifoldDescriptor;

/// One invariant on which two descriptors were compared and differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub invariant: String,
    pub first: String,
    pub second: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinctionReport {
    pub distinct: bool,
    pub evidence: Vec<Evidence>,
    pub caveats: Vec<String>,
}

/// Compares homology cobordism invariants. Only differences that certify
/// distinct classes are reported as evidence.
pub fn distinguish(d1: &ManifoldDescriptor, d2: &ManifoldDescriptor, cutoff: u64) -> DistinctionReport {
    let mut evidence = Vec::new();
    let mut caveats = Vec::new();
    let mut push = |invariant: &str, a: String, b: String| {
        evidence.push(Evidence {
            invariant: invariant.to_string(),
            first: a,
            second: b,
        })
    };

    let (h1, h2) = (d1.first_homology(), d2.first_homology());
    let same_homology = h1.is_isomorphic(&h2);
    if !same_homology {
        push("H1", h1.to_string(), h2.to_string());
    }

    if let (true, Some(l1), Some(l2)) = (same_homology, &d1.linking_form, &d2.linking_form) {
        match linking_forms_isomorphic(l1, l2, cutoff) {
            Ok(true) => {}
            Ok(false) => push("linking form", l1.to_string(), l2.to_string()),
            Err(FormError::CutoffExceeded { order, cutoff }) => caveats.push(format!(
                "linking forms not compared: torsion order {order} exceeds cutoff {cutoff}"
            )),
            Err(e) => caveats.push(format!("linking forms not compared: {e}")),
        }
    }

    if let (Some(f1), Some(f2)) = (&d1.cup_form_q, &d2.cup_form_q) {
        if f1.dimension() == f2.dimension() {
            if f1.is_zero() != f2.is_zero() {
                push("rational cup form", describe_zero(f1.is_zero()), describe_zero(f2.is_zero()));
            } else if let (Ok(r1), Ok(r2)) = (f1.radical_dimension(), f2.radical_dimension()) {
                if r1 != r2 {
                    push(
                        "rational cup form radical dimension",
                        r1.to_string(),
                        r2.to_string(),
                    );
                }
            }
        }
    }

    if let (Some(f1), Some(f2)) = (&d1.cup_form_z, &d2.cup_form_z) {
        if f1.dimension() == f2.dimension() {
            if let (Ok(c1), Ok(c2)) = (f1.content(), f2.content()) {
                if c1 != c2 {
                    push("integral cup form content", c1.to_string(), c2.to_string());
                }
            }
        }
    }

    for (p, f1) in &d1.cup_forms_mod_p {
        if let Some(f2) = d2.cup_forms_mod_p.get(p) {
            if f1.dimension() == f2.dimension() && f1.is_zero() != f2.is_zero() {
                push(
                    &format!("mod {p} cup form"),
                    describe_zero(f1.is_zero()),
                    describe_zero(f2.is_zero()),
                );
            }
        }
    }

    match (d1.milnor_degree, d2.milnor_degree) {
        (Some(MilnorDegree::Exact(a)), Some(MilnorDegree::Exact(b))) if a != b => {
            push("Milnor degree", a.to_string(), b.to_string());
        }
        (Some(a), Some(b)) if a != b => caveats.push(format!(
            "Milnor degrees {a} and {b} are not both exact, so they are not compared"
        )),
        _ => {}
    }

    DistinctionReport {
        distinct: !evidence.is_empty(),
        evidence,
        caveats,
    }
}

fn describe_zero(zero: bool) -> String {
    if zero { "zero" } else { "nonzero" }.to_string()
}
