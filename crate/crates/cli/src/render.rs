//! Plain-text layout helpers.

use hcobord::manifold::ManifoldDescriptor;
use hcobord::obstruct::ObstructionReport;

#[derive(Default)]
pub struct Table {
    rows: Vec<(String, String)>,
}

impl Table {
    pub fn row(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.rows.push((key.into(), value.to_string()));
        self
    }

    pub fn render(&self) -> String {
        let width = self.rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        self.rows
            .iter()
            .map(|(k, v)| format!("{k:<width$}  {v}\n"))
            .collect()
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), ToString::to_string)
}

pub fn descriptor_table(d: &ManifoldDescriptor, t: &mut Table) {
    t.row("beta1", d.beta1)
        .row("H1", d.first_homology())
        .row("linking form", opt(&d.linking_form))
        .row("cup form (Q)", opt(&d.cup_form_q))
        .row("cup form (Z)", opt(&d.cup_form_z));
    for (p, f) in &d.cup_forms_mod_p {
        t.row(format!("cup form mod {p}"), f);
    }
    t.row("milnor degree", opt(&d.milnor_degree))
        .row("ring type", opt(&d.ring_type));
}

pub fn report_table(r: &ObstructionReport, t: &mut Table) {
    t.row("verdict", r.verdict);
    for rule in &r.fired_rules {
        t.row(format!("fired {}", rule.tag), format!("{}; {}", rule.explanation, rule.witness));
    }
    for n in &r.notes {
        t.row("note", n);
    }
}

pub fn rules(r: &ObstructionReport) -> String {
    if r.fired_rules.is_empty() {
        return "-".into();
    }
    r.fired_tags().iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}
