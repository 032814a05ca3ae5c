use std::fs;
use std::path::Path;
use std::str::FromStr;

use hcobord::exactalg::ElementOrder;
use hcobord::families;
use hcobord::magnus::{catalog, CatalogParams, LinkCatalogEntry, MilnorContext, MultiIndex};
use hcobord::manifold::{
    descriptor_from_seifert, descriptor_from_surgery, seifert_linking_form, DescriptorOptions,
    ManifoldDescriptor, SurgeryPresentation,
};
use hcobord::obstruct::{distinguish, obstruct, DistinctionReport, ObstructionReport};
use hcobord::seifert::{fundamental_group_presentation, parse_seifert, SeifertInvariants};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{Caps, Command, FamilyArgs, Source};
use crate::error::CliError;
use crate::render::{descriptor_table, report_table, rules, Table};

pub const SCHEMA_VERSION: u32 = 1;
pub const EXIT_OBSTRUCTED: u8 = 10;

pub struct Output {
    pub text: String,
    pub json: Value,
    pub code: u8,
}

pub fn run(cmd: &Command) -> Result<Output, CliError> {
    match cmd {
        Command::Sfs {
            notation,
            linking_form,
        } => cmd_sfs(notation, *linking_form),
        Command::Link {
            name,
            params,
            file,
            mu,
            degree,
            caps,
        } => cmd_link(name.as_deref(), params, file.as_deref(), mu, *degree, caps),
        Command::Obstruct { source, caps } => cmd_obstruct(source, caps),
        Command::Examples { name, family, caps } => cmd_examples(name, family, caps),
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn seifert(notation: &str) -> Result<SeifertInvariants, CliError> {
    parse_seifert(notation).map_err(|e| CliError::from_seifert(notation, e))
}

fn cmd_sfs(notation: &str, want_linking: bool) -> Result<Output, CliError> {
    let s = seifert(notation)?;
    let h = s.first_homology();
    let fiber = s.regular_fiber_order();
    let euler = s.euler_number().ok();
    let ring = s.rational_cohomology_type();
    let cup = s.standard_triple_cup_form().ok();
    let linking = if want_linking {
        Some(seifert_linking_form(&s).map_err(|e| {
            CliError::Domain(format!("linking form unavailable for {s}: {e}"))
        })?)
    } else {
        None
    };

    let mut t = Table::default();
    t.row("manifold", &s)
        .row("presentation", fundamental_group_presentation(&s))
        .row("H1", &h)
        .row("beta1", h.rank())
        .row("fiber order", &fiber)
        .row("2-torsion", if h.has_even_torsion() { "yes" } else { "no" })
        .row("euler number", euler.as_ref().map_or("-".to_string(), ToString::to_string))
        .row("ring type", ring)
        .row("cup form", cup.as_ref().map_or("-".to_string(), ToString::to_string));
    if let Some(l) = &linking {
        t.row("linking form", l);
    }

    let fiber_json = match &fiber {
        ElementOrder::Finite(n) => to_json(&hcobord::exactalg::json::JsonInt(n.clone())),
        ElementOrder::Infinite => json!("infinite"),
    };
    let mut j = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "sfs",
        "notation": s.to_string(),
        "orientable_base": s.orientable(),
        "genus": s.genus(),
        "fillings": s.fillings().iter().map(|f| [f.alpha, f.beta]).collect::<Vec<_>>(),
        "presentation": to_json(&fundamental_group_presentation(&s)),
        "h1": to_json(&h),
        "betti_one": h.rank(),
        "fiber_order": fiber_json,
        "two_torsion": h.has_even_torsion(),
        "euler_number": euler.map(|e| to_json(&hcobord::exactalg::json::JsonRational(e))),
        "ring_type": to_json(&ring),
        "cup_form": cup.map(|c| to_json(&c)),
    });
    if let Some(l) = linking {
        j["linking_form"] = to_json(&l);
    }
    Ok(Output {
        text: t.render(),
        json: j,
        code: 0,
    })
}

fn parse_params(raw: &[String]) -> Result<CatalogParams, CliError> {
    let mut out = CatalogParams::new();
    for p in raw {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| CliError::Parse(format!("parameter {p:?} is not KEY=VALUE")))?;
        let v: i64 = v
            .trim()
            .parse()
            .map_err(|_| CliError::Parse(format!("parameter {p:?} needs an integer value")))?;
        out.insert(k.trim().to_string(), v);
    }
    Ok(out)
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Domain(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Parse(format!("{}: invalid JSON: {e}", path.display())))
}

fn load_link(name: Option<&str>, params: &[String], file: Option<&Path>) -> Result<LinkCatalogEntry, CliError> {
    match (name, file) {
        (_, Some(path)) => serde_json::from_value(read_json(path)?)
            .map_err(|e| CliError::Parse(format!("{}: invalid link: {e}", path.display()))),
        (Some(name), None) => Ok(catalog(name, &parse_params(params)?)?),
        (None, None) => Err(CliError::Domain("give a catalog name or --file".into())),
    }
}

fn cmd_link(
    name: Option<&str>,
    params: &[String],
    file: Option<&Path>,
    mu: &[String],
    want_degree: bool,
    caps: &Caps,
) -> Result<Output, CliError> {
    let link = load_link(name, params, file)?;
    let indices: Vec<MultiIndex> = mu
        .iter()
        .map(|s| MultiIndex::from_str(s))
        .collect::<Result<_, _>>()?;
    let cap = caps.cap as usize;
    let magnus = caps.magnus_degree as usize;
    let needed = indices
        .iter()
        .map(|i| i.len() - 1)
        .chain(want_degree.then_some(cap))
        .max()
        .unwrap_or(1);
    if needed > magnus {
        return Err(CliError::Domain(format!(
            "degree {needed} exceeds the Magnus degree cap {magnus}; raise --magnus-degree"
        )));
    }
    let ctx = MilnorContext::new(link.longitudes(), needed)?;
    let mut t = Table::default();
    t.row("link", link.name())
        .row("components", link.components())
        .row("linking matrix", link.linking_matrix().to_rows().iter().map(|r| {
            format!("[{}]", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
        }).collect::<Vec<_>>().join(" "));
    for (i, l) in link.longitudes().iter().enumerate() {
        t.row(format!("longitude {}", i + 1), l);
    }
    let mut mu_json = Vec::new();
    for index in &indices {
        let raw = ctx.mu(index)?;
        let bar = ctx.mu_bar(index)?;
        t.row(format!("mu({index})"), format!("{raw}  (mu-bar {bar})"));
        mu_json.push(json!({
            "index": index.to_string(),
            "raw": to_json(&hcobord::exactalg::json::JsonInt(raw)),
            "value": to_json(&hcobord::exactalg::json::JsonInt(bar.value.clone())),
            "modulus": to_json(&hcobord::exactalg::json::JsonInt(bar.modulus.clone())),
        }));
    }
    let degree = if want_degree {
        let d = if link.longitudes().iter().all(|l| l.reduced().is_empty()) {
            hcobord::magnus::MilnorDegree::Infinite
        } else {
            ctx.milnor_degree(cap)?
        };
        t.row("milnor degree", d);
        Some(d)
    } else {
        None
    };
    Ok(Output {
        text: t.render(),
        json: json!({
            "schema_version": SCHEMA_VERSION,
            "command": "link",
            "link": to_json(&link),
            "mu": mu_json,
            "milnor_degree": degree.map(|d| to_json(&d)),
        }),
        code: 0,
    })
}

fn options(caps: &Caps) -> DescriptorOptions {
    DescriptorOptions {
        milnor_cap: caps.cap as usize,
        magnus_degree: caps.magnus_degree as usize,
        primes: Vec::new(),
    }
}

fn parse_framings(arg: &str, n: usize) -> Result<Vec<BigInt>, CliError> {
    let bad = || CliError::Parse(format!("framing {arg:?} is not 0, p=N or a comma list"));
    let arg = arg.trim();
    if let Some(v) = arg.strip_prefix("p=") {
        let v: BigInt = v.trim().parse().map_err(|_| bad())?;
        return Ok(vec![v; n]);
    }
    let list: Vec<BigInt> = arg
        .split(',')
        .map(|s| s.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    match list.len() {
        1 => Ok(vec![list[0].clone(); n]),
        len if len == n => Ok(list),
        len => Err(CliError::Domain(format!("{len} framings for a {n}-component link"))),
    }
}

fn torsion_arg(arg: &str) -> Result<Option<SeifertInvariants>, CliError> {
    if arg.trim() == "trivial" {
        Ok(None)
    } else {
        seifert(arg).map(Some)
    }
}

fn first<T: Clone>(v: &[T], default: Option<T>, flag: &str) -> Result<T, CliError> {
    v.first()
        .cloned()
        .or(default)
        .ok_or_else(|| CliError::Domain(format!("missing --{flag}")))
}

fn example_member(name: &str, fam: &FamilyArgs, opts: &DescriptorOptions) -> Result<ManifoldDescriptor, CliError> {
    let q = torsion_arg(&fam.torsion)?;
    let d = match name {
        "prop4.1" => families::odd_betti_member(
            first(&fam.d, None, "d")?,
            fam.m.unwrap_or(1),
            q.as_ref(),
            opts,
        )?,
        "prop4.2" => families::even_component_member(first(&fam.r, Some(2), "r")?, opts)?,
        "prop4.3" => families::even_betti_member(
            first(&fam.k, None, "k")?,
            fam.m.unwrap_or(2),
            q.as_ref(),
            opts,
        )?,
        "prop4.4" => families::framed_borromean_member(first(&fam.p, None, "p")?, opts)?,
        "whitehead-example" => families::whitehead_zero_surgery(opts)?,
        other => return Err(CliError::Unknown(format!("unknown example {other:?}"))),
    };
    Ok(d)
}

fn load_descriptor(source: &Source, caps: &Caps) -> Result<(String, ManifoldDescriptor), CliError> {
    let c = &source.choice;
    let opts = options(caps);
    if let Some(n) = &c.sfs {
        let s = seifert(n)?;
        return Ok((s.to_string(), descriptor_from_seifert(&s)?));
    }
    if let Some(name) = &c.surgery {
        let mut link = catalog(name, &parse_params(&source.params)?)?;
        if let Some(f) = &source.framing {
            link = link.with_framings(&parse_framings(f, link.components())?)?;
        }
        let framings: Vec<String> = link.framings().iter().map(ToString::to_string).collect();
        let label = format!("surgery on {} with framings ({})", link.name(), framings.join(", "));
        let sp = SurgeryPresentation::from_link(link);
        return Ok((label, descriptor_from_surgery(&sp, &opts)?));
    }
    if let Some(name) = &c.example {
        return Ok((name.clone(), example_member(name, &source.family, &opts)?));
    }
    let path = c.file.as_ref().expect("clap requires one source");
    let value = read_json(path)?;
    let label = path.display().to_string();
    if value.get("beta1").is_some() {
        let d: ManifoldDescriptor = serde_json::from_value(value)
            .map_err(|e| CliError::Parse(format!("{label}: invalid descriptor: {e}")))?;
        return Ok((label, d));
    }
    #[derive(serde::Deserialize)]
    struct SurgeryFile {
        matrix: hcobord::exactalg::IntMatrix,
        link: Option<LinkCatalogEntry>,
    }
    let f: SurgeryFile = serde_json::from_value(value)
        .map_err(|e| CliError::Parse(format!("{label}: invalid surgery presentation: {e}")))?;
    let sp = SurgeryPresentation::new(f.matrix, f.link)?;
    Ok((label, descriptor_from_surgery(&sp, &opts)?))
}

fn report_json(label: &str, d: &ManifoldDescriptor, r: &ObstructionReport) -> Value {
    json!({ "input": label, "descriptor": to_json(d), "report": to_json(r) })
}

fn cmd_obstruct(source: &Source, caps: &Caps) -> Result<Output, CliError> {
    let (label, d) = load_descriptor(source, caps)?;
    let r = obstruct(&d);
    let mut t = Table::default();
    t.row("input", &label);
    descriptor_table(&d, &mut t);
    report_table(&r, &mut t);
    let mut j = report_json(&label, &d, &r);
    j["schema_version"] = json!(SCHEMA_VERSION);
    j["command"] = json!("obstruct");
    Ok(Output {
        text: t.render(),
        json: j,
        code: if r.is_obstructed() { EXIT_OBSTRUCTED } else { 0 },
    })
}

struct Member {
    label: String,
    params: Value,
    descriptor: ManifoldDescriptor,
    report: ObstructionReport,
}

fn cmd_examples(name: &str, fam: &FamilyArgs, caps: &Caps) -> Result<Output, CliError> {
    let opts = options(caps);
    let q = torsion_arg(&fam.torsion)?;
    let mut members: Vec<(String, Value, ManifoldDescriptor)> = Vec::new();
    let mut notes: Vec<String> = Vec::new();
    match name {
        "prop4.1" => {
            let m = fam.m.unwrap_or(1);
            let ds = if fam.d.is_empty() { vec![3, 4, 5] } else { fam.d.clone() };
            for d in ds {
                members.push((format!("M_{d}"), json!({"d": d, "m": m}), families::odd_betti_member(d, m, q.as_ref(), &opts)?));
            }
            notes.push(format!("beta1 = 2m + 1 = {}, rational cup products vanish, Milnor degree d", 2 * m + 1));
        }
        "prop4.2" => {
            let rs = if fam.r.is_empty() { vec![2, 3] } else { fam.r.clone() };
            for r in rs {
                members.push((format!("2r = {}", 2 * r), json!({"r": r}), families::even_component_member(r, &opts)?));
            }
            notes.push("zero surgery on an even number of components with a nonzero triple linking number".into());
        }
        "prop4.3" => {
            let m = fam.m.unwrap_or(2);
            let ks = if fam.k.is_empty() { vec![1, 2, 3] } else { fam.k.clone() };
            for k in ks {
                members.push((format!("M_{k}"), json!({"k": k, "m": m}), families::even_betti_member(k, m, q.as_ref(), &opts)?));
            }
            notes.push(format!("beta1 = 2m = {}, integral triple form content |k|", 2 * m));
        }
        "prop4.4" => {
            let ps = if fam.p.is_empty() { vec![3, 5, 7] } else { fam.p.clone() };
            for p in ps {
                members.push((format!("p = {p}"), json!({"p": p}), families::framed_borromean_member(p, &opts)?));
            }
            notes.push("surgery with framing p on each Borromean component; a nonzero cup product mod p".into());
        }
        "whitehead-example" => {
            members.push(("whitehead".into(), json!({}), families::whitehead_zero_surgery(&opts)?));
            notes.push(
                "zero surgery on the Whitehead link is a circle bundle over the torus, hence Seifert fibered, \
                 yet it has nonvanishing Massey products of length 3: the even-beta1 cup product criterion \
                 cannot be naively extended to higher Massey products"
                    .into(),
            );
        }
        other => return Err(CliError::Unknown(format!("unknown example {other:?}"))),
    }
    let members: Vec<Member> = members
        .into_iter()
        .map(|(label, params, descriptor)| {
            let report = obstruct(&descriptor);
            Member { label, params, descriptor, report }
        })
        .collect();
    let mut comparisons: Vec<(usize, usize, DistinctionReport)> = Vec::new();
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            comparisons.push((i, j, distinguish(&members[i].descriptor, &members[j].descriptor, caps.cutoff)));
        }
    }

    let mut text = String::new();
    let header = ["member", "beta1", "H1", "verdict", "rules", "milnor degree"];
    let mut rows: Vec<[String; 6]> = vec![header.map(String::from)];
    for m in &members {
        rows.push([
            m.label.clone(),
            m.descriptor.beta1.to_string(),
            m.descriptor.first_homology().to_string(),
            m.report.verdict.to_string(),
            rules(&m.report),
            m.descriptor.milnor_degree.map_or("-".into(), |d| d.to_string()),
        ]);
    }
    let widths: Vec<usize> = (0..6).map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0)).collect();
    for r in &rows {
        let cells: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        text.push_str(cells.join("  ").trim_end());
        text.push('\n');
    }
    for (i, j, rep) in &comparisons {
        let how = if rep.distinct {
            rep.evidence
                .iter()
                .map(|e| format!("{} ({} vs {})", e.invariant, e.first, e.second))
                .collect::<Vec<_>>()
                .join("; ")
        } else {
            "not distinguished".into()
        };
        text.push_str(&format!("{} vs {}: {}\n", members[*i].label, members[*j].label, how));
    }
    for n in &notes {
        text.push_str(&format!("note: {n}\n"));
    }
    let json = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "examples",
        "example": name,
        "members": members.iter().map(|m| json!({
            "label": m.label,
            "parameters": m.params,
            "descriptor": to_json(&m.descriptor),
            "report": to_json(&m.report),
        })).collect::<Vec<_>>(),
        "comparisons": comparisons.iter().map(|(i, j, r)| json!({
            "first": members[*i].label,
            "second": members[*j].label,
            "report": to_json(r),
        })).collect::<Vec<_>>(),
        "notes": notes,
    });
    Ok(Output { text, json, code: 0 })
}
