//! Subcommand implementations. Each returns a report or a coded error.

use std::collections::BTreeMap;
use std::fmt;

use embedcheck_core::catalog::{build_whole, default_corpus};
use embedcheck_core::{
    parse_generators, Caps, Characteristic, EmbeddingKind, FactorKind, GroupClass, GroupExpr, Subgroup,
};
use embedcheck_verify::examples::{describe_witness, example_check, ExampleId};
use embedcheck_verify::implications::implication_lattice;
use embedcheck_verify::lemmas::{lemma_check, LemmaId};
use embedcheck_verify::suite::load;
use embedcheck_verify::theorems::{corpus_scan, Mode, ScanReport, TheoremId};
use embedcheck_verify::Tri;
use serde::Serialize;
use serde_json::json;

use crate::report::Report;

/// A failure that maps to exit status 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: String,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> CliError {
        CliError { code: "usage".into(), message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.code, self.message)
    }
}

impl From<embedcheck_core::Error> for CliError {
    fn from(e: embedcheck_core::Error) -> CliError {
        CliError { code: e.code().into(), message: e.to_string() }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Parses `elem=K,lattice=L`; either key may be omitted.
pub fn parse_caps(text: &str) -> CliResult<Caps> {
    let mut caps = Caps::default();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = part.split_once('=').ok_or_else(|| CliError::usage(format!("malformed cap `{part}`")))?;
        let value: usize = value.trim().parse().map_err(|_| CliError::usage(format!("malformed cap value `{part}`")))?;
        match key.trim() {
            "elem" | "element" => caps.element = value,
            "lattice" => caps.lattice = value,
            other => return Err(CliError::usage(format!("unknown cap `{other}`"))),
        }
    }
    Ok(caps)
}

fn group(expr: &str, caps: Caps) -> CliResult<(GroupExpr, Subgroup)> {
    let e: GroupExpr = expr.parse()?;
    let g = build_whole(&e, caps)?;
    Ok((e, g))
}

fn subgroup(g: &Subgroup, gens: &str) -> CliResult<Subgroup> {
    let perms = parse_generators(gens, g.ambient().degree())?;
    Ok(Subgroup::from_perms(g.ambient(), &perms)?)
}

fn tri_of(r: &embedcheck_core::Result<bool>) -> Tri {
    Tri::from(r)
}

#[derive(Serialize)]
struct SubgroupInfo {
    order: usize,
    generators: Vec<String>,
}

impl From<&Subgroup> for SubgroupInfo {
    fn from(s: &Subgroup) -> Self {
        SubgroupInfo { order: s.order(), generators: s.generator_perms().iter().map(|p| p.to_string()).collect() }
    }
}

pub fn analyze(expr: &str, caps: Caps) -> CliResult<Report> {
    let (e, g) = group(expr, caps)?;
    let mut report = Report::new("analyze", json!({ "group": e.to_string() }));
    let primes = g.primes();
    let mut sylow = Vec::new();
    for &p in &primes {
        let s = g.sylow(p);
        let count = g.sylow_all(p).len();
        report.line(format!("Sylow {p}: order {}, {count} conjugates", s.order()));
        sylow.push(json!({ "prime": p, "order": s.order(), "count": count, "representative": SubgroupInfo::from(&s) }));
    }
    let mut characteristic = BTreeMap::new();
    for (name, which) in [
        ("center", Characteristic::Center),
        ("derived", Characteristic::Derived),
        ("fitting", Characteristic::Fitting),
        ("frattini", Characteristic::Frattini),
        ("layer", Characteristic::Layer),
        ("f_star", Characteristic::FStar),
    ] {
        let value = match g.characteristic(which) {
            Ok(s) => {
                report.line(format!("{name}: order {}", s.order()));
                json!(SubgroupInfo::from(&s))
            }
            Err(err) => json!({ "indeterminate": err.code() }),
        };
        characteristic.insert(name, value);
    }
    let mut classes = BTreeMap::new();
    let mut named = vec![
        ("nilpotent".to_string(), GroupClass::Nilpotent),
        ("supersolvable".to_string(), GroupClass::Supersolvable),
        ("solvable".to_string(), GroupClass::Solvable),
        ("a4_free".to_string(), GroupClass::A4Free),
    ];
    named.extend(primes.iter().map(|&p| (format!("{p}_nilpotent"), GroupClass::PNilpotent(p))));
    for (name, class) in named {
        let t = tri_of(&g.is_class(class));
        report.line(format!("{name}: {}", t.label()));
        classes.insert(name, t);
    }
    let chief = g.chief_series().map(|c| {
        c.factors
            .iter()
            .map(|f| match f.kind {
                FactorKind::ElementaryAbelian { p, rank } => json!({ "order": f.order, "prime": p, "rank": rank }),
                FactorKind::NonAbelian => json!({ "order": f.order, "nonabelian": true }),
            })
            .collect::<Vec<_>>()
    });
    report.line(format!("group {e}: order {}, primes {:?}", g.order(), primes));
    report.lines.rotate_right(1);
    Ok(report.result(json!({
        "group": e.to_string(),
        "degree": g.ambient().degree(),
        "order": g.order(),
        "primes": primes,
        "sylow": sylow,
        "characteristic": characteristic,
        "classes": classes,
        "chief_factors": chief.unwrap_or_default(),
    })))
}

pub fn check(expr: &str, gens: &str, property: &str, caps: Caps) -> CliResult<Report> {
    let kind: EmbeddingKind =
        property.parse().map_err(|e: embedcheck_core::embeddings::UnknownKind| CliError {
            code: "unknown-property".into(),
            message: e.to_string(),
        })?;
    let (e, g) = group(expr, caps)?;
    let h = subgroup(&g, gens)?;
    let mut report =
        Report::new("check", json!({ "group": e.to_string(), "subgroup": gens, "property": kind.cli_name() }));
    let (value, witness, code) = match g.evaluate(&h, kind) {
        Ok((b, w)) => (Tri::from(b), Some(describe_witness(&w)), None),
        Err(err) => (Tri::Indeterminate, None, Some(err.code())),
    };
    let witness_order = g.embedding_witness(&h, kind).ok().flatten().map(|k| k.order());
    report.line(format!("{} of {} in {e}: {}", kind.cli_name(), h.describe(), value.label()));
    if let Some(w) = &witness {
        report.line(format!("witness: {w}"));
    }
    Ok(report.result(json!({
        "group": e.to_string(),
        "group_order": g.order(),
        "subgroup": SubgroupInfo::from(&h),
        "property": kind.tag(),
        "value": value,
        "witness": witness,
        "witness_order": witness_order,
        "indeterminate_reason": code,
    })))
}

pub fn vector(expr: &str, gens: &str, caps: Caps) -> CliResult<Report> {
    let (e, g) = group(expr, caps)?;
    let h = subgroup(&g, gens)?;
    let mut report = Report::new("vector", json!({ "group": e.to_string(), "subgroup": gens }));
    let v = g.property_vector(&h);
    let mut properties = BTreeMap::new();
    for kind in EmbeddingKind::ALL {
        let flag = v.get(kind);
        let t = tri_of(&flag);
        let witness = v.witnesses.get(&kind).map(describe_witness);
        report.line(format!("{:<22} {}", kind.cli_name(), t.label()));
        properties.insert(
            kind.tag(),
            json!({ "value": t, "witness": witness, "indeterminate_reason": flag.err().map(|e| e.code()) }),
        );
    }
    let triangle = tri_of(&g.satisfies_triangle(&h));
    report.line(format!("{:<22} {}", "triangle", triangle.label()));
    Ok(report.result(json!({
        "group": e.to_string(),
        "subgroup": SubgroupInfo::from(&h),
        "properties": properties,
        "triangle": triangle,
    })))
}

pub fn examples(id: Option<&str>, caps: Caps) -> CliResult<Report> {
    let ids = match id {
        Some(s) => vec![s.parse::<ExampleId>().map_err(CliError::usage)?],
        None => ExampleId::ALL.to_vec(),
    };
    let mut report = Report::new("examples", json!({ "id": id }));
    let mut out = Vec::new();
    for id in ids {
        let r = example_check(id, caps)?;
        report.line(format!("{id} {}: {}", r.group, if r.agrees { "agrees" } else { "DISAGREES" }));
        for c in &r.claims {
            report.line(format!("  {} expected {} computed {}", c.claim, c.expected, c.computed.label()));
        }
        for o in r.observations.iter().filter(|o| !o.agrees) {
            report.line(format!("  note: {}: stated {}, computed {}", o.statement, o.stated, o.computed));
        }
        report.ok &= r.agrees;
        out.push(r);
    }
    report.count("examples", out.len() as u64);
    report.count("disagreements", out.iter().filter(|r| !r.agrees).count() as u64);
    Ok(report.result(out))
}

pub fn verify_lemma(id: &str, max_order: u128, caps: Caps) -> CliResult<Report> {
    let lemma: LemmaId = id.parse().map_err(CliError::usage)?;
    let groups = load(&default_corpus(max_order), caps);
    let r = lemma_check(lemma, &groups, caps);
    let mut report = Report::new("verify", json!({ "lemma": lemma.name(), "max_order": max_order as u64 }));
    report.line(format!(
        "{lemma}: {} instances, {} passed, {} failed, {} skipped",
        r.instances, r.passed, r.failed, r.skipped
    ));
    for (clause, t) in &r.clauses {
        report.line(format!("  {clause}: {} instances, {} failed, {} skipped", t.instances, t.failed, t.skipped));
    }
    if let Some(f) = &r.first_failure {
        report.line(format!("first failure: {f}"));
    }
    report.ok = r.ok();
    report.count("instances", r.instances);
    report.count("failed", r.failed);
    report.count("skipped", r.skipped);
    Ok(report.result(r))
}

pub fn verify_implications(max_order: u128, caps: Caps) -> CliResult<Report> {
    let groups = load(&default_corpus(max_order), caps);
    let r = implication_lattice(&groups);
    let mut report = Report::new("verify", json!({ "implications": true, "max_order": max_order as u64 }));
    report.line(format!("{} groups, {} pairs", r.groups, r.pairs));
    for (edge, t) in &r.edges {
        report.line(format!("  {edge}: {} violations, {} skipped", t.failed, t.skipped));
    }
    report.ok = r.violations() == 0;
    report.count("pairs", r.pairs);
    report.count("violations", r.violations());
    Ok(report.result(r))
}

fn scan_report(command: &str, invocation: serde_json::Value, r: ScanReport) -> Report {
    let mut report = Report::new(command, invocation);
    report.line(format!(
        "{} verdicts: {} consistent, {} inconsistent, {} indeterminate",
        r.verdicts.len(),
        r.counts.consistent,
        r.counts.inconsistent,
        r.counts.indeterminate
    ));
    for (thm, c) in &r.per_theorem {
        report.line(format!(
            "  {thm}: {} consistent, {} inconsistent, {} indeterminate",
            c.consistent, c.inconsistent, c.indeterminate
        ));
    }
    for v in &r.inconsistent {
        report.line(format!("INCONSISTENT {} {}", v.group_id, v.theorem));
    }
    report.ok = r.counts.inconsistent == 0;
    report.count("verdicts", r.verdicts.len() as u64);
    report.count("consistent", r.counts.consistent);
    report.count("inconsistent", r.counts.inconsistent);
    report.count("indeterminate", r.counts.indeterminate);
    report.result(r)
}

pub fn verify_theorem(thm: TheoremId, max_order: u128, mode: Mode, caps: Caps) -> CliResult<Report> {
    let groups = load(&default_corpus(max_order), caps);
    let r = corpus_scan(&groups, &[thm], mode);
    let invocation = json!({ "theorem": thm.to_string(), "max_order": max_order as u64, "mode": mode });
    Ok(scan_report("verify", invocation, r))
}

pub fn scan(max_order: u128, mode: Mode, caps: Caps) -> CliResult<Report> {
    let groups = load(&default_corpus(max_order), caps);
    let r = corpus_scan(&groups, &TheoremId::default_grid(), mode);
    Ok(scan_report("scan", json!({ "max_order": max_order as u64, "mode": mode }), r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caps_parse() {
        assert_eq!(parse_caps("elem=100,lattice=7").unwrap(), Caps { element: 100, lattice: 7 });
        assert_eq!(parse_caps("lattice=9").unwrap().element, Caps::default().element);
        assert_eq!(parse_caps("").unwrap(), Caps::default());
        assert_eq!(parse_caps("elem=x").unwrap_err().code, "usage");
        assert_eq!(parse_caps("depth=3").unwrap_err().code, "usage");
    }

    #[test]
    fn check_reports_the_normal_witness() {
        let r = check("Sym(4)", "(1 4)", "weakly-tau-embedded", Caps::default()).unwrap();
        assert_eq!(r.result["value"], json!("true"));
        assert_eq!(r.result["witness_order"], json!(12));
    }

    #[test]
    fn unknown_property_is_a_coded_error() {
        let e = check("Sym(4)", "(1 4)", "weakly-embedded", Caps::default()).unwrap_err();
        assert_eq!(e.code, "unknown-property");
    }

    #[test]
    fn bad_generators_are_coded_errors() {
        assert_eq!(vector("Sym(4)", "(1 5)", Caps::default()).unwrap_err().code, "point-out-of-range");
        assert_eq!(vector("Sym(4)", "(1 2", Caps::default()).unwrap_err().code, "cycle-syntax");
        assert_eq!(analyze("Sym(", Caps::default()).unwrap_err().code, "parse");
    }
}
