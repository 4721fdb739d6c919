//! Universal properties of subgroup embeddings, formations and hypercenters,
//! each checked over every admissible instance in a corpus.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use embedcheck_core::arith::{gcd, gcd_u128, prime_power_product};
use embedcheck_core::catalog::build_whole;
use embedcheck_core::embeddings::{EmbeddingKind, GeneratedPartKind};
use embedcheck_core::{
    Caps, Characteristic, FormationSelector, GroupClass, GroupExpr, OSelector, QuotientMap, Result, Subgroup,
};
use serde::Serialize;

use crate::suite::{per_group, Loaded, Tally};

use EmbeddingKind::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LemmaId {
    L2_1,
    L2_2,
    L2_3,
    L2_4,
    L2_5,
    L2_6,
    L2_7,
    L2_8,
    L2_9,
    L2_10,
    L2_12,
    L2_14,
    L2_17,
    L2_18,
    L2_19,
    L2_21,
    L2_22,
}

impl LemmaId {
    pub const ALL: [LemmaId; 17] = [
        LemmaId::L2_1,
        LemmaId::L2_2,
        LemmaId::L2_3,
        LemmaId::L2_4,
        LemmaId::L2_5,
        LemmaId::L2_6,
        LemmaId::L2_7,
        LemmaId::L2_8,
        LemmaId::L2_9,
        LemmaId::L2_10,
        LemmaId::L2_12,
        LemmaId::L2_14,
        LemmaId::L2_17,
        LemmaId::L2_18,
        LemmaId::L2_19,
        LemmaId::L2_21,
        LemmaId::L2_22,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::L2_1 => "L2_1",
            LemmaId::L2_2 => "L2_2",
            LemmaId::L2_3 => "L2_3",
            LemmaId::L2_4 => "L2_4",
            LemmaId::L2_5 => "L2_5",
            LemmaId::L2_6 => "L2_6",
            LemmaId::L2_7 => "L2_7",
            LemmaId::L2_8 => "L2_8",
            LemmaId::L2_9 => "L2_9",
            LemmaId::L2_10 => "L2_10",
            LemmaId::L2_12 => "L2_12",
            LemmaId::L2_14 => "L2_14",
            LemmaId::L2_17 => "L2_17",
            LemmaId::L2_18 => "L2_18",
            LemmaId::L2_19 => "L2_19",
            LemmaId::L2_21 => "L2_21",
            LemmaId::L2_22 => "L2_22",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LemmaId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        LemmaId::ALL.into_iter().find(|l| l.name() == s).ok_or_else(|| format!("unknown lemma `{s}`"))
    }
}

/// Per-clause tallies for one lemma over a corpus.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub lemma: String,
    pub groups: usize,
    pub instances: u64,
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
    pub first_failure: Option<String>,
    pub clauses: BTreeMap<String, Tally>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn skipped_fraction(&self) -> f64 {
        if self.instances == 0 {
            0.0
        } else {
            self.skipped as f64 / self.instances as f64
        }
    }
}

type Clauses = BTreeMap<String, Tally>;

fn rec(c: &mut Clauses, clause: &str, outcome: Result<bool>, detail: impl FnOnce() -> String) {
    c.entry(clause.to_string()).or_default().record(outcome, detail);
}

fn skip(c: &mut Clauses, clause: &str) {
    c.entry(clause.to_string()).or_default().skip();
}

/// Lazily built per-group data shared by the clauses of one lemma.
struct Ctx<'a> {
    id: &'a str,
    g: &'a Subgroup,
    subs: Option<Result<Arc<Vec<Subgroup>>>>,
    quotients: Option<Result<Arc<Vec<QuotientMap>>>>,
}

impl<'a> Ctx<'a> {
    fn new(id: &'a str, g: &'a Subgroup) -> Self {
        Ctx { id, g, subs: None, quotients: None }
    }

    fn subgroups(&mut self) -> Result<Arc<Vec<Subgroup>>> {
        let g = self.g;
        self.subs.get_or_insert_with(|| g.all_subgroups()).clone()
    }

    /// Subgroups to range `H` over: all of them, else the subnormal ones.
    fn candidates(&mut self) -> Result<Arc<Vec<Subgroup>>> {
        match self.subgroups() {
            Ok(s) => Ok(s),
            Err(_) => self.g.subnormal_subgroups(),
        }
    }

    /// Quotient maps by every proper nontrivial normal subgroup.
    fn quotients(&mut self) -> Result<Arc<Vec<QuotientMap>>> {
        let g = self.g;
        self.quotients
            .get_or_insert_with(|| {
                let normals = g.normal_subgroups()?;
                let maps = normals
                    .iter()
                    .filter(|n| !n.is_trivial() && n.order() != g.order())
                    .map(|n| g.quotient(n))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Arc::new(maps))
            })
            .clone()
    }

    fn at(&self, h: &Subgroup) -> String {
        format!("{}: H = {}", self.id, h.describe())
    }
}

fn is_p_subgroup(h: &Subgroup) -> Option<u64> {
    match h.primes().as_slice() {
        [p] => Some(*p),
        _ => None,
    }
}

fn in_class_mod(g: &Subgroup, n: &Subgroup, f: FormationSelector) -> Result<bool> {
    Ok(g.residual(f)?.is_subgroup_of(n))
}

/// Runs one lemma over loaded corpus groups.
pub fn lemma_check(id: LemmaId, groups: &[Loaded], caps: Caps) -> SuiteReport {
    let mut clauses = Clauses::new();
    let mut n_groups = groups.len();
    if id == LemmaId::L2_18 {
        n_groups += 1;
        let square = GroupExpr::DirectProduct(Box::new(GroupExpr::Alt(5)), Box::new(GroupExpr::Alt(5)));
        match build_whole(&square, caps) {
            Ok(g) => simple_factors(&square.to_string(), &g, &mut clauses, Some(4)),
            Err(_) => skip(&mut clauses, "subnormal subgroups are factor products"),
        }
    }
    let parts = per_group(groups, |l| {
        let mut c = Clauses::new();
        match &l.group {
            Ok(g) => {
                let mut ctx = Ctx::new(&l.id, g);
                run(id, &mut ctx, &mut c);
            }
            Err(_) => skip(&mut c, "group construction"),
        }
        c
    });
    for part in parts {
        for (k, t) in part {
            clauses.entry(k).or_default().merge(t);
        }
    }
    let mut report = SuiteReport {
        lemma: id.to_string(),
        groups: n_groups,
        instances: 0,
        passed: 0,
        failed: 0,
        skipped: 0,
        first_failure: None,
        clauses,
    };
    for t in report.clauses.values() {
        report.instances += t.instances;
        report.passed += t.passed;
        report.failed += t.failed;
        report.skipped += t.skipped;
        if report.first_failure.is_none() {
            report.first_failure = t.failures.first().cloned();
        }
    }
    report
}

fn run(id: LemmaId, ctx: &mut Ctx, c: &mut Clauses) {
    let r = match id {
        LemmaId::L2_1 => l2_1(ctx, c),
        LemmaId::L2_2 => l2_2(ctx, c),
        LemmaId::L2_3 => l2_3(ctx, c),
        LemmaId::L2_4 => l2_4(ctx, c),
        LemmaId::L2_5 => l2_5(ctx, c),
        LemmaId::L2_6 => l2_6(ctx, c),
        LemmaId::L2_7 => l2_7(ctx, c),
        LemmaId::L2_8 => l2_8(ctx, c),
        LemmaId::L2_9 => weak_closure(ctx, c, WeaklySEmbedded),
        LemmaId::L2_10 => weak_closure(ctx, c, WeaklyTauEmbedded),
        LemmaId::L2_12 => l2_12(ctx, c),
        LemmaId::L2_14 => l2_14(ctx, c),
        LemmaId::L2_17 => l2_17(ctx, c),
        LemmaId::L2_18 => {
            let (id, g) = (ctx.id.to_string(), ctx.g);
            if is_product_of_simple(g).unwrap_or(false) {
                simple_factors(&id, g, c, None);
            }
            Ok(())
        }
        LemmaId::L2_19 => l2_19(ctx, c),
        LemmaId::L2_21 => l2_21(ctx, c),
        LemmaId::L2_22 => l2_22(ctx, c),
    };
    if r.is_err() {
        skip(c, "enumeration");
    }
}

/// Applies `f` to every `U` containing `h`, or records one skip.
fn over_supergroups(
    ctx: &mut Ctx,
    c: &mut Clauses,
    clause: &str,
    h: &Subgroup,
    mut f: impl FnMut(&Subgroup) -> Result<bool>,
) {
    match ctx.subgroups() {
        Ok(subs) => {
            for u in subs.iter().filter(|u| h.is_subgroup_of(u)) {
                rec(c, clause, f(u), || format!("{}, U = {}", ctx.at(h), u.describe()));
            }
        }
        Err(_) => skip(c, clause),
    }
}

fn over_quotients(
    ctx: &mut Ctx,
    c: &mut Clauses,
    clause: &str,
    h: &Subgroup,
    mut f: impl FnMut(&QuotientMap) -> Option<Result<bool>>,
) {
    match ctx.quotients() {
        Ok(maps) => {
            for q in maps.iter() {
                if let Some(outcome) = f(q) {
                    rec(c, clause, outcome, || format!("{}, N = {}", ctx.at(h), q.kernel().describe()));
                }
            }
        }
        Err(_) => skip(c, clause),
    }
}

fn l2_1(ctx: &mut Ctx, c: &mut Clauses) -> Result<()> {
    let g = ctx.g;
    let sqn = g.s_quasinormal_subgroups()?;
    for h in sqn.iter() {
        rec(c, "(1) subnormal", Ok(g.is_subnormal(h)), || ctx.at(h));
        let modulo_core = h.quotient(&g.core(h)).and_then(|q| q.quotient().is_class(GroupClass::Nilpotent));
        rec(c, "(2) H/H_G nilpotent", modulo_core, || ctx.at(h));
        over_supergroups_all(ctx, c, "(3) H meet U S-quasinormal in U", h, |u| u.is_s_quasinormal(&h.meet(u)));
        over_quotients(ctx, c, "(4) HN/N S-quasinormal in G/N", h, |q| {
            Some(q.quotient().is_s_quasinormal(&q.image(h)))
        });
        if let Some(p) = is_p_subgroup(h) {
            let upper = g.o_subgroup(OSelector::UpperP, p).map(|o| o.is_subgroup_of(&g.normalizer(h)));
            rec(c, "(5) O^p(G) normalizes p-subgroup H", upper, || ctx.at(h));
        }
    }
    Ok(())
}

/// Like [`over_supergroups`] but over every subgroup `U` of `G`.
fn over_supergroups_all(
    ctx: &mut Ctx,
    c: &mut Clauses,
    clause: &str,
    h: &Subgroup,
    mut f: impl FnMut(&Subgroup) -> Result<bool>,
) {
    match ctx.subgroups() {
        Ok(subs) => {
            for u in subs.iter() {
                rec(c, clause, f(u), || format!("{}, U = {}", ctx.at(h), u.describe()));
            }
        }
        Err(_) => skip(c, clause),
    }
}

fn l2_2(ctx: &mut Ctx, c: &mut Clauses) -> Result<()> {
    let g = ctx.g;
    let sqn = g.s_quasinormal_subgroups()?;
    for (i, a) in sqn.iter().enumerate() {
        for b in &sqn[i..] {
            let detail = || format!("{}, B = {}", ctx.at(a), b.describe());
            rec(c, "join S-quasinormal", g.is_s_quasinormal(&a.join(b)), detail);
            rec(c, "meet S-quasinormal", g.is_s_quasinormal(&a.meet(b)), detail);
        }
    }
    Ok(())
}

fn l2_3(ctx: &mut Ctx, c: &mut Clauses) -> Result<()> {
    let g = ctx.g;
    let sqn = g.s_quasinormal_subgroups()?;
    for h in sqn.iter().filter(|h| g.core(h).is_trivial()) {
        for p in h.primes() {
            for s in h.sylow_all(p).iter() {
                rec(c, "Sylow of core-free H S-quasinormal", g.is_s_quasinormal(s), || {
                    format!("{}, P = {}", ctx.at(h), s.describe())
                });
            }
        }
    }
    Ok(())
}

fn l2_4(ctx: &mut Ctx, c: &mut Clauses) -> Result<()> {
    let g = ctx.g;
    let subs = ctx.candidates()?;
    for h in subs.iter() {
        match g.holds(h, SqEmbedded) {
            Ok(true) => {}
            Ok(false) => continue,
            Err(_) => {
                skip(c, "antecedent");
                continue;
            }
        }
        over_supergroups(ctx, c, "(1) S-quasinormally embedded in U", h, |u| u.holds(h, SqEmbedded));
        over_quotients(ctx, c, "(2) HN S-quasinormally embedded in G", h, |q| {
            Some(g.holds(&h.join(q.kernel()), SqEmbedded))
        });
        over_quotients(ctx, c, "(2) HN/N S-quasinormally embedded in G/N", h, |q| {
            Some(q.quotient().holds(&q.image(h), SqEmbedded))
        });
    }
    Ok(())
}

fn l2_5(ctx: &mut Ctx, c: &mut Clauses) -> Result<()> {
    let g = ctx.g;
    let subs = ctx.candidates()?;
    for h in subs.iter() {
        let se = match g.generated_part(h, GeneratedPartKind::SeG) {
            Ok(s) => s,
            Err(_) => {
                skip(c, "generated part");
                continue;
            }
        };
        over_supergroups(ctx, c, "(1) seG part below seU part", h, |u| {
            Ok(se.is_subgroup_of(&u.generated_part(h, GeneratedPartKind::SeG)?))
        });
        over_quotients(ctx, c, "(2) image of seG part below quotient seG part", h, |q| {
            Some(q.quotient().generated_part(&q.image(h), GeneratedPartKind::SeG).map(|t| q.image(&se).is_subgroup_of(&t)))
        });
    }
    Ok(())
}

fn same_primes(q: &QuotientMap, h: &Subgroup) -> bool {
    q.image(h).primes() == h.primes()
}

fn coprime(a: &Subgroup, b: &Subgroup) -> bool {
    gcd(a.order() as u64, b.order() as u64) == 1
}

fn l2_6(ctx: &mut Ctx, c: &mut Clauses) -> Result<()> {
    let g = ctx.g;
    let subs = ctx.candidates()?;
    for h in subs.iter() {
        match g.is_tau_quasinormal(h) {
            Ok(true) => {}
            Ok(false) => continue,
            Err(_) => {
                skip(c, "antecedent");
                continue;
            }
        }
        over_supergroups(ctx, c, "(1) tau-quasinormal in U", h, |u| u.is_tau_quasinormal(h));
        over_quotients(ctx, c, "(2) same primes: HN/N tau-quasinormal", h, |q| {
            same_primes(q, h).then(|| q.quotient().is_tau_quasinormal(&q.image(h)))
        });
        over_quotients(ctx, c, "(3) coprime N: HN/N tau-quasinormal", h, |q| {
            coprime(h, q.kernel()).then(|| q.quotient().is_tau_quasinormal(&q.image(h)))
        });
    }
    Ok(())
}

fn l2_7(ctx: &mut Ctx, c: &mut Clauses) -> Result<()> {
    let g = ctx.g;
    let subs = ctx.candidates()?;
    for h in subs.iter() {
        let tg = match g.generated_part(h, GeneratedPartKind::TauG) {
            Ok(s) => s,
            Err(_) => {
                skip(c, "generated part");
                continue;
            }
        };
        let p_group = h.primes().len() <= 1;
        if p_group {
            rec(c, "(1) tauG part of p-subgroup is tau-quasinormal", g.is_tau_quasinormal(&tg), || ctx.at(h));
            rec(c, "(1) core below tauG part", Ok(g.core(h).is_subgroup_of(&tg)), || ctx.at(h));
        }
        over_supergroups(ctx, c, "(2) tauG part below tauU part", h, |u| {
            Ok(tg.is_subgroup_of(&u.generated_part(h, GeneratedPartKind::TauG)?))
        });
        let image_below = |q: &QuotientMap| {
            q.quotient().generated_part(&q.image(h), GeneratedPartKind::TauG).map(|t| q.image(&tg).is_subgroup_of(&t))
        };
        if p_group {
            over_quotients(ctx, c, "(3) p-subgroup: image of tauG part below quotient part", h, |q| {
                Some(image_below(q))
            });
        }
        over_quotients(ctx, c, "(4) coprime N: image of tauG part below quotient part", h, |q| {
            coprime(h, q.kernel()).then(|| image_below(q))
        });
    }
    Ok(())
}

fn l2_8(ctx: &mut Ctx, c: &mut Clauses) -> Result<()> {
    let g = ctx.g;
    let subs = ctx.candidates()?;
    for h in subs.iter() {
        let Some(p) = is_p_subgroup(h) else { continue };
        let outcome = (|| {
            let below = h.is_subgroup_of(&g.o_subgroup(OSelector::P, p)?);
            let sqn = g.is_s_quasinormal(h)?;
            let sqe = below && g.holds(h, SqEmbedded)?;
            let tau = below && g.is_tau_quasinormal(h)?;
            Ok(sqn == sqe && sqe == tau)
        })();
        rec(c, "three conditions equivalent", outcome, || ctx.at(h));
    }
    Ok(())
}

/// Subgroup and quotient closure of the weak embedding properties.
fn weak_closure(ctx: &mut Ctx, c: &mut Clauses, kind: EmbeddingKind) -> Result<()> {
    let g = ctx.g;
    let subs = ctx.candidates()?;
    for h in subs.iter() {
        match g.holds(h, kind) {
            Ok(true) => {}
            Ok(false) => continue,
            Err(_) => {
                skip(c, "antecedent");
                continue;
            }
        }
        over_supergroups(ctx, c, "(1) holds in U", h, |u| u.holds(h, kind));
        let needs_p_group = kind == WeaklyTauEmbedded;
        if !needs_p_group || h.primes().len() == 1 {
            over_quotients(ctx, c, "(2) N below H: H/N holds in G/N", h, |q| {
                q.kernel().is_subgroup_of(h).then(|| q.quotient().holds(&q.image(h), kind))
            });
        }
        over_quotients(ctx, c, "(3) coprime N: HN/N holds in G/N", h, |q| {
            coprime(h, q.kernel()).then(|| q.quotient().holds(&q.image(h), kind))
        });
    }
    Ok(())
}

fn l2_12(ctx: &mut Ctx, c: &mut Clauses) -> Result<()> {
    let g = ctx.g;
    let order = g.order() as u128;
    for p in g.primes() {
        for n in [1u32, 2] {
            if gcd_u128(order, prime_power_product(p, n)) != 1 {
                continue;
            }
            let bound = (p as usize).pow(n + 1);
            let concl = g.is_class(GroupClass::PNilpotent(p));
            for h in g.normal_subgroups()?.iter() {
                if h.order() % bound == 0 || !in_class_mod(g, h, FormationSelector::Np(p))? {
                    continue;
                }
                rec(c, "normal H with small p-part and p-nilpotent quotient", concl.clone(), || {
                    format!("{}, p = {p}, n = {n}", ctx.at(h))
                });
            }
            if !g.order().is_multiple_of(bound) {
                rec(c, "small p-part of |G|", concl, || format!("{}: p = {p}, n = {n}", ctx.id));
            }
        }
    }
    Ok(())
}

fn l2_14(ctx: &mut Ctx, c: &mut Clauses) -> Result<()> {
    let g = ctx.g;
    for p in g.primes() {
        if gcd(g.order() as u64, p - 1) != 1 {
            continue;
        }
        let others: Vec<u64> = g.primes().into_iter().filter(|&q| q != p).collect();
        let outcome = g.hall(&others).map(|halls| match halls.first() {
            None => true,
            Some(first) => {
                let class = g.conjugates(first);
                halls.iter().all(|h| class.contains(h))
            }
        });
        rec(c, "Hall p'-subgroups conjugate", outcome, || format!("{}: p = {p}", ctx.id));
    }
    Ok(())
}

fn l2_17(ctx: &mut Ctx, c: &mut Clauses) -> Result<()> {
    let g = ctx.g;
    for p in g.primes() {
        let sylow = g.sylow(p);
        let frattini = sylow.characteristic(Characteristic::Frattini)?;
        for n in g.normal_subgroups()?.iter() {
            if n.meet(&sylow).is_subgroup_of(&frattini) {
                rec(c, "N meet P in Frattini(P) gives p-nilpotent N", n.is_class(GroupClass::PNilpotent(p)), || {
                    format!("{}: p = {p}, N = {}", ctx.id, n.describe())
                });
            }
        }
    }
    Ok(())
}

/// Whether `g` is generated by non-abelian minimal normal subgroups.
fn is_product_of_simple(g: &Subgroup) -> Result<bool> {
    if g.is_trivial() || g.is_class(GroupClass::Solvable)? {
        return Ok(false);
    }
    let minimal = minimal_normals(g)?;
    if minimal.iter().any(|m| m.is_abelian()) {
        return Ok(false);
    }
    let socle = minimal.iter().fold(Subgroup::trivial(g.ambient())?, |acc, m| acc.join(m));
    Ok(socle.order() == g.order())
}

fn minimal_normals(g: &Subgroup) -> Result<Vec<Subgroup>> {
    let normals = g.normal_subgroups()?;
    let nontrivial: Vec<&Subgroup> = normals.iter().filter(|n| !n.is_trivial()).collect();
    Ok(nontrivial
        .iter()
        .filter(|n| !nontrivial.iter().any(|m| m.order() < n.order() && m.is_subgroup_of(n)))
        .map(|n| (*n).clone())
        .collect())
}

/// Subnormal subgroups of a direct product of non-abelian simple groups are
/// exactly the products of subsets of the factors.
fn simple_factors(id: &str, g: &Subgroup, c: &mut Clauses, expected: Option<usize>) {
    let clause = "subnormal subgroups are factor products";
    let outcome = (|| {
        let factors = minimal_normals(g)?;
        let mut products = Vec::new();
        for mask in 0..1u32 << factors.len() {
            let mut s = Subgroup::trivial(g.ambient())?;
            for (i, f) in factors.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    s = s.join(f);
                }
            }
            products.push(s);
        }
        products.sort();
        products.dedup();
        let mut subnormal: Vec<Subgroup> = g.subnormal_subgroups()?.iter().cloned().collect();
        subnormal.sort();
        let count_ok = expected.is_none_or(|e| subnormal.len() == e);
        Ok(subnormal == products && count_ok)
    })();
    rec(c, clause, outcome, || format!("{id}: subnormal subgroups differ from factor products"));
}

fn l2_19(ctx: &mut Ctx, c: &mut Clauses) -> Result<()> {
    let g = ctx.g;
    for f in [FormationSelector::N, FormationSelector::U] {
        let z = g.hypercenter(f)?;
        let label = |s: &str| format!("{s} (F = {f})");
        over_quotients(ctx, c, &label("(1) image of hypercenter in quotient hypercenter"), &z, |q| {
            Some(q.quotient().hypercenter(f).map(|zq| q.image(&z).is_subgroup_of(&zq)))
        });
        let clause = label("(2) hypercenter meet A in hypercenter of A");
        match ctx.subgroups() {
            Ok(subs) => {
                for a in subs.iter() {
                    let outcome = a.hypercenter(f).map(|za| z.meet(a).is_subgroup_of(&za));
                    rec(c, &clause, outcome, || format!("{}: A = {}", ctx.id, a.describe()));
                }
            }
            Err(_) => skip(c, &clause),
        }
        if g.is_class(f.class())? {
            rec(c, &label("(3) hypercenter of a member is the whole group"), Ok(z.order() == g.order()), || {
                ctx.id.to_string()
            });
        }
    }
    Ok(())
}

fn l2_21(ctx: &mut Ctx, c: &mut Clauses) -> Result<()> {
    let g = ctx.g;
    if !g.is_class(GroupClass::A4Free)? {
        return Ok(());
    }
    for p in g.primes() {
        if gcd(g.order() as u64, p - 1) != 1 {
            continue;
        }
        let concl = g.is_class(GroupClass::PNilpotent(p));
        let cube = (p as usize).pow(3);
        for n in g.normal_subgroups()?.iter() {
            if n.order() % cube != 0 && in_class_mod(g, n, FormationSelector::Np(p))? {
                rec(c, "A4-free with small normal N gives p-nilpotent", concl.clone(), || {
                    format!("{}: p = {p}, N = {}", ctx.id, n.describe())
                });
            }
        }
    }
    Ok(())
}

fn l2_22(ctx: &mut Ctx, c: &mut Clauses) -> Result<()> {
    let g = ctx.g;
    for p in g.primes() {
        if gcd(g.order() as u64, p - 1) == 1 && g.sylow(p).is_cyclic() {
            rec(c, "cyclic Sylow gives p-nilpotent", g.is_class(GroupClass::PNilpotent(p)), || {
                format!("{}: p = {p}", ctx.id)
            });
        }
    }
    Ok(())
}
