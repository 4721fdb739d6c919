//! Hypothesis and conclusion checkers for the p-nilpotency and
//! supersolvability criteria, and corpus-wide consistency scans.
//!
//! The formation parameter of the supersolvability criteria is pinned to the
//! class of supersolvable groups.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use embedcheck_core::arith::{gcd_u128, prime_power_product};
use embedcheck_core::embeddings::or3;
use embedcheck_core::{Characteristic, Error, FormationSelector, GroupClass, Result, Subgroup};
use rayon::prelude::*;
use serde::Serialize;

use crate::suite::Loaded;
use crate::tri::Tri;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// p-nilpotency via n-maximal subgroups of Sylow subgroups.
    T3_1 { p: u64, n: u32 },
    /// p-nilpotency via subgroups of order p^n (or cyclic of order 4).
    T3_2 { p: u64, n: u32 },
    /// p-nilpotency of A4-free groups via 2-maximal or order-p^2 subgroups.
    T3_3 { p: u64 },
    /// Supersolvability via maximal subgroups of non-cyclic Sylow subgroups.
    T3_4,
    /// Supersolvability via cyclic subgroups of prime order or order 4.
    T3_5,
    /// Supersolvability via Sylow subgroups of the generalized Fitting subgroup.
    T3_6,
}

impl TheoremId {
    /// The theorem grid of the consistency scan.
    pub fn default_grid() -> Vec<TheoremId> {
        let mut v = Vec::new();
        for p in [2, 3] {
            for n in [1, 2] {
                v.push(TheoremId::T3_1 { p, n });
            }
        }
        for p in [2, 3] {
            for n in [1, 2] {
                v.push(TheoremId::T3_2 { p, n });
            }
        }
        v.push(TheoremId::T3_3 { p: 2 });
        v.push(TheoremId::T3_3 { p: 3 });
        v.extend([TheoremId::T3_4, TheoremId::T3_5, TheoremId::T3_6]);
        v
    }

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T3_1 { .. } => "T3_1",
            TheoremId::T3_2 { .. } => "T3_2",
            TheoremId::T3_3 { .. } => "T3_3",
            TheoremId::T3_4 => "T3_4",
            TheoremId::T3_5 => "T3_5",
            TheoremId::T3_6 => "T3_6",
        }
    }

    /// Builds an id from its name and optional parameters.
    pub fn from_parts(name: &str, p: Option<u64>, n: Option<u32>) -> std::result::Result<TheoremId, String> {
        let need_p = || p.ok_or_else(|| format!("{name} needs --p"));
        let id = match name {
            "T3_1" => TheoremId::T3_1 { p: need_p()?, n: n.unwrap_or(1) },
            "T3_2" => TheoremId::T3_2 { p: need_p()?, n: n.unwrap_or(1) },
            "T3_3" => TheoremId::T3_3 { p: need_p()? },
            "T3_4" => TheoremId::T3_4,
            "T3_5" => TheoremId::T3_5,
            "T3_6" => TheoremId::T3_6,
            _ => return Err(format!("unknown theorem `{name}`")),
        };
        match id {
            TheoremId::T3_1 { p, n } | TheoremId::T3_2 { p, n } if !embedcheck_core::arith::is_prime(p) || n == 0 => {
                Err(format!("{name} needs a prime p and n >= 1"))
            }
            TheoremId::T3_3 { p } if !embedcheck_core::arith::is_prime(p) => Err(format!("{name} needs a prime p")),
            _ => Ok(id),
        }
    }

    fn target(self) -> GroupClass {
        match self {
            TheoremId::T3_1 { p, .. } | TheoremId::T3_2 { p, .. } | TheoremId::T3_3 { p } => GroupClass::PNilpotent(p),
            _ => GroupClass::Supersolvable,
        }
    }

    fn formation(self) -> FormationSelector {
        match self {
            TheoremId::T3_1 { p, .. } | TheoremId::T3_2 { p, .. } | TheoremId::T3_3 { p } => FormationSelector::Np(p),
            _ => FormationSelector::U,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoremId::T3_1 { p, n } | TheoremId::T3_2 { p, n } => write!(f, "{}(p={p},n={n})", self.name()),
            TheoremId::T3_3 { p } => write!(f, "T3_3(p={p})"),
            _ => write!(f, "{}(F=U)", self.name()),
        }
    }
}

impl FromStr for TheoremId {
    type Err = String;

    /// Parses the display form, e.g. `T3_1(p=2,n=1)` or `T3_4`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (name, args) = match s.split_once('(') {
            Some((name, rest)) => (name, rest.strip_suffix(')').ok_or_else(|| format!("malformed theorem `{s}`"))?),
            None => (s, ""),
        };
        let (mut p, mut n) = (None, None);
        for kv in args.split(',').filter(|a| !a.is_empty()) {
            match kv.trim().split_once('=') {
                Some(("p", v)) => p = Some(v.parse().map_err(|_| format!("bad p in `{s}`"))?),
                Some(("n", v)) => n = Some(v.parse().map_err(|_| format!("bad n in `{s}`"))?),
                Some(("F", "U")) => {}
                _ => return Err(format!("malformed theorem `{s}`")),
            }
        }
        TheoremId::from_parts(name, p, n)
    }
}

/// Whether every Sylow subgroup is checked or one representative per prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Full,
    Fast,
}

/// One designated test subgroup and how it met the condition.
#[derive(Debug, Clone, Serialize)]
pub struct TestOutcome {
    pub subgroup: String,
    pub order: usize,
    pub triangle: Tri,
    pub supplement: Tri,
    pub holds: Tri,
}

/// The per-Sylow condition for one Sylow subgroup.
#[derive(Debug, Clone, Serialize)]
pub struct SylowCheck {
    pub prime: u64,
    pub sylow: String,
    /// Which clause of a disjunctive condition held, if any.
    pub clause: Option<String>,
    pub holds: Tri,
    /// Every test subgroup for the witness, or the first failure otherwise.
    pub tests: Vec<TestOutcome>,
}

/// Outcome of the hypothesis scan for one normal subgroup `H`.
#[derive(Debug, Clone, Serialize)]
pub struct CandidateOutcome {
    pub subgroup: String,
    pub order: usize,
    pub quotient_in_class: bool,
    pub holds: Tri,
    pub sylow_checks: Vec<SylowCheck>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub group_id: String,
    pub group_order: usize,
    pub theorem: String,
    pub mode: Mode,
    pub formation: Option<String>,
    pub side_condition: Tri,
    pub hypothesis: Tri,
    /// The first normal subgroup `H` satisfying the hypothesis.
    pub witness: Option<CandidateOutcome>,
    /// Normal subgroups with the right quotient that failed (first failure each).
    pub rejected: Vec<CandidateOutcome>,
    pub conclusion: Tri,
    pub consistent: Tri,
    /// Conclusion implies hypothesis.
    pub necessity: Tri,
    /// Hypothesis under the other theorem's placement of the hypercenter
    /// exemption (supersolvability criteria with order-4 subgroups only).
    pub alternate_hypothesis: Option<Tri>,
    pub reading_divergence: bool,
    pub error: Option<String>,
}

fn tri_and(a: Tri, b: Tri) -> Tri {
    match (a, b) {
        (Tri::False, _) | (_, Tri::False) => Tri::False,
        (Tri::True, Tri::True) => Tri::True,
        _ => Tri::Indeterminate,
    }
}

fn tri_or(a: Tri, b: Tri) -> Tri {
    match (a, b) {
        (Tri::True, _) | (_, Tri::True) => Tri::True,
        (Tri::False, Tri::False) => Tri::False,
        _ => Tri::Indeterminate,
    }
}

/// Which variant of the order-4 proviso to use for the cyclic-subgroup tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Reading {
    /// Hypercenter exemption applies to every tested subgroup.
    ExemptAll,
    /// Hypercenter exemption applies only to the order-4 subgroups.
    ExemptOrderFour,
}

struct Ctx<'a> {
    g: &'a Subgroup,
    thm: TheoremId,
    mode: Mode,
    reading: Reading,
}

impl Ctx<'_> {
    fn supplement_class(&self) -> GroupClass {
        match self.thm.target() {
            GroupClass::PNilpotent(p) => GroupClass::PNilpotent(p),
            _ => GroupClass::Supersolvable,
        }
    }

    /// "has a supplement in the class or satisfies (△)".
    fn test(&self, l: &Subgroup) -> TestOutcome {
        let triangle = self.g.satisfies_triangle(l);
        let t = Tri::from(&triangle);
        let mut supplement = Tri::Indeterminate;
        let holds = Tri::from(or3(triangle, || {
            let s = self.g.has_supplement(l, self.supplement_class());
            supplement = Tri::from(&s);
            s
        }));
        if t == Tri::True {
            supplement = Tri::Indeterminate;
        }
        TestOutcome { subgroup: l.describe(), order: l.order(), triangle: t, supplement, holds }
    }

    /// All tests must hold; keeps every outcome for reporting.
    fn all_tests(&self, tests: &[Subgroup]) -> (Tri, Vec<TestOutcome>) {
        let mut acc = Tri::True;
        let mut out = Vec::new();
        for l in tests {
            let o = self.test(l);
            acc = tri_and(acc, o.holds);
            let failed = o.holds == Tri::False;
            out.push(o);
            if failed {
                break;
            }
        }
        (acc, out)
    }

    fn hypercenter(&self) -> Result<Subgroup> {
        self.g.hypercenter(FormationSelector::N)
    }

    fn n_maximal_not_containing(&self, p: &Subgroup, n: usize, d: &Subgroup) -> Result<Vec<Subgroup>> {
        Ok(p.n_maximal_subgroups(n)?.into_iter().filter(|l| !d.is_subgroup_of(l)).collect())
    }

    /// Subgroups of `d` of the given order outside the hypercenter.
    fn of_order_outside_z(&self, d: &Subgroup, order: usize, cyclic_only: bool) -> Result<Vec<Subgroup>> {
        let z = self.hypercenter()?;
        Ok(d.all_subgroups()?
            .iter()
            .filter(|l| l.order() == order && (!cyclic_only || l.is_cyclic()) && !l.is_subgroup_of(&z))
            .cloned()
            .collect())
    }

    /// Cyclic subgroups of prime order or order 4 (the latter only for
    /// non-abelian 2-groups), with the hypercenter exemption placed per reading.
    fn cyclic_tests(&self, p: &Subgroup, prime: u64) -> Result<Vec<Subgroup>> {
        let z = self.hypercenter()?;
        let order_four = prime == 2 && !p.is_abelian();
        Ok(p.all_subgroups()?
            .iter()
            .filter(|l| l.is_cyclic())
            .filter(|l| {
                let outside = !l.is_subgroup_of(&z);
                if l.order() as u64 == prime {
                    self.reading == Reading::ExemptOrderFour || outside
                } else {
                    l.order() == 4 && order_four && outside
                }
            })
            .cloned()
            .collect())
    }

    /// The per-Sylow condition.
    fn sylow_condition(&self, p: &Subgroup, prime: u64, residual: &Subgroup) -> Result<SylowCheck> {
        let d = p.meet(residual);
        let mut clause = None;
        let (holds, tests) = match self.thm {
            TheoremId::T3_1 { n, .. } => self.all_tests(&self.n_maximal_not_containing(p, n as usize, &d)?),
            TheoremId::T3_2 { n, .. } => {
                let mut tests = self.of_order_outside_z(&d, (prime as usize).pow(n), false)?;
                if prime == 2 && n == 1 && !p.is_abelian() {
                    tests.extend(self.of_order_outside_z(&d, 4, true)?);
                }
                self.all_tests(&tests)
            }
            TheoremId::T3_3 { .. } => {
                let (a, ta) = self.all_tests(&self.n_maximal_not_containing(p, 2, &d)?);
                if a == Tri::True {
                    clause = Some("2-maximal".into());
                    (a, ta)
                } else {
                    let (b, tb) = self.all_tests(&self.of_order_outside_z(&d, (prime * prime) as usize, false)?);
                    if b == Tri::True {
                        clause = Some("order p^2".into());
                    }
                    (tri_or(a, b), if b == Tri::True { tb } else { ta.into_iter().chain(tb).collect() })
                }
            }
            TheoremId::T3_4 => self.all_tests(&p.maximal_subgroups()?),
            TheoremId::T3_5 => self.all_tests(&self.cyclic_tests(p, prime)?),
            TheoremId::T3_6 => {
                let (a, ta) = self.all_tests(&p.maximal_subgroups()?);
                if a == Tri::True {
                    clause = Some("maximal".into());
                    (a, ta)
                } else {
                    let (b, tb) = self.all_tests(&self.cyclic_tests(p, prime)?);
                    if b == Tri::True {
                        clause = Some("cyclic".into());
                    }
                    (tri_or(a, b), if b == Tri::True { tb } else { ta.into_iter().chain(tb).collect() })
                }
            }
        };
        Ok(SylowCheck { prime, sylow: p.describe(), clause, holds, tests })
    }

    /// Sylow subgroups the condition quantifies over, for a normal `H`.
    fn sylows(&self, h: &Subgroup) -> Result<Vec<(u64, Subgroup)>> {
        let (host, primes) = match self.thm {
            TheoremId::T3_1 { p, .. } | TheoremId::T3_2 { p, .. } | TheoremId::T3_3 { p } => (h.clone(), vec![p]),
            TheoremId::T3_4 | TheoremId::T3_5 => (h.clone(), h.primes()),
            TheoremId::T3_6 => {
                let f = h.characteristic(Characteristic::FStar)?;
                let primes = f.primes();
                (f, primes)
            }
        };
        let noncyclic_only = matches!(self.thm, TheoremId::T3_4 | TheoremId::T3_5 | TheoremId::T3_6);
        let mut out = Vec::new();
        for p in primes {
            let list: Vec<Subgroup> = match self.mode {
                Mode::Full => host.sylow_all(p).iter().cloned().collect(),
                Mode::Fast => vec![host.sylow(p)],
            };
            for s in list {
                if s.is_trivial() || (noncyclic_only && s.is_cyclic()) {
                    continue;
                }
                out.push((p, s));
            }
        }
        Ok(out)
    }

    fn candidate(&self, h: &Subgroup, residual: &Subgroup) -> CandidateOutcome {
        let quotient_in_class = residual.is_subgroup_of(h);
        let mut out = CandidateOutcome {
            subgroup: h.describe(),
            order: h.order(),
            quotient_in_class,
            holds: Tri::False,
            sylow_checks: Vec::new(),
        };
        if !quotient_in_class {
            return out;
        }
        let sylows = match self.sylows(h) {
            Ok(s) => s,
            Err(_) => {
                out.holds = Tri::Indeterminate;
                return out;
            }
        };
        let mut acc = Tri::True;
        for (p, s) in sylows {
            let check = self.sylow_condition(&s, p, residual).unwrap_or_else(|_| SylowCheck {
                prime: p,
                sylow: s.describe(),
                clause: None,
                holds: Tri::Indeterminate,
                tests: Vec::new(),
            });
            acc = tri_and(acc, check.holds);
            let failed = check.holds == Tri::False;
            out.sylow_checks.push(check);
            if failed {
                break;
            }
        }
        out.holds = acc;
        out
    }

    /// Scans normal subgroups ascending for one satisfying the hypothesis.
    fn hypothesis(&self) -> Result<(Tri, Option<CandidateOutcome>, Vec<CandidateOutcome>)> {
        let normals = self.g.normal_subgroups()?;
        let class_residual = self.g.residual(self.thm.formation())?;
        let mut acc = Tri::False;
        let mut rejected = Vec::new();
        for h in normals.iter() {
            if !class_residual.is_subgroup_of(h) {
                continue;
            }
            let c = self.candidate(h, &class_residual);
            match c.holds {
                Tri::True => return Ok((Tri::True, Some(c), rejected)),
                Tri::Indeterminate => acc = Tri::Indeterminate,
                Tri::False => {}
            }
            let mut c = c;
            // keep only the failing Sylow check
            c.sylow_checks.retain(|s| s.holds != Tri::True);
            rejected.push(c);
        }
        Ok((acc, None, rejected))
    }
}

/// Side condition on `|G|` (and A4-freeness for the third criterion).
pub fn side_condition(thm: TheoremId, g: &Subgroup) -> Result<bool> {
    let order = g.order() as u128;
    Ok(match thm {
        TheoremId::T3_1 { p, n } | TheoremId::T3_2 { p, n } => {
            order.is_multiple_of(p as u128) && gcd_u128(order, prime_power_product(p, n)) == 1
        }
        TheoremId::T3_3 { p } => {
            order.is_multiple_of(p as u128) && gcd_u128(order, p as u128 - 1) == 1 && g.is_class(GroupClass::A4Free)?
        }
        _ => true,
    })
}

pub fn hypothesis(thm: TheoremId, g: &Subgroup, mode: Mode) -> Result<(Tri, Option<CandidateOutcome>)> {
    let ctx = Ctx { g, thm, mode, reading: literal_reading(thm) };
    let (t, w, _) = ctx.hypothesis()?;
    Ok((t, w))
}

fn literal_reading(thm: TheoremId) -> Reading {
    match thm {
        TheoremId::T3_6 => Reading::ExemptOrderFour,
        _ => Reading::ExemptAll,
    }
}

fn alternate_reading(thm: TheoremId) -> Option<Reading> {
    match thm {
        TheoremId::T3_5 => Some(Reading::ExemptOrderFour),
        TheoremId::T3_6 => Some(Reading::ExemptAll),
        _ => None,
    }
}

fn err_tri<T>(r: &Result<T>) -> Option<String> {
    r.as_ref().err().map(|e: &Error| format!("{}: {e}", e.code()))
}

/// Evaluates side condition, hypothesis and conclusion for one group.
pub fn theorem_check(thm: TheoremId, group_id: &str, g: &Subgroup, mode: Mode) -> Verdict {
    let mut error = None;
    let side = side_condition(thm, g);
    error = error.or(err_tri(&side));
    let side = Tri::from(side);
    let ctx = Ctx { g, thm, mode, reading: literal_reading(thm) };
    let (hypothesis, witness, rejected) = match ctx.hypothesis() {
        Ok(x) => x,
        Err(e) => {
            error = error.or(Some(format!("{}: {e}", e.code())));
            (Tri::Indeterminate, None, Vec::new())
        }
    };
    let conclusion = g.is_class(thm.target());
    error = error.or(err_tri(&conclusion));
    let conclusion = Tri::from(conclusion);
    let consistent = match (side, hypothesis, conclusion) {
        (Tri::False, _, _) | (_, Tri::False, _) | (_, _, Tri::True) => Tri::True,
        (Tri::True, Tri::True, Tri::False) => Tri::False,
        _ => Tri::Indeterminate,
    };
    let necessity = match conclusion {
        Tri::True => hypothesis,
        Tri::False => Tri::True,
        Tri::Indeterminate => {
            if hypothesis == Tri::True {
                Tri::True
            } else {
                Tri::Indeterminate
            }
        }
    };
    let alternate_hypothesis = alternate_reading(thm).map(|reading| {
        let alt = Ctx { g, thm, mode, reading };
        alt.hypothesis().map(|(t, _, _)| t).unwrap_or(Tri::Indeterminate)
    });
    let reading_divergence = match alternate_hypothesis {
        Some(a) => a.known().is_some() && hypothesis.known().is_some() && a != hypothesis,
        None => false,
    };
    Verdict {
        group_id: group_id.to_string(),
        group_order: g.order(),
        theorem: thm.to_string(),
        mode,
        formation: match thm {
            TheoremId::T3_4 | TheoremId::T3_5 | TheoremId::T3_6 => Some("U".into()),
            _ => None,
        },
        side_condition: side,
        hypothesis,
        witness,
        rejected,
        conclusion,
        consistent,
        necessity,
        alternate_hypothesis,
        reading_divergence,
        error,
    }
}

/// One line of a corpus scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictSummary {
    pub group_id: String,
    pub theorem: String,
    pub side_condition: Tri,
    pub hypothesis: Tri,
    pub conclusion: Tri,
    pub consistent: Tri,
    pub necessity: Tri,
    pub reading_divergence: bool,
}

impl From<&Verdict> for VerdictSummary {
    fn from(v: &Verdict) -> Self {
        VerdictSummary {
            group_id: v.group_id.clone(),
            theorem: v.theorem.clone(),
            side_condition: v.side_condition,
            hypothesis: v.hypothesis,
            conclusion: v.conclusion,
            consistent: v.consistent,
            necessity: v.necessity,
            reading_divergence: v.reading_divergence,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ScanCounts {
    pub consistent: u64,
    pub inconsistent: u64,
    pub indeterminate: u64,
    /// Groups in the class whose hypothesis was not found to hold.
    pub necessity_failures: u64,
    pub reading_divergences: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub mode: Mode,
    pub groups: usize,
    pub theorems: Vec<String>,
    pub counts: ScanCounts,
    pub per_theorem: BTreeMap<String, ScanCounts>,
    pub verdicts: Vec<VerdictSummary>,
    /// Every inconsistent verdict in full.
    pub inconsistent: Vec<Verdict>,
    /// Groups that could not be built within the caps.
    pub unbuilt: Vec<String>,
}

impl ScanCounts {
    fn add(&mut self, v: &Verdict) {
        match v.consistent {
            Tri::True => self.consistent += 1,
            Tri::False => self.inconsistent += 1,
            Tri::Indeterminate => self.indeterminate += 1,
        }
        if v.necessity == Tri::False {
            self.necessity_failures += 1;
        }
        if v.reading_divergence {
            self.reading_divergences += 1;
        }
    }
}

/// Runs every theorem on every group; output is sorted by group then theorem
/// in corpus and grid order.
pub fn corpus_scan(groups: &[Loaded], thms: &[TheoremId], mode: Mode) -> ScanReport {
    let jobs: Vec<(usize, usize)> =
        (0..groups.len()).flat_map(|g| (0..thms.len()).map(move |t| (g, t))).collect();
    let verdicts: Vec<Option<Verdict>> = jobs
        .par_iter()
        .map(|&(gi, ti)| {
            let l = &groups[gi];
            l.group.as_ref().ok().map(|g| theorem_check(thms[ti], &l.id, g, mode))
        })
        .collect();
    let mut counts = ScanCounts::default();
    let mut per_theorem: BTreeMap<String, ScanCounts> = BTreeMap::new();
    let mut summaries = Vec::new();
    let mut inconsistent = Vec::new();
    for v in verdicts.into_iter().flatten() {
        counts.add(&v);
        per_theorem.entry(v.theorem.clone()).or_default().add(&v);
        summaries.push(VerdictSummary::from(&v));
        if v.consistent == Tri::False {
            inconsistent.push(v);
        }
    }
    ScanReport {
        mode,
        groups: groups.len(),
        theorems: thms.iter().map(|t| t.to_string()).collect(),
        counts,
        per_theorem,
        verdicts: summaries,
        inconsistent,
        unbuilt: groups.iter().filter(|l| l.group.is_err()).map(|l| l.id.clone()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ALL: [Tri; 3] = [Tri::True, Tri::False, Tri::Indeterminate];

    #[test]
    fn tri_connectives_agree_with_kleene_tables() {
        for a in ALL {
            for b in ALL {
                let both = a.known().zip(b.known());
                assert_eq!(tri_and(a, b).known(), both.map(|(x, y)| x && y).or(
                    (a == Tri::False || b == Tri::False).then_some(false)
                ));
                assert_eq!(tri_or(a, b).known(), both.map(|(x, y)| x || y).or(
                    (a == Tri::True || b == Tri::True).then_some(true)
                ));
                assert_eq!(tri_and(a, b), tri_and(b, a));
                assert_eq!(tri_or(a, b), tri_or(b, a));
            }
        }
    }

    #[test]
    fn theorem_names_round_trip() {
        for thm in TheoremId::default_grid() {
            assert_eq!(thm.to_string().parse::<TheoremId>().unwrap(), thm);
        }
    }
}
