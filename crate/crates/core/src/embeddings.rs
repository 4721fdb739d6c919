//! Subgroup embedding predicates.
//!
//! Every predicate is a method on the ambient group `G` taking `H <= G`.
//! Results are tri-state: `Ok(true)`, `Ok(false)`, or an error (usually a
//! cap overflow) which callers must treat as indeterminate.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::arith::gcd;
use crate::classes::GroupClass;
use crate::error::{Error, Result};
use crate::subgroup::Subgroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EmbeddingKind {
    SQuasinormal,
    TauQuasinormal,
    SSemipermutable,
    SsQuasinormal,
    SqEmbedded,
    SEmbedded,
    WeaklySEmbedded,
    WeaklyTauEmbedded,
    CNormal,
    CStarNormal,
    NEmbedded,
}

impl EmbeddingKind {
    pub const ALL: [EmbeddingKind; 11] = [
        EmbeddingKind::SQuasinormal,
        EmbeddingKind::TauQuasinormal,
        EmbeddingKind::SSemipermutable,
        EmbeddingKind::SsQuasinormal,
        EmbeddingKind::SqEmbedded,
        EmbeddingKind::SEmbedded,
        EmbeddingKind::WeaklySEmbedded,
        EmbeddingKind::WeaklyTauEmbedded,
        EmbeddingKind::CNormal,
        EmbeddingKind::CStarNormal,
        EmbeddingKind::NEmbedded,
    ];

    /// Report label.
    pub fn tag(self) -> &'static str {
        match self {
            EmbeddingKind::SQuasinormal => "S_QUASINORMAL",
            EmbeddingKind::TauQuasinormal => "TAU_QUASINORMAL",
            EmbeddingKind::SSemipermutable => "S_SEMIPERMUTABLE",
            EmbeddingKind::SsQuasinormal => "SS_QUASINORMAL",
            EmbeddingKind::SqEmbedded => "SQ_EMBEDDED",
            EmbeddingKind::SEmbedded => "S_EMBEDDED",
            EmbeddingKind::WeaklySEmbedded => "WEAKLY_S_EMBEDDED",
            EmbeddingKind::WeaklyTauEmbedded => "WEAKLY_TAU_EMBEDDED",
            EmbeddingKind::CNormal => "C_NORMAL",
            EmbeddingKind::CStarNormal => "C_STAR_NORMAL",
            EmbeddingKind::NEmbedded => "N_EMBEDDED",
        }
    }

    /// Command-line name: the tag in kebab case.
    pub fn cli_name(self) -> String {
        self.tag().to_ascii_lowercase().replace('_', "-")
    }

    /// Whether the definition quantifies over normal subgroups `K`.
    pub fn is_k_scan(self) -> bool {
        matches!(
            self,
            EmbeddingKind::SEmbedded
                | EmbeddingKind::WeaklySEmbedded
                | EmbeddingKind::WeaklyTauEmbedded
                | EmbeddingKind::CNormal
                | EmbeddingKind::CStarNormal
                | EmbeddingKind::NEmbedded
        )
    }
}

impl fmt::Display for EmbeddingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownKind(pub String);

impl fmt::Display for UnknownKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown property name `{}`", self.0)
    }
}

impl std::error::Error for UnknownKind {}

impl FromStr for EmbeddingKind {
    type Err = UnknownKind;

    /// Accepts the kebab-case CLI name or the upper-case tag.
    fn from_str(s: &str) -> std::result::Result<Self, UnknownKind> {
        EmbeddingKind::ALL
            .into_iter()
            .find(|k| k.cli_name() == s || k.tag() == s)
            .ok_or_else(|| UnknownKind(s.to_string()))
    }
}

/// Subgroup of `H` generated by its subgroups with a given property.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratedPartKind {
    /// S-quasinormal subgroups of `H`.
    SG,
    /// S-quasinormally embedded subgroups of `H`.
    SeG,
    /// τ-quasinormal subgroups of `H`.
    TauG,
}

impl GeneratedPartKind {
    fn predicate(self) -> EmbeddingKind {
        match self {
            GeneratedPartKind::SG => EmbeddingKind::SQuasinormal,
            GeneratedPartKind::SeG => EmbeddingKind::SqEmbedded,
            GeneratedPartKind::TauG => EmbeddingKind::TauQuasinormal,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GeneratedPartKind::SG => "sG",
            GeneratedPartKind::SeG => "seG",
            GeneratedPartKind::TauG => "tauG",
        }
    }
}

/// Evidence for a property value.
#[derive(Debug, Clone)]
pub enum Witness {
    /// The first normal `K` (canonical order) satisfying the definition.
    NormalK(Subgroup),
    /// The supplement `B` of an SS-quasinormal subgroup.
    Supplement(Subgroup),
    /// A Sylow subgroup `H` fails to permute with.
    NonPermutingSylow { prime: u64, sylow: Subgroup },
    /// Per prime, the S-quasinormal subgroup containing a Sylow of `H` as a Sylow.
    SylowHosts(Vec<(u64, Subgroup)>),
    /// A prime with no S-quasinormal host for the Sylow subgroup of `H`.
    MissingHost(u64),
    /// Number of candidates examined by an exhaustive search that found nothing.
    Exhausted(usize),
    /// The property holds vacuously or by definition.
    Direct,
}

/// All eleven properties of a pair `(G, H)`.
#[derive(Debug, Clone)]
pub struct PropertyVector {
    pub flags: BTreeMap<EmbeddingKind, Result<bool>>,
    pub witnesses: BTreeMap<EmbeddingKind, Witness>,
}

impl PropertyVector {
    pub fn get(&self, kind: EmbeddingKind) -> Result<bool> {
        self.flags[&kind].clone()
    }
}

/// Tri-state disjunction: true wins over an indeterminate operand.
pub fn or3(a: Result<bool>, b: impl FnOnce() -> Result<bool>) -> Result<bool> {
    match a {
        Ok(true) => Ok(true),
        Ok(false) => b(),
        Err(e) => match b() {
            Ok(true) => Ok(true),
            _ => Err(e),
        },
    }
}

impl Subgroup {
    fn check_member(&self, h: &Subgroup) {
        debug_assert!(h.is_subgroup_of(self), "H must be a subgroup of G");
    }

    /// Memoized predicate evaluation.
    pub fn holds(&self, h: &Subgroup, kind: EmbeddingKind) -> Result<bool> {
        self.check_member(h);
        let key = (kind as u8, h.set().clone());
        self.cache.props.get_or(key, || self.evaluate(h, kind).map(|(b, _)| b))
    }

    /// Evaluates a predicate together with its witness, bypassing the memo.
    pub fn evaluate(&self, h: &Subgroup, kind: EmbeddingKind) -> Result<(bool, Witness)> {
        self.check_member(h);
        match kind {
            EmbeddingKind::SQuasinormal => self.sylow_scan(h, |_| true),
            EmbeddingKind::SSemipermutable => self.sylow_scan(h, |q| !(h.order() as u64).is_multiple_of(q)),
            EmbeddingKind::TauQuasinormal => {
                self.sylow_scan(h, |q| !(h.order() as u64).is_multiple_of(q) && gcd(h.order() as u64, self.sylow_closure_order(q) as u64) != 1)
            }
            EmbeddingKind::SsQuasinormal => self.ss_quasinormal(h),
            EmbeddingKind::SqEmbedded => self.sq_embedded(h),
            _ => match self.k_scan(h, kind)? {
                (Some(k), _) => Ok((true, Witness::NormalK(k))),
                (None, n) => Ok((false, Witness::Exhausted(n))),
            },
        }
    }

    /// `|Q^G|` for a Sylow q-subgroup `Q`; conjugation-invariant.
    fn sylow_closure_order(&self, q: u64) -> usize {
        self.cache.sylow_closure_order.get_or(q, || self.normal_closure(&self.sylow(q)).order())
    }

    /// `H` permutes with every Sylow q-subgroup for each prime `q` selected.
    fn sylow_scan(&self, h: &Subgroup, select: impl Fn(u64) -> bool) -> Result<(bool, Witness)> {
        if self.normalizes(h) {
            return Ok((true, Witness::Direct));
        }
        for q in self.primes() {
            if !select(q) {
                continue;
            }
            for s in self.sylow_all(q).iter() {
                if !h.permutes_with(s) {
                    return Ok((false, Witness::NonPermutingSylow { prime: q, sylow: s.clone() }));
                }
            }
        }
        Ok((true, Witness::Direct))
    }

    /// S-quasinormal subgroups, drawn from the subnormal ones.
    pub fn s_quasinormal_subgroups(&self) -> Result<Arc<Vec<Subgroup>>> {
        self.cache
            .s_quasinormal
            .get_or_init(|| {
                let mut out = Vec::new();
                for s in self.subnormal_subgroups()?.iter() {
                    if self.holds(s, EmbeddingKind::SQuasinormal)? {
                        out.push(s.clone());
                    }
                }
                Ok(Arc::new(out))
            })
            .clone()
    }

    pub fn is_s_quasinormal(&self, h: &Subgroup) -> Result<bool> {
        self.holds(h, EmbeddingKind::SQuasinormal)
    }

    pub fn is_tau_quasinormal(&self, h: &Subgroup) -> Result<bool> {
        self.holds(h, EmbeddingKind::TauQuasinormal)
    }

    /// τ-quasinormality with the condition `gcd(p, |Q^G|) != 1` for a prime
    /// `p`, the form used for p-subgroups.
    pub fn is_tau_quasinormal_prime_form(&self, h: &Subgroup, p: u64) -> bool {
        if self.normalizes(h) {
            return true;
        }
        self.primes().into_iter().all(|q| {
            (h.order() as u64).is_multiple_of(q)
                || !(self.sylow_closure_order(q) as u64).is_multiple_of(p)
                || self.sylow_all(q).iter().all(|s| h.permutes_with(s))
        })
    }

    fn ss_quasinormal(&self, h: &Subgroup) -> Result<(bool, Witness)> {
        if h.order() == self.order() {
            return Ok((true, Witness::Supplement(Subgroup::trivial(self.ambient())?)));
        }
        let all = self.all_subgroups()?;
        let min = self.order() / h.order();
        let mut examined = 0;
        for b in all.iter().filter(|b| b.order() >= min) {
            if h.product_size(b) != self.order() {
                continue;
            }
            examined += 1;
            if b.primes().into_iter().all(|p| b.sylow_all(p).iter().all(|s| h.permutes_with(s))) {
                return Ok((true, Witness::Supplement(b.clone())));
            }
        }
        Ok((false, Witness::Exhausted(examined)))
    }

    /// One Sylow subgroup per prime suffices: the S-quasinormal family is
    /// closed under conjugation, so a host `U` for `S` gives the host `U^h`
    /// for `S^h`.
    fn sq_embedded(&self, h: &Subgroup) -> Result<(bool, Witness)> {
        let hosts = self.s_quasinormal_subgroups()?;
        let mut found = Vec::new();
        for p in h.primes() {
            let s = h.sylow(p);
            match hosts.iter().find(|u| s.is_subgroup_of(u) && u.p_part(p) == s.order()) {
                Some(u) => found.push((p, u.clone())),
                None => return Ok((false, Witness::MissingHost(p))),
            }
        }
        Ok((true, Witness::SylowHosts(found)))
    }

    /// Join of the subgroups of `H` with the part's property in `G`.
    pub fn generated_part(&self, h: &Subgroup, kind: GeneratedPartKind) -> Result<Subgroup> {
        let pred = kind.predicate();
        if self.holds(h, pred)? {
            return Ok(h.clone());
        }
        let subs = h.all_subgroups()?;
        let mut part = Subgroup::trivial(self.ambient())?;
        for l in subs.iter().rev() {
            if l.is_subgroup_of(&part) {
                continue;
            }
            if self.holds(l, pred)? {
                part = part.join(l);
            }
        }
        Ok(part)
    }

    /// Scans normal subgroups `K` in canonical order; returns the first
    /// witness and the number of candidates examined.
    fn k_scan(&self, h: &Subgroup, kind: EmbeddingKind) -> Result<(Option<Subgroup>, usize)> {
        let normals = self.normal_subgroups()?;
        let mut part: Option<Subgroup> = None;
        let mut closure: Option<Subgroup> = None;
        let mut core: Option<Subgroup> = None;
        let part_kind = match kind {
            EmbeddingKind::SEmbedded | EmbeddingKind::NEmbedded => Some(GeneratedPartKind::SG),
            EmbeddingKind::WeaklySEmbedded => Some(GeneratedPartKind::SeG),
            EmbeddingKind::WeaklyTauEmbedded => Some(GeneratedPartKind::TauG),
            _ => None,
        };
        for (i, k) in normals.iter().enumerate() {
            let meet = h.meet(k);
            let ok = match kind {
                EmbeddingKind::SEmbedded | EmbeddingKind::WeaklySEmbedded | EmbeddingKind::WeaklyTauEmbedded => {
                    let hk = h.join(k);
                    if !self.holds(&hk, EmbeddingKind::SQuasinormal)? {
                        continue;
                    }
                    if part.is_none() {
                        part = Some(self.generated_part(h, part_kind.unwrap())?);
                    }
                    meet.is_subgroup_of(part.as_ref().unwrap())
                }
                EmbeddingKind::CNormal => {
                    if h.product_size(k) != self.order() {
                        continue;
                    }
                    let c = core.get_or_insert_with(|| self.core(h));
                    meet.is_subgroup_of(c)
                }
                EmbeddingKind::CStarNormal => {
                    if h.product_size(k) != self.order() {
                        continue;
                    }
                    self.holds(&meet, EmbeddingKind::SqEmbedded)?
                }
                EmbeddingKind::NEmbedded => {
                    let c = closure.get_or_insert_with(|| self.normal_closure(h));
                    if h.join(k) != *c {
                        continue;
                    }
                    if part.is_none() {
                        part = Some(self.generated_part(h, part_kind.unwrap())?);
                    }
                    meet.is_subgroup_of(part.as_ref().unwrap())
                }
                _ => return Err(Error::Invariant(format!("{kind} is not a normal-subgroup scan"))),
            };
            if ok {
                return Ok((Some(k.clone()), i + 1));
            }
        }
        Ok((None, normals.len()))
    }

    /// First witnessing normal subgroup for an existential property.
    pub fn embedding_witness(&self, h: &Subgroup, kind: EmbeddingKind) -> Result<Option<Subgroup>> {
        if !kind.is_k_scan() {
            return Err(Error::Invariant(format!("{kind} is not a normal-subgroup scan")));
        }
        Ok(self.k_scan(h, kind)?.0)
    }

    /// Weakly S-embedded or weakly τ-embedded.
    pub fn satisfies_triangle(&self, h: &Subgroup) -> Result<bool> {
        or3(self.holds(h, EmbeddingKind::WeaklySEmbedded), || self.holds(h, EmbeddingKind::WeaklyTauEmbedded))
    }

    /// Smallest `T` (canonical order) with `HT = G` and `T` in the class.
    pub fn supplement(&self, h: &Subgroup, class: GroupClass) -> Result<Option<Subgroup>> {
        let key = (class, h.set().clone());
        self.cache.supplement.get_or(key, || {
            if self.is_class(class)? {
                // T = G always works; prefer a smaller one only if the lattice is available
                if self.all_subgroups().is_err() {
                    return Ok(Some(self.clone()));
                }
            }
            let all = self.all_subgroups()?;
            let min = self.order() / h.order();
            for t in all.iter().filter(|t| t.order() >= min) {
                if h.product_size(t) == self.order() && t.is_class(class)? {
                    return Ok(Some(t.clone()));
                }
            }
            Ok(None)
        })
    }

    pub fn has_supplement(&self, h: &Subgroup, class: GroupClass) -> Result<bool> {
        Ok(self.supplement(h, class)?.is_some())
    }

    /// All eleven properties with witnesses.
    pub fn property_vector(&self, h: &Subgroup) -> PropertyVector {
        let mut flags = BTreeMap::new();
        let mut witnesses = BTreeMap::new();
        for kind in EmbeddingKind::ALL {
            match self.evaluate(h, kind) {
                Ok((b, w)) => {
                    flags.insert(kind, Ok(b));
                    witnesses.insert(kind, w);
                }
                Err(e) => {
                    flags.insert(kind, Err(e));
                }
            }
        }
        PropertyVector { flags, witnesses }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::PermGroup;
    use crate::perm::parse_cycles;
    use EmbeddingKind::*;

    fn group(n: usize, gens: &[&str]) -> Subgroup {
        let g = PermGroup::generate(n, gens.iter().map(|g| parse_cycles(g, n).unwrap()).collect()).unwrap();
        Subgroup::whole(&g).unwrap()
    }

    fn sub(g: &Subgroup, gens: &[&str]) -> Subgroup {
        let n = g.ambient().degree();
        Subgroup::from_perms(g.ambient(), &gens.iter().map(|s| parse_cycles(s, n).unwrap()).collect::<Vec<_>>()).unwrap()
    }

    fn s4() -> Subgroup {
        group(4, &["(1 2 3 4)", "(1 2)"])
    }

    fn a5() -> Subgroup {
        group(5, &["(1 2 3)", "(3 4 5)"])
    }

    #[test]
    fn names_round_trip() {
        for k in EmbeddingKind::ALL {
            assert_eq!(k.cli_name().parse::<EmbeddingKind>().unwrap(), k);
            assert_eq!(k.tag().parse::<EmbeddingKind>().unwrap(), k);
        }
        assert_eq!(WeaklyTauEmbedded.cli_name(), "weakly-tau-embedded");
        assert_eq!(CStarNormal.cli_name(), "c-star-normal");
        assert!("weakly-x".parse::<EmbeddingKind>().is_err());
    }

    #[test]
    fn s_quasinormality() {
        let g = s4();
        assert!(g.is_s_quasinormal(&sub(&g, &["(1 2 3)", "(1 2)(3 4)"])).unwrap());
        assert!(!g.is_s_quasinormal(&sub(&g, &["(1 2)(3 4)"])).unwrap());
        let a = a5();
        assert!(!a.is_s_quasinormal(&sub(&a, &["(1 2 3)", "(1 2)(3 4)"])).unwrap());
        let orders: Vec<usize> = g.s_quasinormal_subgroups().unwrap().iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        assert_eq!(a.s_quasinormal_subgroups().unwrap().len(), 2);
        let c = group(6, &["(1 2 3 4 5 6)"]);
        assert_eq!(c.s_quasinormal_subgroups().unwrap().len(), c.all_subgroups().unwrap().len());
    }

    #[test]
    fn tau_quasinormality() {
        let g = s4();
        assert!(!g.is_tau_quasinormal(&sub(&g, &["(1 4)"])).unwrap());
        let a = a5();
        assert!(a.is_tau_quasinormal(&sub(&a, &["(1 2 3)", "(1 2)(3 4)"])).unwrap());
        assert!(a.is_tau_quasinormal(&a).unwrap());
        assert!(!g.holds(&sub(&g, &["(1 4)"]), SSemipermutable).unwrap());
        assert!(g.holds(&g, SsQuasinormal).unwrap());
    }

    #[test]
    fn sq_embedding() {
        let a = a5();
        assert!(a.holds(&sub(&a, &["(1 2 3)"]), SqEmbedded).unwrap());
        for p in [2, 3, 5] {
            assert!(a.holds(&a.sylow(p), SqEmbedded).unwrap());
        }
        let g = s4();
        assert!(!g.holds(&sub(&g, &["(1 2)"]), SqEmbedded).unwrap());
    }

    #[test]
    fn generated_parts() {
        let g = s4();
        let h = sub(&g, &["(1 2)(3 4)"]);
        assert!(g.generated_part(&h, GeneratedPartKind::TauG).unwrap().is_trivial());
        let v = sub(&g, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert_eq!(g.generated_part(&v, GeneratedPartKind::SG).unwrap(), v);
        let a = a5();
        let c3 = sub(&a, &["(1 2 3)"]);
        assert_eq!(a.generated_part(&c3, GeneratedPartKind::SeG).unwrap(), c3);
    }

    #[test]
    fn k_scan_variants() {
        let g = s4();
        let h = sub(&g, &["(1 4)"]);
        let k = g.embedding_witness(&h, WeaklyTauEmbedded).unwrap().unwrap();
        assert_eq!(k.order(), 12);
        let a = a5();
        let c3 = sub(&a, &["(1 2 3)"]);
        assert!(!a.holds(&c3, WeaklyTauEmbedded).unwrap());
        assert_eq!(a.embedding_witness(&c3, WeaklySEmbedded).unwrap().unwrap(), a);
        assert!(g.satisfies_triangle(&h).unwrap());
        assert!(g.satisfies_triangle(&g).unwrap());
        assert!(!g.satisfies_triangle(&sub(&g, &["(1 2)", "(3 4)"])).unwrap());
    }

    #[test]
    fn supplements() {
        let g = s4();
        let t = g.supplement(&sub(&g, &["(1 2 3 4)"]), GroupClass::PNilpotent(2)).unwrap().unwrap();
        assert_eq!(t.order(), 6);
        assert!(!g.has_supplement(&sub(&g, &["(1 2)", "(3 4)"]), GroupClass::PNilpotent(2)).unwrap());
        let s3 = group(3, &["(1 2 3)", "(1 2)"]);
        assert!(s3.has_supplement(&s3, GroupClass::Supersolvable).unwrap());
    }

    #[test]
    fn tri_state_or() {
        let cap = Error::CapExceeded { what: "x", size: 1, cap: 0 };
        assert_eq!(or3(Err(cap.clone()), || Ok(true)), Ok(true));
        assert_eq!(or3(Err(cap.clone()), || Ok(false)), Err(cap.clone()));
        assert_eq!(or3(Ok(false), || Err(cap.clone())), Err(cap));
        assert_eq!(or3(Ok(true), || panic!("short-circuits")), Ok(true));
    }
}
