//! Subgroup enumeration, Sylow subgroups, quotients, characteristic
//! subgroups and chief series.
//!
//! All operations are methods on the [`Subgroup`] playing the role of the
//! group; results are memoized in its cache.

use std::collections::HashSet;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::arith::{is_prime, p_part, prime_divisors};
use crate::error::{Error, Result};
use crate::group::{Elem, PermGroup, IDENTITY};
use crate::perm::Perm;
use crate::subgroup::Subgroup;

/// Characteristic subgroups selectable by [`Subgroup::characteristic`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Characteristic {
    Center,
    Frattini,
    Fitting,
    Layer,
    FStar,
    Derived,
    /// Largest normal p-subgroup.
    OLower(u64),
    /// Largest normal p'-subgroup.
    OLowerComplement(u64),
    /// Smallest normal subgroup with p-group quotient.
    OUpper(u64),
}

/// The `O` family of [`Subgroup::o_subgroup`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OSelector {
    /// `O_p`
    P,
    /// `O_p'`
    PPrime,
    /// `O^p`
    UpperP,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorKind {
    ElementaryAbelian { p: u64, rank: u32 },
    NonAbelian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChiefFactor {
    pub order: usize,
    pub kind: FactorKind,
}

/// Ascending chain of normal subgroups from 1 to G with minimal steps.
#[derive(Debug, Clone)]
pub struct ChiefSeries {
    pub terms: Vec<Subgroup>,
    pub factors: Vec<ChiefFactor>,
}

/// Right cosets `Nx` of a subgroup of `parent`, indexed by ambient element.
pub(crate) struct Cosets {
    /// `id[x]` is the coset of ambient element `x`, or `u32::MAX` outside parent.
    id: Vec<u32>,
    reps: Vec<Elem>,
}

impl Cosets {
    pub(crate) fn new(parent: &Subgroup, n: &Subgroup) -> Cosets {
        let ed = parent.ed();
        let mut id = vec![u32::MAX; ed.len()];
        let mut reps = Vec::new();
        for x in parent.elements() {
            if id[x as usize] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            for y in n.elements() {
                id[ed.mul(y, x) as usize] = c;
            }
        }
        Cosets { id, reps }
    }

    pub(crate) fn len(&self) -> usize {
        self.reps.len()
    }

    pub(crate) fn of(&self, x: Elem) -> u32 {
        self.id[x as usize]
    }

    /// Permutation of the cosets induced by `f` applied to representatives.
    pub(crate) fn induced(&self, f: impl Fn(Elem) -> Elem) -> Perm {
        Perm::from_images_unchecked(self.reps.iter().map(|&r| self.id[f(r) as usize]).collect())
    }
}

/// `G -> G/N`, with `G/N` acting faithfully on the right cosets of `N`.
pub struct QuotientMap {
    source: Subgroup,
    kernel: Subgroup,
    cosets: Cosets,
    quotient: Subgroup,
}

impl QuotientMap {
    pub fn source(&self) -> &Subgroup {
        &self.source
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    /// The quotient as a whole group.
    pub fn quotient(&self) -> &Subgroup {
        &self.quotient
    }

    pub fn index(&self) -> usize {
        self.cosets.len()
    }

    /// Image of a source element as a permutation of the cosets.
    pub fn forward_perm(&self, x: Elem) -> Perm {
        let ed = self.source.ed();
        self.cosets.induced(|r| ed.mul(r, x))
    }

    /// Image of a source element in the quotient's element indexing.
    pub fn forward(&self, x: Elem) -> Elem {
        // the regular action is determined by where the trivial coset goes
        let target = self.cosets.of(x) as usize;
        self.coset_elem(target)
    }

    fn coset_elem(&self, c: usize) -> Elem {
        let p = self.forward_perm(self.cosets.reps[c]);
        self.quotient.ed().index_of(&p).expect("coset action lies in the quotient")
    }

    /// `HN/N` for `H <= source`.
    pub fn image(&self, h: &Subgroup) -> Subgroup {
        let gens: Vec<Elem> = h.generators().iter().map(|&x| self.forward(x)).collect();
        Subgroup::generated(self.quotient.ambient(), &gens).unwrap()
    }

    /// Full preimage of a subgroup of the quotient.
    pub fn preimage(&self, q: &Subgroup) -> Subgroup {
        let qed = q.ed();
        let gens: Vec<Elem> = q
            .generators()
            .iter()
            .map(|&g| {
                let c = qed.perm(g).apply(0) as usize;
                self.cosets.reps[c]
            })
            .collect();
        self.kernel.extended(&gens)
    }
}

impl Subgroup {
    fn check_lattice_cap(&self) -> Result<()> {
        let cap = self.ambient().caps().lattice;
        if self.order() > cap {
            return Err(Error::CapExceeded { what: "subgroup lattice", size: self.order() as u128, cap });
        }
        Ok(())
    }

    /// Prime divisors of the order, ascending.
    pub fn primes(&self) -> Vec<u64> {
        prime_divisors(self.order() as u128)
    }

    /// Exact power of `p` dividing the order.
    pub fn p_part(&self, p: u64) -> usize {
        p_part(self.order() as u128, p) as usize
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        self.p_part(p) == self.order()
    }

    /// Every subgroup exactly once, in canonical order.
    pub fn all_subgroups(&self) -> Result<Arc<Vec<Subgroup>>> {
        self.cache
            .all
            .get_or_init(|| {
                self.check_lattice_cap()?;
                let ed = self.ed();
                // cyclic subgroups of prime-power order generate every subgroup
                let mut seen_cyclic = HashSet::new();
                let mut cyclics = Vec::new();
                for x in self.elements() {
                    let o = ed.order_of(x) as u64;
                    if o > 1 && prime_divisors(o as u128).len() == 1 {
                        let c = Subgroup::generated(self.ambient(), &[x]).unwrap();
                        if seen_cyclic.insert(c.set().clone()) {
                            cyclics.push(c);
                        }
                    }
                }
                let trivial = Subgroup::trivial(self.ambient()).unwrap();
                let mut seen: HashSet<FixedBitSet> = HashSet::new();
                seen.insert(trivial.set().clone());
                let mut list = vec![trivial];
                let mut k = 0;
                while k < list.len() {
                    for c in &cyclics {
                        if c.is_subgroup_of(&list[k]) {
                            continue;
                        }
                        let j = list[k].join(c);
                        if !seen.contains(j.set()) {
                            seen.insert(j.set().clone());
                            list.push(j);
                        }
                    }
                    k += 1;
                }
                list.sort();
                Ok(Arc::new(list))
            })
            .clone()
    }

    /// Normal subgroups, from normal closures of classes closed under join.
    pub fn normal_subgroups(&self) -> Result<Arc<Vec<Subgroup>>> {
        self.cache
            .normal
            .get_or_init(|| {
                let mut seen: HashSet<FixedBitSet> = HashSet::new();
                let mut list = Vec::new();
                let trivial = Subgroup::trivial(self.ambient())?;
                seen.insert(trivial.set().clone());
                list.push(trivial);
                let mut atoms = Vec::new();
                for class in self.conjugacy_classes().iter() {
                    if class[0] == IDENTITY {
                        continue;
                    }
                    let n = self.normal_closure_of(&class[..1]);
                    if seen.insert(n.set().clone()) {
                        atoms.push(n.clone());
                        list.push(n);
                    }
                }
                let mut k = 1;
                while k < list.len() {
                    for a in &atoms {
                        if a.is_subgroup_of(&list[k]) {
                            continue;
                        }
                        let j = list[k].join(a);
                        if !seen.contains(j.set()) {
                            seen.insert(j.set().clone());
                            list.push(j);
                        }
                    }
                    k += 1;
                }
                list.sort();
                Ok(Arc::new(list))
            })
            .clone()
    }

    /// Subnormal subgroups: `{G}` plus the subnormal subgroups of every
    /// proper normal subgroup.
    pub fn subnormal_subgroups(&self) -> Result<Arc<Vec<Subgroup>>> {
        self.cache
            .subnormal
            .get_or_init(|| {
                let normals = self.normal_subgroups()?;
                let mut seen: HashSet<FixedBitSet> = HashSet::new();
                let mut list = Vec::new();
                for n in normals.iter() {
                    if n.order() == self.order() {
                        if seen.insert(n.set().clone()) {
                            list.push(n.clone());
                        }
                        continue;
                    }
                    for s in n.subnormal_subgroups()?.iter() {
                        if seen.insert(s.set().clone()) {
                            list.push(s.clone());
                        }
                    }
                }
                list.sort();
                Ok(Arc::new(list))
            })
            .clone()
    }

    /// Maximal proper subgroups.
    pub fn maximal_subgroups(&self) -> Result<Arc<Vec<Subgroup>>> {
        self.cache
            .maximal
            .get_or_init(|| {
                let all = self.all_subgroups()?;
                Ok(Arc::new(maximal_within(&all, self)))
            })
            .clone()
    }

    /// Endpoints of chains `G = M_0 > M_1 > ... > M_n` of successive maximal
    /// subgroups. Empty when no such chain exists.
    pub fn n_maximal_subgroups(&self, n: usize) -> Result<Vec<Subgroup>> {
        let all = self.all_subgroups()?;
        if let Some(&p) = self.primes().first() {
            if self.is_p_group(p) {
                let target = (self.order() as u128).checked_div((p as u128).pow(n as u32)).unwrap_or(0);
                let target = if (p as u128).pow(n as u32) > self.order() as u128 { 0 } else { target };
                return Ok(all.iter().filter(|s| s.order() as u128 == target).cloned().collect());
            }
        }
        let mut level: Vec<&Subgroup> = all.iter().filter(|s| s.order() == self.order()).collect();
        for _ in 0..n {
            let mut next: Vec<&Subgroup> = Vec::new();
            let mut seen = HashSet::new();
            for m in &level {
                for s in maximal_indices(&all, m) {
                    if seen.insert(s) {
                        next.push(&all[s]);
                    }
                }
            }
            level = next;
        }
        let mut out: Vec<Subgroup> = level.into_iter().cloned().collect();
        out.sort();
        Ok(out)
    }

    /// One Sylow p-subgroup, grown greedily by p-elements of the normalizer.
    /// Trivial when `p` does not divide the order.
    pub fn sylow(&self, p: u64) -> Subgroup {
        self.cache.sylow.get_or(p, || {
            let ed = self.ed();
            let target = self.p_part(p);
            let mut s = Subgroup::trivial(self.ambient()).unwrap();
            while s.order() < target {
                let n = self.normalizer(&s);
                let mut best: Option<Subgroup> = None;
                for x in n.elements() {
                    if s.contains(x) || best.as_ref().is_some_and(|b| b.contains(x)) {
                        continue;
                    }
                    if !crate::arith::is_p_power(ed.order_of(x) as u128, p) {
                        continue;
                    }
                    let c = s.extended(&[x]);
                    if best.as_ref().is_none_or(|b| c < *b) {
                        best = Some(c);
                    }
                }
                s = best.expect("a p-subgroup below the p-part has p-elements in its normalizer");
            }
            s
        })
    }

    /// All Sylow p-subgroups, in canonical order.
    pub fn sylow_all(&self, p: u64) -> Arc<Vec<Subgroup>> {
        self.cache.sylow_all.get_or(p, || Arc::new(self.conjugates(&self.sylow(p))))
    }

    /// Subgroups whose order is the full π-part of the group order.
    pub fn hall(&self, primes: &[u64]) -> Result<Vec<Subgroup>> {
        let target: usize = primes.iter().filter(|&&p| is_prime(p)).map(|&p| self.p_part(p)).product();
        Ok(self.all_subgroups()?.iter().filter(|s| s.order() == target).cloned().collect())
    }

    /// The quotient by a normal subgroup.
    pub fn quotient(&self, n: &Subgroup) -> Result<QuotientMap> {
        if !self.has_normal(n) {
            return Err(Error::NotNormal);
        }
        let caps = self.ambient().caps();
        let index = self.order() / n.order();
        if index > caps.element {
            return Err(Error::CapExceeded { what: "quotient order", size: index as u128, cap: caps.element });
        }
        let cosets = Cosets::new(self, n);
        let ed = self.ed();
        let gens: Vec<Perm> = self.generators().iter().map(|&g| cosets.induced(|r| ed.mul(r, g))).collect();
        let group = PermGroup::generate_with_caps(index, gens, caps)?;
        if group.order() != index as u128 {
            return Err(Error::Invariant(format!("quotient of order {} has index {index}", group.order())));
        }
        let quotient = Subgroup::whole(&group)?;
        Ok(QuotientMap { source: self.clone(), kernel: n.clone(), cosets, quotient })
    }

    /// Characteristic subgroup by selector.
    pub fn characteristic(&self, which: Characteristic) -> Result<Subgroup> {
        self.cache.characteristic.get_or(which, || self.compute_characteristic(which))
    }

    pub fn o_subgroup(&self, which: OSelector, p: u64) -> Result<Subgroup> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        self.characteristic(match which {
            OSelector::P => Characteristic::OLower(p),
            OSelector::PPrime => Characteristic::OLowerComplement(p),
            OSelector::UpperP => Characteristic::OUpper(p),
        })
    }

    pub fn derived(&self) -> Subgroup {
        self.characteristic(Characteristic::Derived).expect("derived subgroup needs no caps")
    }

    pub fn fitting(&self) -> Subgroup {
        self.characteristic(Characteristic::Fitting).expect("fitting subgroup needs no caps")
    }

    fn compute_characteristic(&self, which: Characteristic) -> Result<Subgroup> {
        let ed = self.ed();
        Ok(match which {
            Characteristic::Center => self.center(),
            Characteristic::Derived => {
                let gens = self.generators();
                let mut comms = Vec::new();
                for (i, &a) in gens.iter().enumerate() {
                    for &b in &gens[i + 1..] {
                        comms.push(ed.commutator(a, b));
                    }
                }
                self.normal_closure_of(&comms)
            }
            Characteristic::Frattini => {
                let mut set = self.set().clone();
                for m in self.maximal_subgroups()?.iter() {
                    set.intersect_with(m.set());
                }
                Subgroup::from_closed_set(self.ambient(), set)
            }
            Characteristic::OLower(p) => {
                let mut set = self.set().clone();
                for s in self.sylow_all(p).iter() {
                    set.intersect_with(s.set());
                }
                Subgroup::from_closed_set(self.ambient(), set)
            }
            Characteristic::OLowerComplement(p) => {
                let normals = self.normal_subgroups()?;
                normals.iter().filter(|n| !(n.order() as u64).is_multiple_of(p)).max_by_key(|n| n.order()).unwrap().clone()
            }
            Characteristic::OUpper(p) => {
                let mut s = Subgroup::trivial(self.ambient())?;
                for x in self.elements() {
                    if !(ed.order_of(x) as u64).is_multiple_of(p) && !s.contains(x) {
                        s = s.extended(&[x]);
                    }
                }
                s
            }
            Characteristic::Fitting => {
                let mut f = Subgroup::trivial(self.ambient())?;
                for p in self.primes() {
                    f = f.join(&self.characteristic(Characteristic::OLower(p))?);
                }
                f
            }
            Characteristic::Layer => {
                let mut e = Subgroup::trivial(self.ambient())?;
                for q in self.subnormal_subgroups()?.iter() {
                    if q.is_component()? {
                        e = e.join(q);
                    }
                }
                e
            }
            Characteristic::FStar => {
                self.fitting().join(&self.characteristic(Characteristic::Layer)?)
            }
        })
    }

    /// Perfect with `Q/Z(Q)` simple.
    fn is_component(&self) -> Result<bool> {
        if self.is_trivial() || self.derived() != *self {
            return Ok(false);
        }
        let z = self.center();
        let above: Vec<_> = self.normal_subgroups()?.iter().filter(|n| z.is_subgroup_of(n)).cloned().collect();
        Ok(above.len() == 2)
    }

    /// Chief series choosing, at each step, the minimal normal subgroup of
    /// the current quotient with the smallest canonical key.
    pub fn chief_series(&self) -> Result<Arc<ChiefSeries>> {
        self.cache
            .chief
            .get_or_init(|| {
                let normals = self.normal_subgroups()?;
                let mut terms = vec![normals[0].clone()];
                let mut factors = Vec::new();
                while terms.last().unwrap().order() < self.order() {
                    let cur = terms.last().unwrap();
                    let next = minimal_above(&normals, cur).into_iter().next().unwrap();
                    factors.push(classify_factor(cur, next));
                    terms.push(next.clone());
                }
                Ok(Arc::new(ChiefSeries { terms, factors }))
            })
            .clone()
    }
}

/// Normal subgroups of `normals` minimal among those strictly above `n`,
/// in canonical order.
pub(crate) fn minimal_above<'a>(normals: &'a [Subgroup], n: &Subgroup) -> Vec<&'a Subgroup> {
    let above: Vec<&Subgroup> =
        normals.iter().filter(|m| m.order() > n.order() && n.is_subgroup_of(m)).collect();
    above
        .iter()
        .filter(|m| !above.iter().any(|l| l.order() < m.order() && l.is_subgroup_of(m)))
        .copied()
        .collect()
}

/// Kind of the factor `above/below` of two nested normal subgroups.
pub(crate) fn classify_factor(below: &Subgroup, above: &Subgroup) -> ChiefFactor {
    let order = above.order() / below.order();
    let ed = above.ed();
    let gens = above.generators();
    let abelian = gens.iter().all(|&a| gens.iter().all(|&b| below.contains(ed.commutator(a, b))));
    let kind = match crate::arith::factorize(order as u128).as_slice() {
        [(p, k)] if abelian => FactorKind::ElementaryAbelian { p: *p, rank: *k },
        _ => FactorKind::NonAbelian,
    };
    ChiefFactor { order, kind }
}

fn maximal_indices(all: &[Subgroup], m: &Subgroup) -> Vec<usize> {
    let below: Vec<usize> =
        (0..all.len()).filter(|&i| all[i].order() < m.order() && all[i].is_subgroup_of(m)).collect();
    below
        .iter()
        .copied()
        .filter(|&i| !below.iter().any(|&j| all[j].order() > all[i].order() && all[i].is_subgroup_of(&all[j])))
        .collect()
}

fn maximal_within(all: &[Subgroup], m: &Subgroup) -> Vec<Subgroup> {
    maximal_indices(all, m).into_iter().map(|i| all[i].clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

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

    fn s3() -> Subgroup {
        group(3, &["(1 2 3)", "(1 2)"])
    }

    fn a5() -> Subgroup {
        group(5, &["(1 2 3)", "(3 4 5)"])
    }

    fn cyc(n: usize) -> Subgroup {
        let c: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        group(n, &[&format!("({})", c.join(" "))])
    }

    fn d8() -> Subgroup {
        group(4, &["(1 2 3 4)", "(1 3)"])
    }

    /// Closes every subset of size <= 2 of the elements, then joins to a fixpoint.
    fn naive_subgroups(g: &Subgroup) -> usize {
        let els: Vec<Elem> = g.elements().collect();
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        let mut list = Vec::new();
        for &a in &els {
            for &b in &els {
                let s = Subgroup::generated(g.ambient(), &[a, b]).unwrap();
                if seen.insert(s.set().clone()) {
                    list.push(s);
                }
            }
        }
        let mut changed = true;
        while changed {
            changed = false;
            let snapshot = list.clone();
            for a in &snapshot {
                for b in &snapshot {
                    let j = a.join(b);
                    if seen.insert(j.set().clone()) {
                        list.push(j);
                        changed = true;
                    }
                }
            }
        }
        list.len()
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(cyc(6).all_subgroups().unwrap().len(), 4);
        assert_eq!(s3().all_subgroups().unwrap().len(), naive_subgroups(&s3()));
        assert_eq!(s3().all_subgroups().unwrap().len(), 6);
        let v4 = group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert_eq!(v4.all_subgroups().unwrap().len(), 5);
        assert_eq!(s4().all_subgroups().unwrap().len(), naive_subgroups(&s4()));
        assert_eq!(a5().all_subgroups().unwrap().len(), 59);
    }

    #[test]
    fn normal_and_subnormal() {
        let g = s4();
        let orders: Vec<usize> = g.normal_subgroups().unwrap().iter().map(|n| n.order()).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        assert_eq!(a5().normal_subgroups().unwrap().len(), 2);
        assert_eq!(a5().subnormal_subgroups().unwrap().len(), 2);
        let sn = g.subnormal_subgroups().unwrap();
        let mut orders: Vec<usize> = sn.iter().map(|n| n.order()).collect();
        orders.sort();
        assert_eq!(orders, vec![1, 2, 2, 2, 4, 12, 24]);
        for h in g.all_subgroups().unwrap().iter() {
            assert_eq!(sn.contains(h), g.is_subnormal(h));
        }
    }

    #[test]
    fn maximal_and_n_maximal() {
        let d = d8();
        let two_max = d.n_maximal_subgroups(2).unwrap();
        let order_two = d.all_subgroups().unwrap().iter().filter(|s| s.order() == 2).count();
        assert_eq!(two_max.len(), order_two);
        assert_eq!(order_two, 5);
        let orders: Vec<usize> = cyc(6).maximal_subgroups().unwrap().iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![2, 3]);
        let c8 = cyc(8).n_maximal_subgroups(3).unwrap();
        assert_eq!(c8.len(), 1);
        assert!(c8[0].is_trivial());
        assert!(cyc(8).n_maximal_subgroups(4).unwrap().is_empty());
        // general path on a non-p-group agrees with a chain search
        let g = s4();
        let two = g.n_maximal_subgroups(2).unwrap();
        let mut chain = Vec::new();
        for m in g.maximal_subgroups().unwrap().iter() {
            let all = g.all_subgroups().unwrap();
            for s in all.iter().filter(|s| s.order() < m.order() && s.is_subgroup_of(m)) {
                if !all.iter().any(|t| t.order() > s.order() && t.order() < m.order() && s.is_subgroup_of(t) && t.is_subgroup_of(m)) && !chain.contains(s) {
                    chain.push(s.clone());
                }
            }
        }
        chain.sort();
        assert_eq!(two, chain);
    }

    #[test]
    fn sylow_subgroups() {
        let g = s4();
        assert_eq!(g.sylow_all(2).len(), 3);
        assert!(g.sylow_all(2).iter().all(|p| p.order() == 8));
        let a = a5();
        assert_eq!(a.sylow_all(5).len(), 6);
        let c = cyc(6);
        assert_eq!(c.sylow(3).order(), 3);
        assert!(g.sylow(5).is_trivial());
        assert_eq!(g.sylow(2), g.sylow(2));
    }

    #[test]
    fn hall_subgroups() {
        let a = a5();
        let h = a.hall(&[2, 3]).unwrap();
        assert!(!h.is_empty() && h.iter().all(|s| s.order() == 12));
        assert_eq!(a.hall(&[2, 3, 5]).unwrap(), vec![a.clone()]);
        assert_eq!(s4().hall(&[3]).unwrap().len(), 4);
    }

    #[test]
    fn quotients() {
        let g = s4();
        let normals = g.normal_subgroups().unwrap();
        let q = g.quotient(&normals[1]).unwrap();
        assert_eq!(q.quotient().order(), 6);
        assert!(!q.quotient().is_abelian());
        assert_eq!(g.quotient(&normals[2]).unwrap().quotient().order(), 2);
        let t = g.quotient(&normals[0]).unwrap();
        assert_eq!(t.quotient().order(), 24);
        assert!(matches!(g.quotient(&sub(&g, &["(1 2)"])), Err(Error::NotNormal)));
        for x in g.elements() {
            for y in g.elements() {
                assert_eq!(q.forward(g.ed().mul(x, y)), q.quotient().ed().mul(q.forward(x), q.forward(y)));
            }
            assert_eq!(q.forward(x) == IDENTITY, normals[1].contains(x));
        }
        let s = sub(&g, &["(1 2)"]);
        assert_eq!(q.image(&s).order(), 2);
        assert_eq!(q.preimage(&q.image(&s)).order(), 8);
    }

    #[test]
    fn characteristic_subgroups() {
        let g = s4();
        assert_eq!(g.fitting().order(), 4);
        assert!(g.characteristic(Characteristic::Frattini).unwrap().is_trivial());
        assert_eq!(g.characteristic(Characteristic::FStar).unwrap().order(), 4);
        assert_eq!(g.derived().order(), 12);
        let a = a5();
        assert_eq!(a.characteristic(Characteristic::FStar).unwrap(), a);
        assert_eq!(g.o_subgroup(OSelector::P, 2).unwrap().order(), 4);
        assert!(g.o_subgroup(OSelector::P, 3).unwrap().is_trivial());
        assert_eq!(g.o_subgroup(OSelector::UpperP, 2).unwrap().order(), 12);
        assert!(d8().o_subgroup(OSelector::PPrime, 2).unwrap().is_trivial());
        assert_eq!(d8().characteristic(Characteristic::Frattini).unwrap().order(), 2);
        assert!(matches!(g.o_subgroup(OSelector::P, 4), Err(Error::NotPrime(4))));
    }

    #[test]
    fn chief_series_examples() {
        let g = s4();
        let cs = g.chief_series().unwrap();
        let orders: Vec<usize> = cs.factors.iter().map(|f| f.order).collect();
        assert_eq!(orders, vec![4, 3, 2]);
        assert_eq!(cs.factors[0].kind, FactorKind::ElementaryAbelian { p: 2, rank: 2 });
        let cs = cyc(5).chief_series().unwrap();
        assert_eq!(cs.factors.len(), 1);
        let cs = a5().chief_series().unwrap();
        assert_eq!(cs.factors, vec![ChiefFactor { order: 60, kind: FactorKind::NonAbelian }]);
    }
}
