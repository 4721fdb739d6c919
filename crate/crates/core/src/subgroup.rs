//! Subgroups of a materialized permutation group.
//!
//! A [`Subgroup`] is an element set (a bitset over the ambient group's sorted
//! element list) plus a short generating set. Every algorithm in this crate
//! treats a `Subgroup` as "the group" it works in, so lemma checks over
//! intermediate subgroups never rebuild anything.
//!
//! Each subgroup owns a lazily filled cache (Sylow orbits, normal subgroup
//! lists, property memos). Cloning a subgroup yields a value with an empty
//! cache; pass `&Subgroup` to share the cached work.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use fixedbitset::FixedBitSet;

use crate::classes::{FormationSelector, GroupClass};
use crate::error::{Error, Result};
use crate::group::{Elem, Elements, PermGroup, IDENTITY};
use crate::lattice::{Characteristic, ChiefSeries};
use crate::perm::Perm;

pub(crate) struct Memo<K, V>(Mutex<HashMap<K, V>>);

impl<K, V> Default for Memo<K, V> {
    fn default() -> Self {
        Memo(Mutex::new(HashMap::new()))
    }
}

impl<K: Eq + Hash, V: Clone> Memo<K, V> {
    /// Computes outside the lock, so recursive memo use cannot deadlock.
    pub(crate) fn get_or(&self, key: K, f: impl FnOnce() -> V) -> V {
        if let Some(v) = self.0.lock().unwrap().get(&key) {
            return v.clone();
        }
        let v = f();
        self.0.lock().unwrap().entry(key).or_insert(v).clone()
    }
}

pub(crate) type SubgroupList = Result<Arc<Vec<Subgroup>>>;

#[derive(Default)]
pub(crate) struct Cache {
    pub(crate) classes: OnceLock<Arc<Vec<Vec<Elem>>>>,
    pub(crate) sylow: Memo<u64, Subgroup>,
    pub(crate) sylow_all: Memo<u64, Arc<Vec<Subgroup>>>,
    pub(crate) all: OnceLock<SubgroupList>,
    pub(crate) normal: OnceLock<SubgroupList>,
    pub(crate) subnormal: OnceLock<SubgroupList>,
    pub(crate) maximal: OnceLock<SubgroupList>,
    pub(crate) s_quasinormal: OnceLock<SubgroupList>,
    pub(crate) chief: OnceLock<Result<Arc<ChiefSeries>>>,
    pub(crate) characteristic: Memo<Characteristic, Result<Subgroup>>,
    pub(crate) class: Memo<GroupClass, Result<bool>>,
    pub(crate) residual: Memo<FormationSelector, Result<Subgroup>>,
    pub(crate) hypercenter: Memo<FormationSelector, Result<Subgroup>>,
    pub(crate) sylow_closure_order: Memo<u64, usize>,
    pub(crate) props: Memo<(u8, FixedBitSet), Result<bool>>,
    pub(crate) supplement: Memo<(GroupClass, FixedBitSet), Result<Option<Subgroup>>>,
}

/// A subgroup of a fixed ambient [`PermGroup`].
pub struct Subgroup {
    ambient: Arc<PermGroup>,
    set: FixedBitSet,
    order: usize,
    gens: Vec<Elem>,
    pub(crate) cache: Cache,
}

impl Clone for Subgroup {
    fn clone(&self) -> Self {
        Subgroup {
            ambient: self.ambient.clone(),
            set: self.set.clone(),
            order: self.order,
            gens: self.gens.clone(),
            cache: Cache::default(),
        }
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.set == other.set
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.set.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by order, then lexicographically by sorted element list.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.cmp(&other.order).then_with(|| canonical_cmp(&self.set, &other.set))
    }
}

/// Lexicographic comparison of the sorted index lists of two equal-size sets.
fn canonical_cmp(a: &FixedBitSet, b: &FixedBitSet) -> Ordering {
    for (x, y) in a.as_slice().iter().zip(b.as_slice()) {
        let d = x ^ y;
        if d != 0 {
            let bit = 1usize << d.trailing_zeros();
            return if x & bit != 0 { Ordering::Less } else { Ordering::Greater };
        }
    }
    Ordering::Equal
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup({})", self.describe())
    }
}

impl Subgroup {
    /// The whole ambient group. Materializes its element list.
    pub fn whole(ambient: &Arc<PermGroup>) -> Result<Subgroup> {
        let ed = ambient.elems()?;
        let mut set = FixedBitSet::with_capacity(ed.len());
        set.insert_range(..);
        let gens = ambient.generators().iter().filter_map(|g| ed.index_of(g)).filter(|&g| g != IDENTITY).collect();
        Ok(Subgroup { ambient: ambient.clone(), set, order: ed.len(), gens, cache: Cache::default() })
    }

    pub fn trivial(ambient: &Arc<PermGroup>) -> Result<Subgroup> {
        let ed = ambient.elems()?;
        let mut set = FixedBitSet::with_capacity(ed.len());
        set.insert(IDENTITY as usize);
        Ok(Subgroup { ambient: ambient.clone(), set, order: 1, gens: Vec::new(), cache: Cache::default() })
    }

    /// Subgroup generated by permutations of the ambient group.
    pub fn from_perms(ambient: &Arc<PermGroup>, perms: &[Perm]) -> Result<Subgroup> {
        let ed = ambient.elems()?;
        let mut idx = Vec::with_capacity(perms.len());
        for p in perms {
            if p.degree() != ambient.degree() {
                return Err(Error::DegreeMismatch { expected: ambient.degree(), found: p.degree() });
            }
            idx.push(ed.index_of(p).ok_or(Error::NotSubgroup)?);
        }
        Ok(Subgroup::trivial(ambient)?.extended(&idx))
    }

    /// Subgroup generated by element indices.
    pub fn generated(ambient: &Arc<PermGroup>, gens: &[Elem]) -> Result<Subgroup> {
        Ok(Subgroup::trivial(ambient)?.extended(gens))
    }

    /// Wraps a set already known to be closed under multiplication.
    pub(crate) fn from_closed_set(ambient: &Arc<PermGroup>, set: FixedBitSet) -> Subgroup {
        let mut s = Subgroup::trivial(ambient).unwrap();
        for x in set.ones() {
            if !s.set.contains(x) {
                s = s.extended(&[x as Elem]);
            }
        }
        debug_assert!(s.set == set, "from_closed_set given a non-subgroup");
        s
    }

    pub fn ambient(&self) -> &Arc<PermGroup> {
        &self.ambient
    }

    pub(crate) fn ed(&self) -> &Elements {
        self.ambient.ed()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn set(&self) -> &FixedBitSet {
        &self.set
    }

    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    pub fn generator_perms(&self) -> Vec<Perm> {
        self.gens.iter().map(|&g| self.ed().perm(g).clone()).collect()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.set.contains(x as usize)
    }

    pub fn contains_perm(&self, p: &Perm) -> bool {
        self.ed().index_of(p).is_some_and(|x| self.contains(x))
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.set.ones().map(|x| x as Elem)
    }

    /// Elements as permutations, in canonical order.
    pub fn element_perms(&self) -> Vec<Perm> {
        self.elements().map(|x| self.ed().perm(x).clone()).collect()
    }

    /// `self <= other`.
    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order <= other.order && other.order.is_multiple_of(self.order) && self.set.is_subset(&other.set)
    }

    /// Order followed by the generators in cycle notation.
    pub fn describe(&self) -> String {
        let gens: Vec<String> = self.generator_perms().iter().map(|p| p.to_string()).collect();
        format!("order {} <{}>", self.order, gens.join(", "))
    }

    /// Subgroup generated by `self` and `new`.
    pub fn extended(&self, new: &[Elem]) -> Subgroup {
        self.extended_bounded(new, usize::MAX).expect("unbounded closure")
    }

    /// Dimino closure; gives up with `None` once the result exceeds `limit`.
    pub(crate) fn extended_bounded(&self, new: &[Elem], limit: usize) -> Option<Subgroup> {
        let ed = self.ed();
        let mut set = self.set.clone();
        let mut list: Vec<Elem> = self.elements().collect();
        let mut gens = self.gens.clone();
        for &g in new {
            if set.contains(g as usize) {
                continue;
            }
            gens.push(g);
            let base: Vec<Elem> = list.clone();
            let mut reps = vec![IDENTITY];
            let mut k = 0;
            while k < reps.len() {
                let r = reps[k];
                k += 1;
                for &h in &gens {
                    let y = ed.mul(r, h);
                    if set.contains(y as usize) {
                        continue;
                    }
                    if list.len() + base.len() > limit {
                        return None;
                    }
                    for &c in &base {
                        let z = ed.mul(c, y);
                        set.insert(z as usize);
                        list.push(z);
                    }
                    reps.push(y);
                }
            }
        }
        if list.len() > limit {
            return None;
        }
        Some(Subgroup { ambient: self.ambient.clone(), set, order: list.len(), gens, cache: Cache::default() })
    }

    /// `<self, other>`.
    pub fn join(&self, other: &Subgroup) -> Subgroup {
        if other.is_subgroup_of(self) {
            return self.clone();
        }
        if self.is_subgroup_of(other) {
            return other.clone();
        }
        self.extended(&other.gens)
    }

    /// `self ∩ other`.
    pub fn meet(&self, other: &Subgroup) -> Subgroup {
        if self.is_subgroup_of(other) {
            return self.clone();
        }
        if other.is_subgroup_of(self) {
            return other.clone();
        }
        let mut set = self.set.clone();
        set.intersect_with(&other.set);
        Subgroup::from_closed_set(&self.ambient, set)
    }

    /// `|self ∩ other|`.
    pub fn meet_order(&self, other: &Subgroup) -> usize {
        self.set.intersection_count(&other.set)
    }

    /// Size of the product set `self * other`.
    pub fn product_size(&self, other: &Subgroup) -> usize {
        self.order * other.order / self.meet_order(other)
    }

    /// Whether `AB = BA`, i.e. the product set is a subgroup.
    pub fn permutes_with(&self, other: &Subgroup) -> bool {
        if self.is_subgroup_of(other) || other.is_subgroup_of(self) {
            return true;
        }
        let target = self.product_size(other);
        match self.extended_bounded(&other.gens, target) {
            Some(j) => j.order == target,
            None => false,
        }
    }

    /// `g^-1 H g`.
    pub fn conjugate(&self, g: Elem) -> Subgroup {
        let ed = self.ed();
        let mut set = FixedBitSet::with_capacity(self.set.len());
        for x in self.elements() {
            set.insert(ed.conj(x, g) as usize);
        }
        Subgroup {
            ambient: self.ambient.clone(),
            set,
            order: self.order,
            gens: self.gens.iter().map(|&x| ed.conj(x, g)).collect(),
            cache: Cache::default(),
        }
    }

    /// Whether `h` is normalized by every generator of `self`.
    pub fn normalizes(&self, h: &Subgroup) -> bool {
        let ed = self.ed();
        self.gens.iter().all(|&g| h.gens.iter().all(|&x| h.contains(ed.conj(x, g))))
    }

    /// `H ⊴ self` (with `H <= self`).
    pub fn has_normal(&self, h: &Subgroup) -> bool {
        h.is_subgroup_of(self) && self.normalizes(h)
    }

    /// `N_self(H)` by element scan.
    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let ed = self.ed();
        let mut set = FixedBitSet::with_capacity(self.set.len());
        for g in self.elements() {
            if h.gens.iter().all(|&x| h.contains(ed.conj(x, g))) {
                set.insert(g as usize);
            }
        }
        Subgroup::from_closed_set(&self.ambient, set)
    }

    /// `C_self(H)` by element scan.
    pub fn centralizer(&self, h: &Subgroup) -> Subgroup {
        let ed = self.ed();
        let mut set = FixedBitSet::with_capacity(self.set.len());
        for g in self.elements() {
            if h.gens.iter().all(|&x| ed.mul(x, g) == ed.mul(g, x)) {
                set.insert(g as usize);
            }
        }
        Subgroup::from_closed_set(&self.ambient, set)
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer(self)
    }

    /// Smallest normal subgroup of `self` containing the given elements.
    pub fn normal_closure_of(&self, elems: &[Elem]) -> Subgroup {
        let ed = self.ed();
        let mut n = Subgroup::trivial(&self.ambient).unwrap().extended(elems);
        let mut k = 0;
        while k < n.gens.len() {
            let x = n.gens[k];
            k += 1;
            for &g in &self.gens {
                let c = ed.conj(x, g);
                if !n.contains(c) {
                    n = n.extended(&[c]);
                }
            }
        }
        n
    }

    /// `H^self`.
    pub fn normal_closure(&self, h: &Subgroup) -> Subgroup {
        if self.normalizes(h) {
            return h.clone();
        }
        self.normal_closure_of(&h.gens)
    }

    /// Conjugates of `H` under `self`, in canonical order.
    pub fn conjugates(&self, h: &Subgroup) -> Vec<Subgroup> {
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        let mut orbit = vec![h.clone()];
        seen.insert(h.set.clone());
        let mut k = 0;
        while k < orbit.len() {
            for &g in &self.gens {
                let c = orbit[k].conjugate(g);
                if seen.insert(c.set.clone()) {
                    orbit.push(c);
                }
            }
            k += 1;
        }
        orbit.sort();
        orbit
    }

    /// `H_self`, the intersection of the conjugates of `H`.
    pub fn core(&self, h: &Subgroup) -> Subgroup {
        if self.normalizes(h) {
            return h.clone();
        }
        let mut set = h.set.clone();
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        let mut queue = vec![h.clone()];
        seen.insert(h.set.clone());
        while let Some(c) = queue.pop() {
            set.intersect_with(&c.set);
            for &g in &self.gens {
                let d = c.conjugate(g);
                if seen.insert(d.set.clone()) {
                    queue.push(d);
                }
            }
        }
        Subgroup::from_closed_set(&self.ambient, set)
    }

    /// Subnormality via the descending chain `K_{i+1} = H^{K_i}`.
    pub fn is_subnormal(&self, h: &Subgroup) -> bool {
        let mut k = self.clone();
        loop {
            if k == *h {
                return true;
            }
            let next = k.normal_closure(h);
            if next == k {
                return false;
            }
            k = next;
        }
    }

    /// Conjugacy classes of `self`, each sorted, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Arc<Vec<Vec<Elem>>> {
        self.cache
            .classes
            .get_or_init(|| {
                let ed = self.ed();
                let mut seen = FixedBitSet::with_capacity(self.set.len());
                let mut classes = Vec::new();
                for x in self.elements() {
                    if seen.contains(x as usize) {
                        continue;
                    }
                    seen.insert(x as usize);
                    let mut class = vec![x];
                    let mut k = 0;
                    while k < class.len() {
                        let y = class[k];
                        k += 1;
                        for &g in &self.gens {
                            let z = ed.conj(y, g);
                            if !seen.contains(z as usize) {
                                seen.insert(z as usize);
                                class.push(z);
                            }
                        }
                    }
                    class.sort_unstable();
                    classes.push(class);
                }
                Arc::new(classes)
            })
            .clone()
    }

    pub fn is_abelian(&self) -> bool {
        let ed = self.ed();
        self.gens.iter().all(|&a| self.gens.iter().all(|&b| ed.mul(a, b) == ed.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        let ed = self.ed();
        self.elements().any(|x| ed.order_of(x) as usize == self.order)
    }

    pub fn element_order(&self, x: Elem) -> u32 {
        self.ed().order_of(x)
    }
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

    fn a5() -> Subgroup {
        group(5, &["(1 2 3)", "(3 4 5)"])
    }

    #[test]
    fn permutability_examples() {
        let g = s4();
        // <(1 4)><(1 2 3)> has 6 elements but is not closed
        assert!(!sub(&g, &["(1 4)"]).permutes_with(&sub(&g, &["(1 2 3)"])));
        assert!(!sub(&g, &["(1 2 3)"]).permutes_with(&sub(&g, &["(1 4)"])));
        let a = sub(&g, &["(1 2)"]);
        assert!(a.permutes_with(&a));
        let b = sub(&g, &["(1 2 3)"]);
        assert!(a.permutes_with(&b));
        assert_eq!(a.join(&b).order(), 6);
        assert!(a.join(&b).elements().all(|x| g.ed().perm(x).apply(3) == 3));
    }

    #[test]
    fn closure_and_core() {
        let g = s4();
        let q = sub(&g, &["(1 2 3)"]);
        let qg = g.normal_closure(&q);
        assert_eq!(qg.order(), 12);
        assert!(qg.elements().all(|x| g.ed().perm(x).cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0));
        assert_eq!(g.core(&g), g);
        let a = a5();
        let stab = sub(&a, &["(1 2 3)", "(1 2)(3 4)"]);
        assert_eq!(stab.order(), 12);
        assert!(a.core(&stab).is_trivial());
    }

    #[test]
    fn normalizers_and_centralizers() {
        let g = s4();
        assert_eq!(g.normalizer(&sub(&g, &["(1 2 3 4)"])).order(), 8);
        let t = Subgroup::trivial(g.ambient()).unwrap();
        assert_eq!(g.centralizer(&t), g);
        let a = a5();
        assert_eq!(a.normalizer(&sub(&a, &["(1 2 3 4 5)"])).order(), 10);
        assert!(g.center().is_trivial());
    }

    #[test]
    fn subnormality() {
        let a = a5();
        let stab = sub(&a, &["(1 2 3)", "(1 2)(3 4)"]);
        assert!(!a.is_subnormal(&stab));
        let g = s4();
        assert!(g.is_subnormal(&sub(&g, &["(1 2)(3 4)"])));
        assert!(!g.is_subnormal(&sub(&g, &["(1 2)"])));
        assert!(g.is_subnormal(&g));
    }

    #[test]
    fn join_meet() {
        let g = s4();
        let h = sub(&g, &["(1 2)"]);
        let t = Subgroup::trivial(g.ambient()).unwrap();
        assert_eq!(h.join(&t), h);
        assert_eq!(h.meet(&t), t);
        assert_eq!(h.meet(&h), h);
        let v = sub(&g, &["(1 2)"]).join(&sub(&g, &["(3 4)"]));
        assert_eq!(v.order(), 4);
        assert!(!v.is_cyclic() && v.is_abelian());
    }

    #[test]
    fn canonical_order_is_total_and_by_order_first() {
        let g = s4();
        let mut subs = [sub(&g, &["(3 4)"]), sub(&g, &["(1 2)"]), g.clone(), sub(&g, &["(1 2 3)"])];
        subs.sort();
        assert_eq!(subs[0].order(), 2);
        assert_eq!(subs[1].order(), 2);
        assert!(subs[0] < subs[1]);
        assert_eq!(subs[3], g);
        // lexicographic on sorted element lists for equal orders
        let lists: Vec<Vec<Elem>> = subs[..2].iter().map(|s| s.elements().collect()).collect();
        assert!(lists[0] < lists[1]);
    }

    #[test]
    fn conjugacy_classes_of_s4() {
        let g = s4();
        let classes = g.conjugacy_classes();
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]
            #[test]
            fn product_permutability_is_symmetric_and_counts(a in 0u32..24, b in 0u32..24, c in 0u32..24) {
                let g = s4();
                let x = Subgroup::generated(g.ambient(), &[a]).unwrap();
                let y = Subgroup::generated(g.ambient(), &[b, c]).unwrap();
                prop_assert_eq!(x.permutes_with(&y), y.permutes_with(&x));
                // materialize AB and compare the counting formula
                let ed = g.ed();
                let mut prod = std::collections::BTreeSet::new();
                for p in x.elements() { for q in y.elements() { prod.insert(ed.mul(p, q)); } }
                prop_assert_eq!(prod.len(), x.product_size(&y));
                let closed = prod.iter().all(|&p| prod.iter().all(|&q| prod.contains(&ed.mul(p, q))));
                prop_assert_eq!(closed, x.permutes_with(&y));
            }

            #[test]
            fn closure_and_core_are_conjugation_fixed(a in 0u32..60, b in 0u32..60) {
                let g = a5();
                let h = Subgroup::generated(g.ambient(), &[a, b]).unwrap();
                let n = g.normal_closure(&h);
                let c = g.core(&h);
                prop_assert!(h.is_subgroup_of(&n));
                prop_assert!(c.is_subgroup_of(&h));
                for x in g.elements() {
                    prop_assert_eq!(n.conjugate(x), n.clone());
                    prop_assert_eq!(c.conjugate(x), c.clone());
                }
                if c == h {
                    prop_assert!(g.is_subnormal(&h));
                }
            }
        }
    }
}
