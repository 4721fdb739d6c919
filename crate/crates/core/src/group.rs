//! Permutation groups given by generators.
//!
//! A [`PermGroup`] carries a deterministic stabilizer chain (base points are
//! the smallest point not fixed at each level) and, when the order is within
//! [`Caps::element`], a lazily built element list sorted lexicographically by
//! image sequence. Elements are then addressed by their index in that list;
//! index 0 is always the identity.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Elements are addressed by index into the ambient group's sorted list.
pub type Elem = u32;

/// Identity element index.
pub const IDENTITY: Elem = 0;

/// Multiplication tables are built only up to this order.
const TABLE_CAP: usize = 4096;

/// Size limits for the enumerative algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest group order whose element list may be materialized.
    pub element: usize,
    /// Largest group order whose full subgroup lattice may be enumerated.
    pub lattice: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { element: 20_000, lattice: 400 }
    }
}

#[derive(Debug, Clone)]
struct Level {
    base: u32,
    /// Strong generators fixing every earlier base point.
    gens: Vec<Perm>,
    orbit: Vec<u32>,
    /// `reps[b] = (u, u^-1)` with `base^u = b`.
    reps: Vec<Option<(Perm, Perm)>>,
}

/// Base and strong generating set with explicit transversals.
#[derive(Debug, Clone)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    /// Deterministic Schreier-Sims.
    fn build(degree: usize, gens: &[Perm]) -> StabChain {
        let mut chain = StabChain { degree, levels: Vec::new() };
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        for g in &gens {
            if chain.levels.iter().all(|l| g.apply(l.base) == l.base) {
                chain.push_level(g.first_moved().unwrap());
            }
        }
        for i in 0..chain.levels.len() {
            let fixing: Vec<Perm> = gens
                .iter()
                .filter(|g| chain.levels[..i].iter().all(|l| g.apply(l.base) == l.base))
                .cloned()
                .collect();
            chain.levels[i].gens = fixing;
            chain.rebuild_orbit(i);
        }

        let mut i = chain.levels.len();
        while i > 0 {
            let lvl = i - 1;
            match chain.find_new_strong_generator(lvl) {
                None => i -= 1,
                Some((h, j)) => {
                    // h fixes the first j base points; j == levels.len() means it
                    // passed through every level
                    if j == chain.levels.len() {
                        chain.push_level(h.first_moved().unwrap());
                    }
                    for l in (lvl + 1)..=j {
                        chain.levels[l].gens.push(h.clone());
                        chain.rebuild_orbit(l);
                    }
                    i = j + 1;
                }
            }
        }
        chain
    }

    fn push_level(&mut self, base: u32) {
        let mut reps = vec![None; self.degree];
        let id = Perm::identity(self.degree);
        reps[base as usize] = Some((id.clone(), id));
        self.levels.push(Level { base, gens: Vec::new(), orbit: vec![base], reps });
    }

    fn rebuild_orbit(&mut self, i: usize) {
        let level = &mut self.levels[i];
        let id = Perm::identity(self.degree);
        level.reps.iter_mut().for_each(|r| *r = None);
        level.reps[level.base as usize] = Some((id.clone(), id));
        level.orbit = vec![level.base];
        let mut k = 0;
        while k < level.orbit.len() {
            let beta = level.orbit[k];
            for s in &level.gens {
                let gamma = s.apply(beta);
                if level.reps[gamma as usize].is_none() {
                    let u = level.reps[beta as usize].as_ref().unwrap().0.then(s);
                    let inv = u.inverse();
                    level.reps[gamma as usize] = Some((u, inv));
                    level.orbit.push(gamma);
                }
            }
            k += 1;
        }
    }

    /// Looks for a Schreier generator at level `i` that does not sift through
    /// the deeper levels. Returns the residue and the index of the level where
    /// sifting stopped.
    fn find_new_strong_generator(&self, i: usize) -> Option<(Perm, usize)> {
        let level = &self.levels[i];
        for &beta in &level.orbit {
            let u = &level.reps[beta as usize].as_ref().unwrap().0;
            for s in &level.gens {
                let gamma = s.apply(beta);
                let uinv = &level.reps[gamma as usize].as_ref().unwrap().1;
                let sg = u.then(s).then(uinv);
                if sg.is_identity() {
                    continue;
                }
                let (res, stop) = self.sift(&sg, i + 1);
                if stop < self.levels.len() || !res.is_identity() {
                    return Some((res, stop));
                }
            }
        }
        None
    }

    /// Sifts `g` from level `from`; returns the residue and the level index
    /// at which sifting stopped (`levels.len()` when it passed every level).
    fn sift(&self, g: &Perm, from: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for (k, level) in self.levels.iter().enumerate().skip(from) {
            let beta = h.apply(level.base);
            match &level.reps[beta as usize] {
                None => return (h, k),
                Some((_, uinv)) => h = h.then(uinv),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        let (res, stop) = self.sift(g, 0);
        stop == self.levels.len() && res.is_identity()
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn strong_generators(&self) -> Vec<Perm> {
        self.levels.first().map(|l| l.gens.clone()).unwrap_or_default()
    }

    fn enumerate(&self) -> Vec<Perm> {
        let mut elems = vec![Perm::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elems.len() * level.orbit.len());
            for x in &elems {
                for &b in &level.orbit {
                    next.push(x.then(&level.reps[b as usize].as_ref().unwrap().0));
                }
            }
            elems = next;
        }
        elems
    }
}

enum ElementIndex {
    Packed { radix: u128, map: HashMap<u128, Elem> },
    Wide(HashMap<Vec<u32>, Elem>),
}

/// Materialized elements with lookup and (for small groups) a Cayley table.
pub struct Elements {
    perms: Vec<Perm>,
    base: Vec<u32>,
    index: ElementIndex,
    inverse: Vec<Elem>,
    table: Option<Vec<u16>>,
    orders: OnceLock<Vec<u32>>,
}

impl Elements {
    fn new(mut perms: Vec<Perm>, base: Vec<u32>, degree: usize) -> Elements {
        perms.sort_unstable();
        let radix = degree as u128;
        let fits = (0..base.len()).try_fold(1u128, |acc, _| acc.checked_mul(radix)).is_some();
        let index = if fits {
            let map = perms
                .iter()
                .enumerate()
                .map(|(i, p)| (pack(radix, base.iter().map(|&b| p.apply(b))), i as Elem))
                .collect();
            ElementIndex::Packed { radix, map }
        } else {
            ElementIndex::Wide(
                perms
                    .iter()
                    .enumerate()
                    .map(|(i, p)| (base.iter().map(|&b| p.apply(b)).collect(), i as Elem))
                    .collect(),
            )
        };
        let mut e = Elements { perms, base, index, inverse: Vec::new(), table: None, orders: OnceLock::new() };
        e.inverse = (0..e.perms.len()).map(|i| e.index_of(&e.perms[i].inverse()).unwrap()).collect();
        let n = e.perms.len();
        if n <= TABLE_CAP {
            let mut table = vec![0u16; n * n];
            for i in 0..n {
                for j in 0..n {
                    table[i * n + j] = e.mul_slow(i as Elem, j as Elem) as u16;
                }
            }
            e.table = Some(table);
        }
        e
    }

    fn lookup_images(&self, images: impl Iterator<Item = u32>) -> Option<Elem> {
        match &self.index {
            ElementIndex::Packed { radix, map } => map.get(&pack(*radix, images)).copied(),
            ElementIndex::Wide(map) => map.get(&images.collect::<Vec<_>>()).copied(),
        }
    }

    /// Index of a permutation, if it lies in the group.
    pub fn index_of(&self, p: &Perm) -> Option<Elem> {
        let i = self.lookup_images(self.base.iter().map(|&b| p.apply(b)))?;
        (self.perms[i as usize] == *p).then_some(i)
    }

    fn mul_slow(&self, a: Elem, b: Elem) -> Elem {
        let pa = &self.perms[a as usize];
        let pb = &self.perms[b as usize];
        self.lookup_images(self.base.iter().map(|&x| pb.apply(pa.apply(x))))
            .expect("group closed under multiplication")
    }

    /// Product `a` then `b`.
    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.table {
            Some(t) => t[a as usize * self.perms.len() + b as usize] as Elem,
            None => self.mul_slow(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a as usize]
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        let mut acc = crate::group::IDENTITY;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn perm(&self, a: Elem) -> &Perm {
        &self.perms[a as usize]
    }

    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    pub fn order_of(&self, a: Elem) -> u32 {
        self.orders.get_or_init(|| {
            (0..self.perms.len() as Elem)
                .map(|x| {
                    let mut y = x;
                    let mut k = 1;
                    while y != IDENTITY {
                        y = self.mul(y, x);
                        k += 1;
                    }
                    k
                })
                .collect()
        })[a as usize]
    }
}

fn pack(radix: u128, images: impl Iterator<Item = u32>) -> u128 {
    let mut key = 0u128;
    let mut scale = 1u128;
    for x in images {
        key += x as u128 * scale;
        scale = scale.wrapping_mul(radix);
    }
    key
}

/// A permutation group given by generators.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    chain: StabChain,
    order: u128,
    caps: Caps,
    elements: OnceLock<Result<Elements>>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    /// Group generated by `gens` on `degree` points, with default caps.
    pub fn generate(degree: usize, gens: Vec<Perm>) -> Result<Arc<PermGroup>> {
        PermGroup::generate_with_caps(degree, gens, Caps::default())
    }

    pub fn generate_with_caps(degree: usize, gens: Vec<Perm>, caps: Caps) -> Result<Arc<PermGroup>> {
        if degree == 0 {
            return Err(Error::EmptyDegree);
        }
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
        }
        let chain = StabChain::build(degree, &gens);
        let order = chain.order();
        debug_assert!(gens.iter().all(|g| chain.contains(g)));
        Ok(Arc::new(PermGroup { degree, generators: gens, chain, order, caps, elements: OnceLock::new() }))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn chain(&self) -> &StabChain {
        &self.chain
    }

    pub fn member(&self, x: &Perm) -> Result<bool> {
        if x.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: x.degree() });
        }
        Ok(self.chain.contains(x))
    }

    /// Materialized element data; errors when the order exceeds the element cap.
    pub fn elems(&self) -> Result<&Elements> {
        self.elements
            .get_or_init(|| {
                if self.order > self.caps.element as u128 {
                    return Err(Error::CapExceeded { what: "group order", size: self.order, cap: self.caps.element });
                }
                Ok(Elements::new(self.chain.enumerate(), self.chain.base(), self.degree))
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// All elements in lexicographic order of image sequences.
    pub fn elements(&self) -> Result<&[Perm]> {
        Ok(self.elems()?.perms())
    }

    /// Element data for a group whose elements are known to be enumerated.
    pub(crate) fn ed(&self) -> &Elements {
        self.elems().expect("element list materialized before subgroup construction")
    }

    /// Emits the group text format: `degree N` then one `gen` line per generator.
    pub fn to_text(&self) -> String {
        let mut s = format!("degree {}\n", self.degree);
        for g in &self.generators {
            s.push_str(&format!("gen {}\n", g));
        }
        s
    }
}
