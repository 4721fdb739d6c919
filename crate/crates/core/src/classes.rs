//! Group classes, formation residuals and hypercenters.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::arith::{factorize, is_prime};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::lattice::{classify_factor, minimal_above, Cosets, FactorKind};
use crate::perm::Perm;
use crate::subgroup::Subgroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupClass {
    Nilpotent,
    PNilpotent(u64),
    Supersolvable,
    Solvable,
    PGroup(u64),
    A4Free,
}

impl fmt::Display for GroupClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupClass::Nilpotent => write!(f, "nilpotent"),
            GroupClass::PNilpotent(p) => write!(f, "{p}-nilpotent"),
            GroupClass::Supersolvable => write!(f, "supersolvable"),
            GroupClass::Solvable => write!(f, "solvable"),
            GroupClass::PGroup(p) => write!(f, "{p}-group"),
            GroupClass::A4Free => write!(f, "A4-free"),
        }
    }
}

/// The concrete formations: nilpotent, p-nilpotent and supersolvable groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormationSelector {
    N,
    Np(u64),
    U,
}

impl FormationSelector {
    pub fn class(self) -> GroupClass {
        match self {
            FormationSelector::N => GroupClass::Nilpotent,
            FormationSelector::Np(p) => GroupClass::PNilpotent(p),
            FormationSelector::U => GroupClass::Supersolvable,
        }
    }
}

impl fmt::Display for FormationSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormationSelector::N => write!(f, "N"),
            FormationSelector::Np(p) => write!(f, "N_{p}"),
            FormationSelector::U => write!(f, "U"),
        }
    }
}

fn check_prime(class: GroupClass) -> Result<()> {
    match class {
        GroupClass::PNilpotent(p) | GroupClass::PGroup(p) if !is_prime(p) => Err(Error::NotPrime(p)),
        _ => Ok(()),
    }
}

impl Subgroup {
    /// Membership of the group in a class.
    pub fn is_class(&self, class: GroupClass) -> Result<bool> {
        check_prime(class)?;
        self.cache.class.get_or(class, || self.compute_class(class))
    }

    fn compute_class(&self, class: GroupClass) -> Result<bool> {
        Ok(match class {
            GroupClass::PGroup(p) => self.is_p_group(p),
            GroupClass::Nilpotent => self.primes().into_iter().all(|p| self.normalizes(&self.sylow(p))),
            GroupClass::PNilpotent(p) => {
                let target = self.order() / self.p_part(p);
                target == 1 || self.normal_subgroups()?.iter().any(|n| n.order() == target)
            }
            GroupClass::Supersolvable => self.chief_series()?.factors.iter().all(|f| is_prime(f.order as u64)),
            GroupClass::Solvable => {
                self.chief_series()?.factors.iter().all(|f| matches!(f.kind, FactorKind::ElementaryAbelian { .. }))
            }
            GroupClass::A4Free => self.is_a4_free()?,
        })
    }

    fn is_a4_free(&self) -> Result<bool> {
        if !self.order().is_multiple_of(12) {
            return Ok(true);
        }
        if self.contains_a4_subgroup()? {
            return Ok(false);
        }
        for h in self.all_subgroups()?.iter() {
            if h.order() % 12 != 0 {
                continue;
            }
            for n in h.normal_subgroups()?.iter() {
                if h.order() == 12 * n.order() && section_is_a4(h, n) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Smallest normal subgroup with quotient in the formation.
    pub fn residual(&self, f: FormationSelector) -> Result<Subgroup> {
        check_prime(f.class())?;
        self.cache.residual.get_or(f, || {
            let normals = self.normal_subgroups()?;
            let mut flags = Vec::with_capacity(normals.len());
            let mut set = self.set().clone();
            for n in normals.iter() {
                let ok = self.quotient(n)?.quotient().is_class(f.class())?;
                if ok {
                    set.intersect_with(n.set());
                }
                flags.push(ok);
            }
            let pos = normals
                .iter()
                .position(|n| *n.set() == set)
                .ok_or_else(|| Error::Invariant("residual is not a normal subgroup".into()))?;
            if !flags[pos] {
                return Err(Error::Invariant(format!("quotient by the {f}-residual is not in the class")));
            }
            Ok(normals[pos].clone())
        })
    }

    /// Product of the normal subgroups all of whose chief factors are
    /// `f`-central, built up through minimal normal subgroups of quotients.
    pub fn hypercenter(&self, f: FormationSelector) -> Result<Subgroup> {
        check_prime(f.class())?;
        self.cache.hypercenter.get_or(f, || {
            let normals = self.normal_subgroups()?;
            let mut z = normals[0].clone();
            loop {
                let mut next = z.clone();
                for m in minimal_above(&normals, &z) {
                    if self.f_central_unchecked(&z, m, f)? {
                        next = next.join(m);
                    }
                }
                if next == z {
                    return Ok(z);
                }
                z = next;
            }
        })
    }

    /// Whether the chief factor `above/below` is `f`-central: the affine
    /// group `V ⋊ G/C_G(V)` on the points of `V` lies in the class.
    pub fn f_central(&self, below: &Subgroup, above: &Subgroup, f: FormationSelector) -> Result<bool> {
        check_prime(f.class())?;
        if !self.has_normal(below) || !self.has_normal(above) || !below.is_subgroup_of(above) || below == above {
            return Err(Error::NotChiefFactor("terms must be nested distinct normal subgroups".into()));
        }
        let normals = self.normal_subgroups()?;
        if !minimal_above(&normals, below).into_iter().any(|m| m == above) {
            return Err(Error::NotChiefFactor(format!(
                "a normal subgroup lies strictly between orders {} and {}",
                below.order(),
                above.order()
            )));
        }
        self.f_central_unchecked(below, above, f)
    }

    fn f_central_unchecked(&self, below: &Subgroup, above: &Subgroup, f: FormationSelector) -> Result<bool> {
        if classify_factor(below, above).kind == FactorKind::NonAbelian {
            return Ok(false);
        }
        let ed = self.ed();
        if f == FormationSelector::N {
            return Ok(above
                .generators()
                .iter()
                .all(|&v| self.generators().iter().all(|&g| below.contains(ed.commutator(v, g)))));
        }
        self.affine_group(below, above)?.is_class(f.class())
    }

    /// `V ⋊ (G/C_G(V))` for `V = above/below`, acting on the cosets of `below`.
    pub(crate) fn affine_group(&self, below: &Subgroup, above: &Subgroup) -> Result<Subgroup> {
        let ed = self.ed();
        let cosets = Cosets::new(above, below);
        let mut gens: Vec<Perm> = Vec::new();
        for &v in above.generators() {
            gens.push(cosets.induced(|r| ed.mul(r, v)));
        }
        for &g in self.generators() {
            gens.push(cosets.induced(|r| ed.conj(r, g)));
        }
        let group = PermGroup::generate_with_caps(cosets.len(), gens, self.ambient().caps())?;
        Subgroup::whole(&group)
    }
}

/// `H/N` of order 12 with 3 involutions and 8 elements of order 3.
impl Subgroup {
    /// Looks for a Klein four-group normalized but not centralized by an
    /// element of order 3. Every Klein four-group is conjugate into the
    /// chosen Sylow 2-subgroup, so its subgroups suffice.
    fn contains_a4_subgroup(&self) -> Result<bool> {
        let sylow = self.sylow(2);
        for v in sylow.all_subgroups()?.iter() {
            if v.order() != 4 || v.is_cyclic() {
                continue;
            }
            let n = self.normalizer(v);
            if !n.order().is_multiple_of(3) {
                continue;
            }
            let c = self.centralizer(v);
            if n.elements().any(|x| n.element_order(x) == 3 && !c.contains(x)) {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn section_is_a4(h: &Subgroup, n: &Subgroup) -> bool {
    let ed = h.ed();
    let mut counts = [0usize; 13];
    let mut seen = FixedBitSet::with_capacity(ed.len());
    for x in h.elements() {
        if seen.contains(x as usize) {
            continue;
        }
        for y in n.elements() {
            seen.insert(ed.mul(y, x) as usize);
        }
        let mut k = 1;
        let mut y = x;
        while !n.contains(y) {
            y = ed.mul(y, x);
            k += 1;
        }
        counts[k] += 1;
    }
    counts[2] == 3 && counts[3] == 8
}

/// Group-order helpers independent of any particular group.
pub fn primes_of(order: u128) -> Vec<u64> {
    factorize(order).into_iter().map(|(p, _)| p).collect()
}

pub fn is_prime_power(n: u128) -> bool {
    matches!(factorize(n).as_slice(), [_])
}
