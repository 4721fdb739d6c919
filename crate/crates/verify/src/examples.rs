//! The four worked examples as executable fixtures.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use embedcheck_core::embeddings::Witness;
use embedcheck_core::{parse_cycles, Caps, EmbeddingKind, GroupExpr, Result, Subgroup};
use serde::Serialize;

use crate::tri::Tri;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExampleId {
    E1_3,
    E1_4,
    E1_5,
    E1_6,
}

impl ExampleId {
    pub const ALL: [ExampleId; 4] = [ExampleId::E1_3, ExampleId::E1_4, ExampleId::E1_5, ExampleId::E1_6];
}

impl fmt::Display for ExampleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for ExampleId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        ExampleId::ALL.into_iter().find(|e| e.to_string() == s).ok_or_else(|| format!("unknown example `{s}`"))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Claim {
    pub claim: String,
    pub expected: bool,
    pub computed: Tri,
    pub agrees: bool,
}

/// A stated fact that is reported but does not decide the example's verdict.
#[derive(Debug, Clone, Serialize)]
pub struct Observation {
    pub statement: String,
    pub stated: String,
    pub computed: String,
    pub agrees: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExampleReport {
    pub id: String,
    pub group: String,
    pub group_order: usize,
    pub subgroup: String,
    pub subgroup_order: usize,
    pub claims: Vec<Claim>,
    pub observations: Vec<Observation>,
    pub properties: BTreeMap<String, Tri>,
    pub witnesses: BTreeMap<String, String>,
    pub agrees: bool,
}

/// Human-readable rendering of a property witness.
pub fn describe_witness(w: &Witness) -> String {
    match w {
        Witness::NormalK(k) => format!("K = {}", k.describe()),
        Witness::Supplement(b) => format!("B = {}", b.describe()),
        Witness::NonPermutingSylow { prime, sylow } => format!("fails against Sylow {prime}-subgroup {}", sylow.describe()),
        Witness::SylowHosts(hosts) => {
            let parts: Vec<String> = hosts.iter().map(|(p, u)| format!("p={p}: U = {}", u.describe())).collect();
            parts.join("; ")
        }
        Witness::MissingHost(p) => format!("no S-quasinormal host for the Sylow {p}-subgroup"),
        Witness::Exhausted(n) => format!("exhaustive search over {n} candidates"),
        Witness::Direct => "holds directly".into(),
    }
}

fn perms(g: &Subgroup, gens: &[&str]) -> Result<Subgroup> {
    let n = g.ambient().degree();
    let ps = gens.iter().map(|s| parse_cycles(s, n)).collect::<Result<Vec<_>>>()?;
    Subgroup::from_perms(g.ambient(), &ps)
}

/// Builds `(G, H)` for an example.
pub fn example_pair(id: ExampleId, caps: Caps) -> Result<(GroupExpr, Subgroup, Subgroup)> {
    Ok(match id {
        ExampleId::E1_3 => {
            let e = GroupExpr::Sym(4);
            let g = Subgroup::whole(&e.build_with_caps(caps)?)?;
            let h = perms(&g, &["(1 4)"])?;
            (e, g, h)
        }
        ExampleId::E1_4 => {
            let e = GroupExpr::Alt(5);
            let g = Subgroup::whole(&e.build_with_caps(caps)?)?;
            let h = perms(&g, &["(1 2 3)", "(1 2)(3 4)"])?;
            (e, g, h)
        }
        ExampleId::E1_5 => {
            let e = GroupExpr::Alt(5);
            let g = Subgroup::whole(&e.build_with_caps(caps)?)?;
            let h = perms(&g, &["(1 2 3)"])?;
            (e, g, h)
        }
        ExampleId::E1_6 => {
            let a_expr = GroupExpr::Alt(5);
            let e = GroupExpr::InnerHolomorph(Box::new(a_expr.clone()));
            let amb = e.build_with_caps(caps)?;
            let g = Subgroup::whole(&amb)?;
            // the first generators of the holomorph are the right translations
            let a = a_expr.build_with_caps(caps)?;
            let ed = a.elems()?;
            let mut gens: Vec<_> = amb.generators()[..a.generators().len()].to_vec();
            let x = ed.index_of(&parse_cycles("(1 2)(3 4)", 5)?).expect("even permutation");
            gens.push(embedcheck_core::Perm::from_images((0..ed.len() as u32).map(|i| ed.conj(i, x)).collect())?);
            let h = Subgroup::from_perms(&amb, &gens)?;
            (e, g, h)
        }
    })
}

fn claim(g: &Subgroup, h: &Subgroup, kind: EmbeddingKind, expected: bool) -> Claim {
    let computed = Tri::from(g.holds(h, kind));
    Claim { claim: kind.tag().into(), expected, computed, agrees: computed.known() == Some(expected) }
}

fn observation(statement: &str, stated: impl ToString, computed: impl ToString) -> Observation {
    let (stated, computed) = (stated.to_string(), computed.to_string());
    Observation { statement: statement.into(), agrees: stated == computed, stated, computed }
}

pub fn example_check(id: ExampleId, caps: Caps) -> Result<ExampleReport> {
    use EmbeddingKind::*;
    let (expr, g, h) = example_pair(id, caps)?;
    let mut claims = Vec::new();
    let mut observations = Vec::new();
    match id {
        ExampleId::E1_3 => {
            claims.push(claim(&g, &h, TauQuasinormal, false));
            claims.push(claim(&g, &h, WeaklyTauEmbedded, true));
            let q = perms(&g, &["(1 2 3)"])?;
            observations.push(observation("order of the normal closure of <(1 2 3)>", 12, g.normal_closure(&q).order()));
            observations.push(observation("H permutes with <(1 2 3)>", false, h.permutes_with(&q)));
            let k = g.embedding_witness(&h, WeaklyTauEmbedded)?.map(|k| k.order()).unwrap_or(0);
            observations.push(observation("order of the weakly tau-embedding witness K", 12, k));
        }
        ExampleId::E1_4 => {
            claims.push(claim(&g, &h, SQuasinormal, false));
            claims.push(claim(&g, &h, SEmbedded, false));
            claims.push(claim(&g, &h, TauQuasinormal, true));
            claims.push(claim(&g, &h, WeaklyTauEmbedded, true));
            observations.push(observation("number of normal subgroups", 2, g.normal_subgroups()?.len()));
            let c5 = perms(&g, &["(1 2 3 4 5)"])?;
            observations.push(observation("|H<(1 2 3 4 5)>| equals |G|", true, h.product_size(&c5) == g.order()));
        }
        ExampleId::E1_5 => {
            claims.push(claim(&g, &h, WeaklySEmbedded, true));
            claims.push(claim(&g, &h, WeaklyTauEmbedded, false));
            claims.push(claim(&g, &h, TauQuasinormal, false));
            let k = g.embedding_witness(&h, WeaklySEmbedded)?.map(|k| k.order()).unwrap_or(0);
            observations.push(observation("order of the weakly S-embedding witness K", g.order(), k));
            let q = perms(&g, &["(1 2 3 4 5)"])?;
            observations.push(observation("normal closure of <(1 2 3 4 5)> is G", true, g.normal_closure(&q) == g));
            observations.push(observation("H<(1 2 3 4 5)> is a subgroup", false, h.permutes_with(&q)));
        }
        ExampleId::E1_6 => {
            claims.push(claim(&g, &h, TauQuasinormal, true));
            claims.push(claim(&g, &h, WeaklyTauEmbedded, true));
            claims.push(claim(&g, &h, SQuasinormal, false));
            claims.push(claim(&g, &h, WeaklySEmbedded, false));
            observations.push(observation("order of G", 3600, g.order()));
            observations.push(observation("order of H", 120, h.order()));
            // the direct-square structure gives four subnormal subgroups, not three
            observations.push(observation("number of subnormal subgroups", 3, g.subnormal_subgroups()?.len()));
        }
    }
    let vector = g.property_vector(&h);
    let properties = vector.flags.iter().map(|(k, v)| (k.tag().to_string(), Tri::from(v))).collect();
    let witnesses = vector.witnesses.iter().map(|(k, w)| (k.tag().to_string(), describe_witness(w))).collect();
    let agrees = claims.iter().all(|c| c.agrees);
    Ok(ExampleReport {
        id: id.to_string(),
        group: expr.to_string(),
        group_order: g.order(),
        subgroup: h.describe(),
        subgroup_order: h.order(),
        claims,
        observations,
        properties,
        witnesses,
        agrees,
    })
}
