//! The implication lattice between embedding properties, checked over every
//! subgroup of every corpus group.

use std::collections::BTreeMap;

use embedcheck_core::embeddings::{EmbeddingKind, GeneratedPartKind};
use embedcheck_core::{Result, Subgroup};
use serde::Serialize;

use crate::suite::{per_group, subgroups_or_subnormal, Loaded, Tally};

use EmbeddingKind::*;

/// Either side of an implication edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Node {
    Normal,
    Kind(EmbeddingKind),
    /// Weakly S-embedded or weakly τ-embedded.
    Triangle,
}

impl Node {
    pub fn label(self) -> String {
        match self {
            Node::Normal => "NORMAL".into(),
            Node::Kind(k) => k.tag().into(),
            Node::Triangle => "TRIANGLE".into(),
        }
    }

    fn eval(self, g: &Subgroup, h: &Subgroup) -> Result<bool> {
        match self {
            Node::Normal => Ok(g.has_normal(h)),
            Node::Kind(k) => g.holds(h, k),
            Node::Triangle => g.satisfies_triangle(h),
        }
    }
}

pub const EDGES: [(Node, Node); 11] = [
    (Node::Normal, Node::Kind(SQuasinormal)),
    (Node::Kind(SQuasinormal), Node::Kind(TauQuasinormal)),
    (Node::Kind(SQuasinormal), Node::Kind(SqEmbedded)),
    (Node::Kind(SsQuasinormal), Node::Kind(SSemipermutable)),
    (Node::Kind(SSemipermutable), Node::Kind(TauQuasinormal)),
    (Node::Kind(TauQuasinormal), Node::Kind(WeaklyTauEmbedded)),
    (Node::Kind(SEmbedded), Node::Kind(WeaklyTauEmbedded)),
    (Node::Kind(SqEmbedded), Node::Kind(WeaklySEmbedded)),
    (Node::Kind(CNormal), Node::Triangle),
    (Node::Kind(CStarNormal), Node::Triangle),
    (Node::Kind(NEmbedded), Node::Triangle),
];

pub fn edge_label(e: &(Node, Node)) -> String {
    format!("{} => {}", e.0.label(), e.1.label())
}

#[derive(Debug, Clone, Serialize)]
pub struct LatticeReport {
    pub groups: usize,
    /// Number of `(G, H)` pairs examined.
    pub pairs: u64,
    pub edges: BTreeMap<String, Tally>,
    /// Observations that are measured but not asserted.
    pub observations: Tally,
}

impl LatticeReport {
    pub fn violations(&self) -> u64 {
        self.edges.values().map(|t| t.failed).sum()
    }
}

/// Checks every edge on every pair; an edge instance passes when the
/// antecedent is false or the consequent is true.
pub fn implication_lattice(groups: &[Loaded]) -> LatticeReport {
    let parts = per_group(groups, |l| {
        let mut edges = vec![Tally::default(); EDGES.len()];
        let mut obs = Tally::default();
        let mut pairs = 0;
        let subs = match &l.group {
            Ok(g) => subgroups_or_subnormal(g, &mut obs).map(|s| (g, s)),
            Err(_) => None,
        };
        let Some((g, subs)) = subs else {
            edges.iter_mut().for_each(Tally::skip);
            return (edges, obs, pairs);
        };
        for h in subs.iter() {
            pairs += 1;
            for (edge, tally) in EDGES.iter().zip(edges.iter_mut()) {
                let outcome = match edge.0.eval(g, h) {
                    Ok(false) => Ok(true),
                    Ok(true) => edge.1.eval(g, h),
                    Err(e) => match edge.1.eval(g, h) {
                        Ok(true) => Ok(true),
                        _ => Err(e),
                    },
                };
                tally.record(outcome, || format!("{}: H = {}", l.id, h.describe()));
            }
            observe(g, h, &mut obs);
        }
        (edges, obs, pairs)
    });
    let mut edges: Vec<Tally> = vec![Tally::default(); EDGES.len()];
    let mut observations = Tally::default();
    let mut pairs = 0;
    for (e, o, n) in parts {
        for (acc, t) in edges.iter_mut().zip(e) {
            acc.merge(t);
        }
        observations.merge(o);
        pairs += n;
    }
    LatticeReport {
        groups: groups.len(),
        pairs,
        edges: EDGES.iter().zip(edges).enumerate().map(|(i, (e, t))| (format!("{i:02} {}", edge_label(e)), t)).collect(),
        observations,
    }
}

/// Measures whether the generated parts carry their defining property, and
/// where the two forms of the τ-quasinormality condition could differ.
fn observe(g: &Subgroup, h: &Subgroup, t: &mut Tally) {
    if let Ok(se) = g.generated_part(h, GeneratedPartKind::SeG) {
        let key = match g.holds(&se, SqEmbedded) {
            Ok(true) => "seG part is S-quasinormally embedded",
            Ok(false) => "seG part is not S-quasinormally embedded",
            Err(_) => "seG part indeterminate",
        };
        t.note(key, 1);
    }
    if let Ok(tau) = g.generated_part(h, GeneratedPartKind::TauG) {
        let p_group = h.primes().len() <= 1;
        let key = match (g.holds(&tau, TauQuasinormal), p_group) {
            (Ok(true), true) => "tauG part of p-subgroup is tau-quasinormal",
            (Ok(false), true) => "tauG part of p-subgroup is not tau-quasinormal",
            (Ok(true), false) => "tauG part of non-p-subgroup is tau-quasinormal",
            (Ok(false), false) => "tauG part of non-p-subgroup is not tau-quasinormal",
            (Err(_), _) => "tauG part indeterminate",
        };
        t.note(key, 1);
    }
    match h.primes().as_slice() {
        [] => {}
        [p] => {
            if let Ok(full) = g.is_tau_quasinormal(h) {
                if full != g.is_tau_quasinormal_prime_form(h, *p) {
                    t.note("tau condition forms differ on a p-subgroup", 1);
                }
            }
        }
        _ => t.note("non-p-subgroups (prime form undefined)", 1),
    }
}
