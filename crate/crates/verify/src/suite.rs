//! Shared bookkeeping for corpus-wide property suites.

use std::collections::BTreeMap;

use embedcheck_core::catalog::{build_whole, Corpus};
use embedcheck_core::{Caps, Result, Subgroup};
use rayon::prelude::*;
use serde::Serialize;

/// Failures listed in full in a report; the rest are only counted.
const MAX_LISTED: usize = 20;

/// Pass/fail/skip counts for one property over many instances.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub instances: u64,
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
    pub failures: Vec<String>,
    /// Informational counters that do not affect pass/fail.
    pub notes: BTreeMap<String, u64>,
}

impl Tally {
    /// Records one instance; an error (cap overflow) counts as skipped.
    pub fn record(&mut self, outcome: Result<bool>, detail: impl FnOnce() -> String) {
        self.instances += 1;
        match outcome {
            Ok(true) => self.passed += 1,
            Ok(false) => {
                self.failed += 1;
                if self.failures.len() < MAX_LISTED {
                    self.failures.push(detail());
                }
            }
            Err(_) => self.skipped += 1,
        }
    }

    pub fn skip(&mut self) {
        self.instances += 1;
        self.skipped += 1;
    }

    pub fn note(&mut self, key: &str, by: u64) {
        *self.notes.entry(key.to_string()).or_default() += by;
    }

    pub fn merge(&mut self, other: Tally) {
        self.instances += other.instances;
        self.passed += other.passed;
        self.failed += other.failed;
        self.skipped += other.skipped;
        for f in other.failures {
            if self.failures.len() < MAX_LISTED {
                self.failures.push(f);
            }
        }
        for (k, v) in other.notes {
            *self.notes.entry(k).or_default() += v;
        }
    }

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

/// A corpus group ready for checking, or the reason it could not be built.
pub struct Loaded {
    pub id: String,
    pub group: Result<Subgroup>,
}

pub fn load(corpus: &Corpus, caps: Caps) -> Vec<Loaded> {
    corpus
        .entries
        .par_iter()
        .map(|e| Loaded { id: e.id.clone(), group: build_whole(&e.expr, caps) })
        .collect()
}

/// Maps every loaded group in parallel, keeping corpus order.
pub fn per_group<R: Send>(groups: &[Loaded], f: impl Fn(&Loaded) -> R + Sync + Send) -> Vec<R> {
    groups.par_iter().map(f).collect()
}

/// Runs `check` on every loaded group in parallel and merges in corpus order.
pub fn over_groups(groups: &[Loaded], check: impl Fn(&str, &Subgroup, &mut Tally) + Sync + Send) -> Tally {
    let mut total = Tally::default();
    for part in per_group(groups, |l| {
        let mut t = Tally::default();
        match &l.group {
            Ok(g) => check(&l.id, g, &mut t),
            Err(_) => t.skip(),
        }
        t
    }) {
        total.merge(part);
    }
    total
}

/// Subgroups of `g` for exhaustive checks; falls back to the subnormal
/// subgroups when the full lattice exceeds the cap.
pub fn subgroups_or_subnormal(g: &Subgroup, t: &mut Tally) -> Option<std::sync::Arc<Vec<Subgroup>>> {
    match g.all_subgroups() {
        Ok(s) => Some(s),
        Err(_) => {
            t.note("groups with subnormal-only coverage", 1);
            g.subnormal_subgroups().ok()
        }
    }
}
