//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! fails if any criterion fails. Run with `--nocapture` to see the lines.

use std::collections::{BTreeSet, HashMap};
use std::process::Command;
use std::time::{Duration, Instant};

use embedcheck_core::catalog::{build_whole, default_corpus};
use embedcheck_core::{Caps, FormationSelector, GroupExpr, Perm, Subgroup};
use embedcheck_verify::examples::{example_check, ExampleId};
use embedcheck_verify::implications::implication_lattice;
use embedcheck_verify::lemmas::{lemma_check, LemmaId};
use embedcheck_verify::suite::{load, Loaded};
use embedcheck_verify::theorems::{corpus_scan, Mode, TheoremId};
use embedcheck_verify::Tri;

type Set = BTreeSet<u32>;

struct Outcome {
    name: &'static str,
    pass: bool,
    detail: String,
    elapsed: Duration,
}

fn criterion(name: &'static str, limit: Duration, f: impl FnOnce() -> (bool, String)) -> Outcome {
    let start = Instant::now();
    let (pass, detail) = f();
    let elapsed = start.elapsed();
    Outcome { name, pass: pass && elapsed < limit, detail, elapsed }
}

/// Multiplication table computed from raw image vectors, indexed like the
/// library's element list.
struct Table {
    mul: Vec<Vec<u32>>,
    identity: u32,
}

impl Table {
    fn of(g: &Subgroup) -> Table {
        let perms = g.ambient().elements().unwrap();
        let index: HashMap<&[u32], u32> = perms.iter().enumerate().map(|(i, p)| (p.images(), i as u32)).collect();
        let mul = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        let c: Vec<u32> = a.images().iter().map(|&i| b.images()[i as usize]).collect();
                        index[c.as_slice()]
                    })
                    .collect()
            })
            .collect();
        let identity = perms.iter().position(|p| p.is_identity()).unwrap() as u32;
        Table { mul, identity }
    }

    fn m(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize][b as usize]
    }

    fn inv(&self, a: u32) -> u32 {
        (0..self.mul.len() as u32).find(|&b| self.m(a, b) == self.identity).unwrap()
    }

    fn close(&self, seed: &Set) -> Set {
        let mut s = seed.clone();
        s.insert(self.identity);
        let mut frontier: Vec<u32> = s.iter().copied().collect();
        while let Some(x) = frontier.pop() {
            for &g in seed {
                let y = self.m(x, g);
                if s.insert(y) {
                    frontier.push(y);
                }
            }
        }
        s
    }

    fn product(&self, a: &Set, b: &Set) -> Set {
        a.iter().flat_map(|&x| b.iter().map(move |&y| self.m(x, y))).collect()
    }

    /// Every subgroup of `whole`: cyclic subgroups closed under joins.
    fn all_subgroups(&self, whole: &Set) -> BTreeSet<Set> {
        let cyclic: BTreeSet<Set> = whole.iter().map(|&x| self.close(&Set::from([x]))).collect();
        let mut subs = cyclic.clone();
        let mut frontier: Vec<Set> = cyclic.iter().cloned().collect();
        while let Some(s) = frontier.pop() {
            for c in &cyclic {
                if c.is_subset(&s) {
                    continue;
                }
                let j = self.close(&s.union(c).copied().collect());
                if subs.insert(j.clone()) {
                    frontier.push(j);
                }
            }
        }
        subs
    }
}

fn set_of(h: &Subgroup) -> Set {
    h.elements().collect()
}

fn p_part(mut n: usize, p: usize) -> usize {
    let mut r = 1;
    while n.is_multiple_of(p) {
        n /= p;
        r *= p;
    }
    r
}

fn primes(n: usize) -> Vec<usize> {
    (2..=n).filter(|&p| n.is_multiple_of(p) && (2..p).all(|d| p % d != 0)).collect()
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn closed_form(e: &GroupExpr) -> u128 {
    match e {
        GroupExpr::Sym(n) => factorial(*n),
        GroupExpr::Alt(n) => factorial(*n) / 2,
        GroupExpr::Cyc(n) | GroupExpr::Dihedral(n) => *n as u128,
        GroupExpr::Quaternion8 => 8,
        GroupExpr::SL23 => 24,
        GroupExpr::DirectProduct(a, b) => closed_form(a) * closed_form(b),
        GroupExpr::InnerHolomorph(a) => {
            let g = build_whole(a, Caps::default()).unwrap();
            let t = Table::of(&g);
            let all = set_of(&g);
            let center = all.iter().filter(|&&x| all.iter().all(|&y| t.m(x, y) == t.m(y, x))).count();
            let n = all.len() as u128;
            n * (n / center as u128)
        }
        GroupExpr::FromFile(_) => unreachable!("corpus has no file entries"),
    }
}

/// Deterministic xorshift for random permutations.
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    fn perm(&mut self, degree: usize) -> Perm {
        let mut v: Vec<u32> = (0..degree as u32).collect();
        for i in (1..degree).rev() {
            v.swap(i, (self.next() % (i as u64 + 1)) as usize);
        }
        Perm::from_images(v).unwrap()
    }
}

fn built(groups: &[Loaded]) -> impl Iterator<Item = (&str, &Subgroup)> {
    groups.iter().filter_map(|l| l.group.as_ref().ok().map(|g| (l.id.as_str(), g)))
}

fn examples() -> (bool, String) {
    let mut agree = 0;
    let mut detail = Vec::new();
    for id in ExampleId::ALL {
        match example_check(id, Caps::default()) {
            Ok(r) if r.agrees => agree += 1,
            Ok(_) => detail.push(format!("{id} disagrees")),
            Err(e) => detail.push(format!("{id}: {e}")),
        }
    }
    detail.insert(0, format!("{agree}/4 examples agree"));
    (agree == 4, detail.join("; "))
}

fn lattice(groups: &[Loaded]) -> (bool, String) {
    let r = implication_lattice(groups);
    (r.violations() == 0 && r.pairs >= 1500, format!("{} pairs, {} violations", r.pairs, r.violations()))
}

fn lemmas(groups: &[Loaded]) -> (bool, String) {
    let mut pass = true;
    let (mut instances, mut skipped, mut failed) = (0, 0, 0);
    let mut notes = Vec::new();
    for id in LemmaId::ALL {
        let r = lemma_check(id, groups, Caps::default());
        instances += r.instances;
        skipped += r.skipped;
        failed += r.failed;
        if !r.ok() || r.skipped_fraction() >= 0.05 {
            pass = false;
            notes.push(format!("{id}: {} failed, {} skipped", r.failed, r.skipped));
        }
    }
    let square = build_whole(
        &GroupExpr::DirectProduct(Box::new(GroupExpr::Alt(5)), Box::new(GroupExpr::Alt(5))),
        Caps::default(),
    )
    .unwrap();
    let subnormal = square.subnormal_subgroups().unwrap().len();
    pass &= subnormal == 4;
    notes.insert(
        0,
        format!(
            "{instances} instances, {failed} failed, {skipped} skipped ({:.2}%), Alt(5)^2 has {subnormal} subnormal subgroups",
            100.0 * skipped as f64 / instances.max(1) as f64
        ),
    );
    (pass, notes.join("; "))
}

fn theorems(groups: &[Loaded]) -> (bool, String) {
    let r = corpus_scan(groups, &TheoremId::default_grid(), Mode::Full);
    let find = |id: &str| {
        r.verdicts
            .iter()
            .find(|v| v.group_id == id && v.theorem == "T3_1(p=2,n=1)")
            .map(|v| (v.hypothesis, v.conclusion, v.consistent))
    };
    let sym3 = find("Sym(3)") == Some((Tri::True, Tri::True, Tri::True));
    let sym4 = find("Sym(4)") == Some((Tri::False, Tri::False, Tri::True));
    (
        r.counts.inconsistent == 0 && sym3 && sym4,
        format!(
            "{} verdicts, {} inconsistent, {} indeterminate, Sym(3) {}, Sym(4) {}",
            r.verdicts.len(),
            r.counts.inconsistent,
            r.counts.indeterminate,
            if sym3 { "as derived" } else { "UNEXPECTED" },
            if sym4 { "as derived" } else { "UNEXPECTED" }
        ),
    )
}

fn oracles(groups: &[Loaded]) -> (bool, String) {
    let mut notes = Vec::new();
    let (mut a_groups, mut a_bad, mut c_bad) = (0, 0, 0);
    for (id, g) in built(groups).filter(|(_, g)| g.order() <= 48) {
        let t = Table::of(g);
        let whole = set_of(g);
        let naive = t.all_subgroups(&whole);
        let subs = g.all_subgroups().unwrap();
        if naive.len() != subs.len() || subs.iter().any(|h| !naive.contains(&set_of(h))) {
            c_bad += 1;
            notes.push(format!("{id}: {} subgroups, naive {}", subs.len(), naive.len()));
        }
        let n = whole.len();
        let sylows: Vec<&Set> =
            primes(n).into_iter().flat_map(|p| naive.iter().filter(move |s| s.len() == p_part(n, p))).collect();
        let brute: BTreeSet<&Set> = naive
            .iter()
            .filter(|h| sylows.iter().all(|s| t.product(h, s) == t.product(s, h)))
            .collect();
        let ours: BTreeSet<Set> = g.s_quasinormal_subgroups().unwrap().iter().map(set_of).collect();
        if ours.len() != brute.len() || brute.iter().any(|h| !ours.contains(*h)) {
            a_bad += 1;
            notes.push(format!("{id}: S-quasinormal sets differ"));
        }
        a_groups += 1;
    }

    let mut b_groups = 0;
    let mut b_bad = 0;
    let wide = load(&default_corpus(200), Caps::default());
    for (id, g) in built(&wide).filter(|(_, g)| g.order() <= 200) {
        let t = Table::of(g);
        let whole = set_of(g);
        let gens: Vec<u32> = g.generators().to_vec();
        let mut z = Set::from([t.identity]);
        loop {
            let next: Set = whole
                .iter()
                .copied()
                .filter(|&x| {
                    gens.iter().all(|&y| z.contains(&t.m(t.m(t.inv(x), t.inv(y)), t.m(x, y))))
                })
                .collect();
            if next == z {
                break;
            }
            z = next;
        }
        let ours = set_of(&g.hypercenter(FormationSelector::N).unwrap());
        if ours != z {
            b_bad += 1;
            notes.push(format!("{id}: hypercenter {} vs {}", ours.len(), z.len()));
        }
        b_groups += 1;
    }

    let full = corpus_scan(groups, &TheoremId::default_grid(), Mode::Full);
    let fast = corpus_scan(groups, &TheoremId::default_grid(), Mode::Fast);
    let d_bad = full.verdicts.iter().zip(&fast.verdicts).filter(|(a, b)| a != b).count()
        + full.verdicts.len().abs_diff(fast.verdicts.len());

    notes.insert(
        0,
        format!(
            "(a) {a_bad} mismatches over {a_groups} groups; (b) {b_bad} over {b_groups}; (c) {c_bad} over {a_groups}; (d) {d_bad} over {} verdicts",
            full.verdicts.len()
        ),
    );
    (a_bad + b_bad + c_bad + d_bad == 0, notes.join("; "))
}

fn engine(groups: &[Loaded]) -> (bool, String) {
    let corpus = default_corpus(60);
    let mut order_bad = Vec::new();
    for (entry, l) in corpus.entries.iter().zip(groups) {
        match &l.group {
            Ok(g) if g.order() as u128 == closed_form(&entry.expr) => {}
            _ => order_bad.push(entry.id.clone()),
        }
    }

    let mut sylow_checks = 0;
    let mut sylow_bad = Vec::new();
    for (id, g) in built(groups) {
        for p in primes(g.order()) {
            let all = g.sylow_all(p as u64);
            let k = all.len();
            let right = all.iter().all(|s| s.order() == p_part(g.order(), p));
            if k % p != 1 || g.order() % k != 0 || !right {
                sylow_bad.push(format!("{id} p={p} count {k}"));
            }
            sylow_checks += 1;
        }
    }

    let extra = [
        GroupExpr::Sym(5),
        GroupExpr::Alt(6),
        GroupExpr::Dihedral(500),
        GroupExpr::DirectProduct(Box::new(GroupExpr::Sym(4)), Box::new(GroupExpr::Dihedral(20))),
        GroupExpr::DirectProduct(Box::new(GroupExpr::SL23), Box::new(GroupExpr::Cyc(20))),
    ];
    let mut extra_bad = Vec::new();
    let mut rng = Rng(0x9e37_79b9_7f4a_7c15);
    let mut membership = 0;
    let mut member_bad = 0;
    let candidates = built(groups).map(|(_, g)| g.clone()).chain(extra.iter().filter_map(|e| {
        let g = build_whole(e, Caps::default()).ok();
        if g.as_ref().map(|g| g.order() as u128) != Some(closed_form(e)) {
            extra_bad.push(e.to_string());
        }
        g
    }));
    for g in candidates.filter(|g| g.order() <= 500).collect::<Vec<_>>() {
        let amb = g.ambient();
        let elements = amb.elements().unwrap();
        let degree = amb.degree();
        let mut probes: Vec<Perm> = (0..64).map(|_| rng.perm(degree)).collect();
        probes.extend((0..16).map(|_| elements[(rng.next() % elements.len() as u64) as usize].clone()));
        for p in probes {
            let linear = elements.contains(&p);
            if amb.member(&p).unwrap() != linear {
                member_bad += 1;
            }
            membership += 1;
        }
    }
    order_bad.extend(extra_bad);
    (
        order_bad.is_empty() && sylow_bad.is_empty() && member_bad == 0,
        format!(
            "{} order mismatches over {} groups; {} Sylow failures over {sylow_checks} primes; {member_bad} membership mismatches over {membership} probes{}",
            order_bad.len(),
            corpus.len() + extra.len(),
            sylow_bad.len(),
            if order_bad.is_empty() && sylow_bad.is_empty() {
                String::new()
            } else {
                format!(" ({:?} {:?})", order_bad, sylow_bad)
            }
        ),
    )
}

fn determinism() -> (bool, String) {
    let bin = env!("CARGO_BIN_EXE_embedcheck");
    let run = || Command::new(bin).args(["scan", "--max-order", "60", "--json"]).output().unwrap();
    let (a, b) = (run(), run());
    let hash = |o: &std::process::Output| {
        serde_json::from_slice::<serde_json::Value>(&o.stdout).ok().and_then(|v| v["hash"].as_str().map(String::from))
    };
    let same = a.stdout == b.stdout && !a.stdout.is_empty();
    (
        same && a.status.code() == Some(0),
        format!("{} bytes, identical: {same}, hash {}", a.stdout.len(), hash(&a).unwrap_or_default()),
    )
}

#[test]
fn acceptance() {
    let minute = Duration::from_secs(60);
    let start = Instant::now();
    let groups = load(&default_corpus(60), Caps::default());
    println!("loaded {} corpus groups in {:.1?}", groups.len(), start.elapsed());

    let outcomes = [
        criterion("1 example fixtures", minute, examples),
        criterion("2 implication lattice", 10 * minute, || lattice(&groups)),
        criterion("3 lemma suites", 30 * minute, || lemmas(&groups)),
        criterion("4 theorem consistency", 30 * minute, || theorems(&groups)),
        criterion("5 oracle equivalences", 30 * minute, || oracles(&groups)),
        criterion("6 engine correctness", 30 * minute, || engine(&groups)),
        criterion("7 determinism", 60 * minute, determinism),
    ];
    for o in &outcomes {
        println!(
            "{} criterion {} [{:.1?}]: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.name,
            o.elapsed,
            o.detail
        );
    }
    let failed: Vec<&str> = outcomes.iter().filter(|o| !o.pass).map(|o| o.name).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
