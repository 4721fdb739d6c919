//! Built-in group constructions, the group text format, and corpora.

use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Caps, PermGroup};
use crate::perm::{parse_cycles, Perm};
use crate::subgroup::Subgroup;

/// A group constructor expression such as `DirectProduct(Cyc(2), Sym(3))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupExpr {
    Sym(usize),
    Alt(usize),
    Cyc(usize),
    /// Dihedral group of the given order `2n`.
    Dihedral(usize),
    Quaternion8,
    SL23,
    DirectProduct(Box<GroupExpr>, Box<GroupExpr>),
    /// `A` acting on its own elements by right translations and conjugation.
    InnerHolomorph(Box<GroupExpr>),
    FromFile(PathBuf),
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Sym(n) => write!(f, "Sym({n})"),
            GroupExpr::Alt(n) => write!(f, "Alt({n})"),
            GroupExpr::Cyc(n) => write!(f, "Cyc({n})"),
            GroupExpr::Dihedral(n) => write!(f, "Dihedral({n})"),
            GroupExpr::Quaternion8 => write!(f, "Quaternion8"),
            GroupExpr::SL23 => write!(f, "SL23"),
            GroupExpr::DirectProduct(a, b) => write!(f, "DirectProduct({a}, {b})"),
            GroupExpr::InnerHolomorph(a) => write!(f, "InnerHolomorph({a})"),
            GroupExpr::FromFile(p) => write!(f, "FromFile({})", p.display()),
        }
    }
}

struct ExprParser<'a> {
    src: &'a str,
    pos: usize,
}

impl ExprParser<'_> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse { line: 1, column: self.pos + 1, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..].chars().next().unwrap().len_utf8();
        }
    }

    fn eat(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.err(format!("expected `{c}`")))
        }
    }

    fn ident(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..].find(|c: char| !c.is_ascii_alphanumeric()).unwrap_or(self.src.len() - start);
        if len == 0 {
            return Err(self.err("expected a group constructor"));
        }
        self.pos += len;
        Ok(&self.src[start..start + len])
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..].find(|c: char| !c.is_ascii_digit()).unwrap_or(self.src.len() - start);
        if len == 0 {
            return Err(self.err("expected a number"));
        }
        self.pos += len;
        self.src[start..start + len].parse().map_err(|_| self.err("number too large"))
    }

    fn expr(&mut self) -> Result<GroupExpr> {
        let start = self.pos;
        let name = self.ident()?.to_string();
        let one = |p: &mut Self| -> Result<usize> {
            p.eat('(')?;
            let n = p.number()?;
            p.eat(')')?;
            Ok(n)
        };
        Ok(match name.as_str() {
            "Sym" | "S" => GroupExpr::Sym(one(self)?),
            "Alt" | "A" => GroupExpr::Alt(one(self)?),
            "Cyc" | "C" => GroupExpr::Cyc(one(self)?),
            "Dihedral" | "D" => {
                let n = one(self)?;
                if n == 0 || n % 2 != 0 {
                    return Err(Error::Parse { line: 1, column: start + 1, message: "dihedral order must be even".into() });
                }
                GroupExpr::Dihedral(n)
            }
            "Quaternion8" | "Q8" => GroupExpr::Quaternion8,
            "SL23" => GroupExpr::SL23,
            "DirectProduct" => {
                self.eat('(')?;
                let a = self.expr()?;
                self.eat(',')?;
                let b = self.expr()?;
                self.eat(')')?;
                GroupExpr::DirectProduct(Box::new(a), Box::new(b))
            }
            "InnerHolomorph" => {
                self.eat('(')?;
                let a = self.expr()?;
                self.eat(')')?;
                GroupExpr::InnerHolomorph(Box::new(a))
            }
            "FromFile" => {
                self.eat('(')?;
                self.skip_ws();
                let rest = &self.src[self.pos..];
                let end = rest.rfind(')').ok_or_else(|| self.err("expected `)`"))?;
                let path = rest[..end].trim().to_string();
                self.pos += end;
                self.eat(')')?;
                GroupExpr::FromFile(PathBuf::from(path))
            }
            other => {
                return Err(Error::Parse { line: 1, column: start + 1, message: format!("unknown constructor `{other}`") })
            }
        })
    }
}

impl std::str::FromStr for GroupExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupExpr> {
        let mut p = ExprParser { src: s, pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(e)
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

impl GroupExpr {
    /// Order from the closed form, when one exists without building.
    pub fn nominal_order(&self) -> Option<u128> {
        Some(match self {
            GroupExpr::Sym(n) => factorial(*n),
            GroupExpr::Alt(n) => (factorial(*n) / 2).max(1),
            GroupExpr::Cyc(n) => *n as u128,
            GroupExpr::Dihedral(n) => *n as u128,
            GroupExpr::Quaternion8 => 8,
            GroupExpr::SL23 => 24,
            GroupExpr::DirectProduct(a, b) => a.nominal_order()? * b.nominal_order()?,
            GroupExpr::InnerHolomorph(_) | GroupExpr::FromFile(_) => return None,
        })
    }

    pub fn build(&self) -> Result<Arc<PermGroup>> {
        self.build_with_caps(Caps::default())
    }

    pub fn build_with_caps(&self, caps: Caps) -> Result<Arc<PermGroup>> {
        let (degree, gens) = self.realize(caps)?;
        PermGroup::generate_with_caps(degree, gens, caps)
    }

    fn realize(&self, caps: Caps) -> Result<(usize, Vec<Perm>)> {
        let cyc = |n: usize, pts: &[usize]| Perm::from_cycles(n, &[pts]);
        Ok(match self {
            GroupExpr::Sym(n) | GroupExpr::Alt(n) | GroupExpr::Cyc(n) if *n == 0 => {
                return Err(Error::EmptyDegree);
            }
            GroupExpr::Sym(n) => {
                let n = *n;
                let mut gens = Vec::new();
                if n >= 2 {
                    gens.push(cyc(n, &(1..=n).collect::<Vec<_>>())?);
                    gens.push(cyc(n, &[1, 2])?);
                }
                (n, gens)
            }
            GroupExpr::Alt(n) => {
                let n = *n;
                let gens = (3..=n).map(|i| cyc(n, &[1, 2, i])).collect::<Result<Vec<_>>>()?;
                (n, gens)
            }
            GroupExpr::Cyc(n) => {
                let n = *n;
                let gens = if n >= 2 { vec![cyc(n, &(1..=n).collect::<Vec<_>>())?] } else { vec![] };
                (n, gens)
            }
            GroupExpr::Dihedral(order) => {
                let n = order / 2;
                match n {
                    0 => return Err(Error::EmptyDegree),
                    1 => (2, vec![cyc(2, &[1, 2])?]),
                    2 => (4, vec![Perm::from_cycles(4, &[&[1, 2], &[3, 4]])?, Perm::from_cycles(4, &[&[1, 3], &[2, 4]])?]),
                    _ => {
                        let rot = cyc(n, &(1..=n).collect::<Vec<_>>())?;
                        let pairs: Vec<[usize; 2]> = (1..=n / 2).map(|i| [i, n + 1 - i]).collect();
                        let refs: Vec<&[usize]> = pairs.iter().map(|p| &p[..]).collect();
                        (n, vec![rot, Perm::from_cycles(n, &refs)?])
                    }
                }
            }
            GroupExpr::Quaternion8 => (
                8,
                vec![
                    Perm::from_cycles(8, &[&[1, 2, 3, 4], &[5, 6, 7, 8]])?,
                    Perm::from_cycles(8, &[&[1, 5, 3, 7], &[2, 8, 4, 6]])?,
                ],
            ),
            GroupExpr::SL23 => sl23(),
            GroupExpr::DirectProduct(a, b) => {
                let (da, ga) = a.realize(caps)?;
                let (db, gb) = b.realize(caps)?;
                let n = da + db;
                let mut gens = Vec::new();
                for g in ga {
                    let mut im: Vec<u32> = g.images().to_vec();
                    im.extend(da as u32..n as u32);
                    gens.push(Perm::from_images(im)?);
                }
                for g in gb {
                    let mut im: Vec<u32> = (0..da as u32).collect();
                    im.extend(g.images().iter().map(|&x| x + da as u32));
                    gens.push(Perm::from_images(im)?);
                }
                (n, gens)
            }
            GroupExpr::InnerHolomorph(a) => {
                let ga = a.build_with_caps(caps)?;
                let ed = ga.elems()?;
                let n = ed.len();
                let mut gens = Vec::new();
                for g in ga.generators() {
                    let x = ed.index_of(g).expect("generator is an element");
                    gens.push(Perm::from_images((0..n as u32).map(|i| ed.mul(i, x)).collect())?);
                }
                for g in ga.generators() {
                    let x = ed.index_of(g).expect("generator is an element");
                    gens.push(Perm::from_images((0..n as u32).map(|i| ed.conj(i, x)).collect())?);
                }
                (n, gens)
            }
            GroupExpr::FromFile(path) => {
                let g = read_group_file(path)?;
                (g.degree(), g.generators().to_vec())
            }
        })
    }
}

/// `SL(2,3)` acting on the 8 nonzero vectors of `F_3^2`.
fn sl23() -> (usize, Vec<Perm>) {
    let vectors: Vec<(i32, i32)> =
        (0..3).flat_map(|a| (0..3).map(move |b| (a, b))).filter(|&v| v != (0, 0)).collect();
    let act = |m: [[i32; 2]; 2]| {
        let images = vectors
            .iter()
            .map(|&(x, y)| {
                let v = ((m[0][0] * x + m[0][1] * y).rem_euclid(3), (m[1][0] * x + m[1][1] * y).rem_euclid(3));
                vectors.iter().position(|&w| w == v).unwrap() as u32
            })
            .collect();
        Perm::from_images(images).unwrap()
    };
    (8, vec![act([[1, 1], [0, 1]]), act([[0, -1], [1, 0]])])
}

/// Parses the group text format: `degree N` then `gen <cycles>` lines;
/// `#` starts a comment.
pub fn parse_group_text(text: &str) -> Result<Arc<PermGroup>> {
    parse_group_text_with_caps(text, Caps::default())
}

pub fn parse_group_text_with_caps(text: &str, caps: Caps) -> Result<Arc<PermGroup>> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap();
        let indent = content.len() - content.trim_start().len();
        let content = content.trim();
        if content.is_empty() {
            continue;
        }
        let (keyword, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let rest_col = indent + keyword.len() + 1 + (rest.len() - rest.trim_start().len()) + 1;
        let rest = rest.trim();
        match keyword {
            "degree" => {
                if degree.is_some() {
                    return Err(Error::Parse { line, column: indent + 1, message: "duplicate degree line".into() });
                }
                let n: usize = rest.parse().map_err(|_| Error::Parse {
                    line,
                    column: rest_col,
                    message: format!("invalid degree `{rest}`"),
                })?;
                if n == 0 {
                    return Err(Error::Parse { line, column: rest_col, message: "degree must be positive".into() });
                }
                degree = Some(n);
            }
            "gen" => {
                let n = degree.ok_or(Error::Parse {
                    line,
                    column: indent + 1,
                    message: "`gen` before `degree`".into(),
                })?;
                let p = parse_cycles(rest, n).map_err(|e| {
                    let column = match &e {
                        Error::CycleSyntax { column, .. } => rest_col + column - 1,
                        _ => rest_col,
                    };
                    Error::Parse { line, column, message: e.to_string() }
                })?;
                gens.push(p);
            }
            other => {
                return Err(Error::Parse { line, column: indent + 1, message: format!("unknown keyword `{other}`") })
            }
        }
    }
    let degree = degree.ok_or(Error::Parse { line: 1, column: 1, message: "missing `degree` line".into() })?;
    PermGroup::generate_with_caps(degree, gens, caps)
}

pub fn read_group_file(path: &Path) -> Result<Arc<PermGroup>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_group_text(&text)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub id: String,
    pub expr: GroupExpr,
}

/// A named list of groups.
#[derive(Debug, Clone, Default)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
    pub max_order: Option<u128>,
    pub provenance: String,
}

impl Corpus {
    pub fn from_exprs(exprs: impl IntoIterator<Item = GroupExpr>, provenance: &str) -> Corpus {
        let mut c = Corpus { entries: Vec::new(), max_order: None, provenance: provenance.into() };
        for e in exprs {
            c.push(e);
        }
        c
    }

    fn push(&mut self, expr: GroupExpr) {
        let id = expr.to_string();
        if !self.entries.iter().any(|e| e.id == id) {
            self.entries.push(CorpusEntry { id, expr });
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries of nominal order at most `n` (entries without a closed form are kept).
    pub fn filter_order(&self, n: u128) -> Corpus {
        Corpus {
            entries: self.entries.iter().filter(|e| e.expr.nominal_order().is_none_or(|o| o <= n)).cloned().collect(),
            max_order: Some(n.min(self.max_order.unwrap_or(n))),
            provenance: self.provenance.clone(),
        }
    }
}

/// Groups used by the worked examples; always part of the default corpus.
pub fn example_fixtures() -> Vec<GroupExpr> {
    vec![
        GroupExpr::Sym(4),
        GroupExpr::Alt(5),
        GroupExpr::InnerHolomorph(Box::new(GroupExpr::Alt(5))),
    ]
}

/// Symmetric, alternating, cyclic and dihedral groups, `Q8`, `SL(2,3)` and
/// pairwise direct products up to `max_order`, plus the example fixtures.
pub fn default_corpus(max_order: u128) -> Corpus {
    let mut base = Vec::new();
    let mut n = 3;
    while factorial(n) <= max_order {
        base.push(GroupExpr::Sym(n));
        n += 1;
    }
    let mut n = 4;
    while factorial(n) / 2 <= max_order {
        base.push(GroupExpr::Alt(n));
        n += 1;
    }
    for n in 2..=max_order as usize {
        base.push(GroupExpr::Cyc(n));
    }
    for n in (4..=max_order as usize).step_by(2) {
        base.push(GroupExpr::Dihedral(n));
    }
    if max_order >= 8 {
        base.push(GroupExpr::Quaternion8);
    }
    if max_order >= 24 {
        base.push(GroupExpr::SL23);
    }
    let mut corpus = Corpus {
        entries: Vec::new(),
        max_order: Some(max_order),
        provenance: format!("default corpus, order <= {max_order}"),
    };
    if max_order >= 1 {
        corpus.push(GroupExpr::Cyc(1));
    }
    for e in &base {
        corpus.push(e.clone());
    }
    for (i, a) in base.iter().enumerate() {
        for b in &base[i..] {
            if a.nominal_order().unwrap() * b.nominal_order().unwrap() <= max_order {
                corpus.push(GroupExpr::DirectProduct(Box::new(a.clone()), Box::new(b.clone())));
            }
        }
    }
    for f in example_fixtures() {
        corpus.push(f);
    }
    corpus
}

/// Builds a group and wraps it as a whole subgroup.
pub fn build_whole(expr: &GroupExpr, caps: Caps) -> Result<Subgroup> {
    Subgroup::whole(&expr.build_with_caps(caps)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_match_closed_forms() {
        for n in 1..=6 {
            assert_eq!(GroupExpr::Sym(n).build().unwrap().order(), factorial(n));
            assert_eq!(GroupExpr::Alt(n).build().unwrap().order(), (factorial(n) / 2).max(1));
            assert_eq!(GroupExpr::Cyc(n).build().unwrap().order(), n as u128);
            assert_eq!(GroupExpr::Dihedral(2 * n).build().unwrap().order(), 2 * n as u128);
        }
        assert_eq!(GroupExpr::Quaternion8.build().unwrap().order(), 8);
        assert_eq!(GroupExpr::SL23.build().unwrap().order(), 24);
        let ih = GroupExpr::InnerHolomorph(Box::new(GroupExpr::Alt(5))).build().unwrap();
        assert_eq!(ih.order(), 3600);
        assert_eq!(ih.degree(), 60);
        let dp: GroupExpr = "DirectProduct(Cyc(2), Cyc(3))".parse().unwrap();
        let g = build_whole(&dp, Caps::default()).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_abelian());
    }

    #[test]
    fn quaternion_has_one_involution() {
        let g = build_whole(&GroupExpr::Quaternion8, Caps::default()).unwrap();
        assert!(!g.is_abelian());
        assert_eq!(g.elements().filter(|&x| g.element_order(x) == 2).count(), 1);
        let s = build_whole(&GroupExpr::SL23, Caps::default()).unwrap();
        assert_eq!(s.elements().filter(|&x| s.element_order(x) == 2).count(), 1);
        assert_eq!(s.sylow(2).order(), 8);
        assert!(!s.sylow(2).is_abelian());
    }

    #[test]
    fn inner_holomorph_of_abelian_group_is_regular() {
        let g = GroupExpr::InnerHolomorph(Box::new(GroupExpr::Cyc(5))).build().unwrap();
        assert_eq!(g.order(), 5);
        let g = GroupExpr::InnerHolomorph(Box::new(GroupExpr::Sym(3))).build().unwrap();
        assert_eq!(g.order(), 36);
    }

    #[test]
    fn expression_round_trip() {
        for s in ["Sym(4)", "DirectProduct(Alt(5), Alt(5))", "InnerHolomorph(Alt(5))", "Dihedral(8)", "Quaternion8", "SL23"] {
            assert_eq!(s.parse::<GroupExpr>().unwrap().to_string(), s);
        }
        assert!("Dihedral(7)".parse::<GroupExpr>().is_err());
        assert!("Foo(3)".parse::<GroupExpr>().is_err());
        assert!("Sym(3) junk".parse::<GroupExpr>().is_err());
    }

    #[test]
    fn group_text_format() {
        let g = parse_group_text("# S4\ndegree 4\ngen (1 2 3 4)\ngen (1 2)\n").unwrap();
        assert_eq!(g.order(), 24);
        match parse_group_text("degree 4\ngen (1 5)\n") {
            Err(Error::Parse { line, message, .. }) => {
                assert_eq!(line, 2);
                assert!(message.contains('5'), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_group_text("gen (1 2)\n"), Err(Error::Parse { line: 1, .. })));
        match parse_group_text("degree 4\ngen (1 2\n") {
            Err(Error::Parse { line: 2, column, .. }) => assert!(column >= 5),
            other => panic!("unexpected {other:?}"),
        }
        let text = g.to_text();
        let h = parse_group_text(&text).unwrap();
        assert_eq!(h.generators(), g.generators());
        assert_eq!(h.elements().unwrap(), g.elements().unwrap());
    }

    #[test]
    fn default_corpus_contents() {
        let c = default_corpus(60);
        let ids: Vec<&str> = c.entries.iter().map(|e| e.id.as_str()).collect();
        for want in ["Alt(5)", "Sym(4)", "InnerHolomorph(Alt(5))", "Quaternion8", "SL23", "DirectProduct(Cyc(2), Cyc(3))"] {
            assert!(ids.contains(&want), "{want}");
        }
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
        assert!(default_corpus(1).entries.iter().any(|e| e.id == "InnerHolomorph(Alt(5))"));
    }
}
