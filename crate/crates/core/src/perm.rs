//! Permutations on `{0, .., degree - 1}`.
//!
//! Composition is left-to-right: `a.compose(&b)` applies `a` first, then `b`.
//! Text I/O uses 1-indexed cycle notation, e.g. `(1 2 3)(4 5)`.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection on a finite point set.
///
/// Ordering is lexicographic on the image sequence, so the identity is the
/// smallest permutation of any given degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm { images: (0..degree as u32).collect() }
    }

    /// Builds a permutation from 0-indexed images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Perm> {
        let n = images.len();
        if n == 0 {
            return Err(Error::EmptyDegree);
        }
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n {
                return Err(Error::PointOutOfRange { point: i + 1, degree: n });
            }
            if seen[i] {
                return Err(Error::RepeatedPoint { point: i + 1 });
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Perm {
        debug_assert!(Perm::from_images(images.clone()).is_ok());
        Perm { images }
    }

    /// Builds a permutation from 1-indexed cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Perm> {
        if degree == 0 {
            return Err(Error::EmptyDegree);
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for (k, &pt) in cycle.iter().enumerate() {
                if pt == 0 || pt > degree {
                    return Err(Error::PointOutOfRange { point: pt, degree });
                }
                if seen[pt - 1] {
                    return Err(Error::RepeatedPoint { point: pt });
                }
                seen[pt - 1] = true;
                let next = cycle[(k + 1) % cycle.len()];
                if next == 0 || next > degree {
                    return Err(Error::PointOutOfRange { point: next, degree });
                }
                images[pt - 1] = (next - 1) as u32;
            }
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of a 0-indexed point.
    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: other.degree() });
        }
        Ok(self.then(other))
    }

    /// Unchecked composition: `self` then `other`.
    #[inline]
    pub(crate) fn then(&self, other: &Perm) -> Perm {
        Perm { images: self.images.iter().map(|&i| other.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { images: inv }
    }

    /// Smallest point moved, if any.
    pub fn first_moved(&self) -> Option<u32> {
        self.images.iter().enumerate().find(|(i, &x)| *i as u32 != x).map(|(i, _)| i as u32)
    }

    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut ord = 1u64;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
                len += 1;
            }
            ord = crate::arith::lcm(ord, len);
        }
        ord
    }

    /// Disjoint cycles of length at least two, 0-indexed, each starting at
    /// its smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p as u32);
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{}", self)
    }
}

/// Parses a product of disjoint cycles, e.g. `"(1 4)"` or `"(1 2)(3 4)"`.
///
/// Points inside a cycle may be separated by whitespace or commas. `"()"` is
/// the identity.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Perm> {
    if degree == 0 {
        return Err(Error::EmptyDegree);
    }
    let bytes = text.as_bytes();
    let mut i = 0;
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let syntax = |column: usize, message: &str| Error::CycleSyntax { column: column + 1, message: message.to_string() };
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    skip_ws(&mut i);
    if i == bytes.len() {
        return Err(syntax(i, "empty cycle product"));
    }
    while i < bytes.len() {
        if bytes[i] != b'(' {
            return Err(syntax(i, "expected '('"));
        }
        i += 1;
        let mut cycle = Vec::new();
        loop {
            while i < bytes.len() && (bytes[i].is_ascii_whitespace() || bytes[i] == b',') {
                i += 1;
            }
            if i == bytes.len() {
                return Err(syntax(i, "unterminated cycle"));
            }
            if bytes[i] == b')' {
                i += 1;
                break;
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(syntax(i, "expected a point number"));
            }
            let pt: usize = text[start..i].parse().map_err(|_| syntax(start, "point number too large"))?;
            cycle.push(pt);
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        skip_ws(&mut i);
    }
    let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
    Perm::from_cycles(degree, &refs)
}

/// Parses a generator list: cycle products separated by top-level `,` or `;`,
/// e.g. `"(1 2),(3 4)"`.
pub fn parse_generators(text: &str, degree: usize) -> Result<Vec<Perm>> {
    let mut gens = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' | ';' if depth == 0 => {
                gens.push(parse_piece(text, start, i, degree)?);
                start = i + 1;
            }
            _ => {}
        }
    }
    if !text[start..].trim().is_empty() || gens.is_empty() {
        gens.push(parse_piece(text, start, text.len(), degree)?);
    }
    Ok(gens)
}

fn parse_piece(text: &str, start: usize, end: usize, degree: usize) -> Result<Perm> {
    parse_cycles(&text[start..end], degree).map_err(|e| match e {
        Error::CycleSyntax { column, message } => Error::CycleSyntax { column: column + start, message },
        other => other,
    })
}
