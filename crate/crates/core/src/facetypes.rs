//! Face-sequences, map types, and the curvature-0 type tables.
//!
//! A face-sequence is the cyclic tuple of polygon sizes around a vertex,
//! stored in canonical form: the lexicographically least tuple over all
//! rotations and both directions. It displays in run-length form such as
//! `3^2.4.3.4`. A map type is a sorted set of distinct face-sequences,
//! displayed as `[3^6:3^3.4^2]`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::Rational;

/// Errors from the type-string grammar.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("polygon size {size} at position {pos} is below 3")]
    SizeTooSmall { pos: usize, size: u32 },
    #[error("face-sequence at position {pos} has {len} entries, at least 3 are required")]
    SequenceTooShort { pos: usize, len: usize },
}

/// Canonical cyclic tuple of polygon sizes around a vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceSequence {
    sizes: Vec<u32>,
}

impl FaceSequence {
    /// Canonicalizes a cyclic tuple of sizes.
    pub fn from_cyclic(sizes: &[u32]) -> Result<FaceSequence, TypeError> {
        if sizes.len() < 3 {
            return Err(TypeError::SequenceTooShort {
                pos: 0,
                len: sizes.len(),
            });
        }
        if let Some(&size) = sizes.iter().find(|&&s| s < 3) {
            return Err(TypeError::SizeTooSmall { pos: 0, size });
        }
        Ok(FaceSequence::canonical_unchecked(sizes))
    }

    pub(crate) fn canonical_unchecked(sizes: &[u32]) -> FaceSequence {
        FaceSequence {
            sizes: canonical_rotation(sizes),
        }
    }

    /// The canonical tuple.
    pub fn sizes(&self) -> &[u32] {
        &self.sizes
    }

    /// Number of faces around the vertex.
    pub fn degree(&self) -> usize {
        self.sizes.len()
    }

    /// Number of link entries: the sum of `p - 2` over the faces.
    pub fn link_length(&self) -> usize {
        self.sizes.iter().map(|&p| p as usize - 2).sum()
    }

    /// `1 - d/2 + sum(1/p)`, exactly.
    pub fn curvature(&self) -> Rational {
        let d = self.sizes.len() as i64;
        let mut phi = Rational::one() - Rational::new(d, 2);
        for &p in &self.sizes {
            phi += Rational::new(1, i64::from(p));
        }
        phi
    }
}

/// Lexicographically least rotation over both directions.
pub(crate) fn canonical_rotation(sizes: &[u32]) -> Vec<u32> {
    let n = sizes.len();
    let mut best: Option<Vec<u32>> = None;
    for rev in [false, true] {
        for s in 0..n {
            let cand: Vec<u32> = (0..n)
                .map(|k| {
                    if rev {
                        sizes[(s + n - k) % n]
                    } else {
                        sizes[(s + k) % n]
                    }
                })
                .collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// Canonical form of a cyclic tuple of sizes.
pub fn canonical_face_sequence(sizes: &[u32]) -> Result<FaceSequence, TypeError> {
    FaceSequence::from_cyclic(sizes)
}

impl fmt::Display for FaceSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        let mut first = true;
        while i < self.sizes.len() {
            let mut j = i;
            while j < self.sizes.len() && self.sizes[j] == self.sizes[i] {
                j += 1;
            }
            if !first {
                write!(f, ".")?;
            }
            first = false;
            if j - i > 1 {
                write!(f, "{}^{}", self.sizes[i], j - i)?;
            } else {
                write!(f, "{}", self.sizes[i])?;
            }
            i = j;
        }
        Ok(())
    }
}

impl FromStr for FaceSequence {
    type Err = TypeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser::new(s);
        let seq = p.sequence()?;
        p.end()?;
        Ok(seq)
    }
}

/// A sorted set of distinct face-sequences.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MapType {
    sequences: Vec<FaceSequence>,
}

impl MapType {
    pub fn from_sequences(seqs: impl IntoIterator<Item = FaceSequence>) -> MapType {
        let mut sequences: Vec<FaceSequence> = seqs.into_iter().collect();
        sequences.sort();
        sequences.dedup();
        MapType { sequences }
    }

    pub fn sequences(&self) -> &[FaceSequence] {
        &self.sequences
    }

    /// Number of distinct face-sequences.
    pub fn k(&self) -> usize {
        self.sequences.len()
    }

    pub fn contains(&self, seq: &FaceSequence) -> bool {
        self.sequences.binary_search(seq).is_ok()
    }

    /// Whether every sequence has curvature 0.
    pub fn is_flat(&self) -> bool {
        self.sequences.iter().all(|s| s.curvature().is_zero())
    }
}

impl fmt::Display for MapType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, s) in self.sequences.iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for MapType {
    type Err = TypeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_type(s)
    }
}

/// Parses `'['? seq (':' seq)* ']'?` where `seq := item ('.' item)*` and
/// `item := INT ('^' INT)?`. Whitespace between tokens is ignored.
pub fn parse_type(text: &str) -> Result<MapType, TypeError> {
    let mut p = Parser::new(text);
    p.skip_ws();
    let open = p.eat(b'[');
    let mut seqs = vec![p.sequence()?];
    while p.eat(b':') {
        seqs.push(p.sequence()?);
    }
    if open && !p.eat(b']') {
        return Err(p.error("expected `:` or `]`"));
    }
    if !open && p.peek() == Some(b']') {
        return Err(p.error("unmatched `]`"));
    }
    p.end()?;
    Ok(MapType::from_sequences(seqs))
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, message: &str) -> TypeError {
        TypeError::Syntax {
            pos: self.pos,
            message: message.to_string(),
        }
    }

    fn end(&mut self) -> Result<(), TypeError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.error("unexpected trailing input")),
        }
    }

    fn int(&mut self) -> Result<(usize, u32), TypeError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        let value = digits.parse::<u32>().map_err(|_| TypeError::Syntax {
            pos: start,
            message: "integer too large".into(),
        })?;
        Ok((start, value))
    }

    fn sequence(&mut self) -> Result<FaceSequence, TypeError> {
        self.skip_ws();
        let start = self.pos;
        let mut sizes = Vec::new();
        loop {
            let (pos, size) = self.int()?;
            if size < 3 {
                return Err(TypeError::SizeTooSmall { pos, size });
            }
            let mut count = 1;
            if self.eat(b'^') {
                let (epos, e) = self.int()?;
                if e == 0 {
                    return Err(TypeError::Syntax {
                        pos: epos,
                        message: "exponent must be at least 1".into(),
                    });
                }
                count = e;
            }
            if sizes.len() + count as usize > 64 {
                return Err(TypeError::Syntax {
                    pos,
                    message: "face-sequence longer than 64".into(),
                });
            }
            sizes.extend(std::iter::repeat_n(size, count as usize));
            if !self.eat(b'.') {
                break;
            }
        }
        if sizes.len() < 3 {
            return Err(TypeError::SequenceTooShort {
                pos: start,
                len: sizes.len(),
            });
        }
        Ok(FaceSequence::canonical_unchecked(&sizes))
    }
}

/// All face-sequences with curvature exactly 0.
///
/// `sum(1/p) = d/2 - 1` with every `p >= 3` forces `3 <= d <= 6`. For each
/// degree the size multisets are found by a bounded search over
/// non-decreasing sizes, then every distinct cyclic arrangement is emitted.
pub fn solve_zero_curvature() -> Vec<FaceSequence> {
    let mut out = Vec::new();
    for d in 3..=6usize {
        let target = Rational::new(d as i64, 2) - Rational::one();
        let mut multisets = Vec::new();
        multisets_with_sum(target, d, 3, &mut Vec::new(), &mut multisets);
        for ms in multisets {
            for arrangement in distinct_arrangements(&ms) {
                out.push(FaceSequence::canonical_unchecked(&arrangement));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Non-decreasing tuples of `count` sizes `>= min` with reciprocal sum `rest`.
fn multisets_with_sum(
    rest: Rational,
    count: usize,
    min: u32,
    cur: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if count == 0 {
        if rest.is_zero() {
            out.push(cur.clone());
        }
        return;
    }
    if rest <= Rational::zero() {
        return;
    }
    // 1/p <= rest forces p >= 1/rest; count/p >= rest forces p <= count/rest.
    let lo = (Rational::one() / rest)
        .ceil()
        .to_integer()
        .max(i64::from(min)) as u32;
    let hi = (Rational::from_integer(count as i64) / rest)
        .floor()
        .to_integer() as u32;
    for p in lo..=hi {
        cur.push(p);
        multisets_with_sum(
            rest - Rational::new(1, i64::from(p)),
            count - 1,
            p,
            cur,
            out,
        );
        cur.pop();
    }
}

/// Distinct cyclic arrangements (up to rotation and reflection) of a multiset.
fn distinct_arrangements(ms: &[u32]) -> Vec<Vec<u32>> {
    let mut perms = Vec::new();
    let mut used = vec![false; ms.len()];
    permute(ms, &mut used, &mut Vec::new(), &mut perms);
    let mut canon: Vec<Vec<u32>> = perms.iter().map(|p| canonical_rotation(p)).collect();
    canon.sort();
    canon.dedup();
    canon
}

fn permute(ms: &[u32], used: &mut [bool], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if cur.len() == ms.len() {
        out.push(cur.clone());
        return;
    }
    for i in 0..ms.len() {
        if used[i] || (i > 0 && ms[i] == ms[i - 1] && !used[i - 1]) {
            continue;
        }
        used[i] = true;
        cur.push(ms[i]);
        permute(ms, used, cur, out);
        cur.pop();
        used[i] = false;
    }
}

/// Pair types with curvature 0 that admit no map.
const SET_A: [&str; 53] = [
    "3^3.4^2:3^2.6^2",
    "3^3.4^2:3.4^2.6",
    "3^3.4^2:3^4.6",
    "3^3.4^2:3^2.4.12",
    "3^3.4^2:4.8^2",
    "3^3.4^2:4.5.20",
    "3^3.4^2:4.6.12",
    "3^3.4^2:3.4.3.12",
    "3.4^2.6:3^2.6^2",
    "3.4^2.6:3^4.6",
    "3.4^2.6:3^2.4.3.4",
    "3.4^2.6:4^4",
    "3.4^2.6:3^2.4.12",
    "3.4^2.6:4.8^2",
    "3.4^2.6:6^3",
    "3.4^2.6:4.5.20",
    "3.4^2.6:4.6.12",
    "3.4^2.6:3.4.3.12",
    "3^2.6^2:3^2.4.3.4",
    "3^2.6^2:3^2.4.12",
    "3^2.6^2:6^3",
    "3^4.6:3^2.4.3.4",
    "3^4.6:3^2.4.12",
    "3^4.6:6^3",
    "3^4.6:4.6.12",
    "3^2.4.3.4:4^4",
    "3^2.4.3.4:3^2.4.12",
    "3^2.4.3.4:3.4.3.12",
    "3^2.4.3.4:4.8^2",
    "3.6.3.6:4.6.12",
    "3.6.3.6:6^3",
    "4^4:3.4.6.4",
    "4^4:3^2.4.12",
    "4^4:4.8^2",
    "4^4:4.5.20",
    "4^4:4.6.12",
    "4^4:3.4.3.12",
    "3.4.6.4:3^2.4.12",
    "3.4.6.4:6^3",
    "3.4.6.4:4.8^2",
    "3.4.6.4:4.5.20",
    "3.4.6.4:3.4.3.12",
    "3^2.4.12:3.12^2",
    "3^2.4.12:3.4.3.12",
    "3^2.4.12:4.5.20",
    "3^2.4.12:4.6.12",
    "3^2.4.12:4.8^2",
    "4.8^2:4.5.20",
    "4.8^2:4.6.12",
    "4.8^2:3.4.3.12",
    "3.12^2:3.4.3.12",
    "6^3:4.6.12",
    "5^2.10:4.5.20",
];

/// Pair types with curvature 0 that admit a map on the torus or Klein bottle.
const SET_B: [&str; 16] = [
    "3^6:3^4.6",
    "3^6:3^3.4^2",
    "3^6:3^2.4.3.4",
    "3^6:3^2.4.12",
    "3^6:3^2.6^2",
    "3^4.6:3.6.3.6",
    "3^3.4^2:3^2.4.3.4",
    "3^3.4^2:3.4.6.4",
    "3^3.4^2:4^4",
    "3^2.4.3.4:3.4.6.4",
    "3^2.6^2:3^4.6",
    "3^2.6^2:3.6.3.6",
    "3.4^2.6:3.4.6.4",
    "3.4^2.6:3.6.3.6",
    "3.4.6.4:4.6.12",
    "3.12^2:3.4.3.12",
];

/// The curvature-0 sequences and the two families of candidate pair types.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeTable {
    /// Every face-sequence of curvature 0.
    pub set_s: Vec<FaceSequence>,
    /// Candidate pair types that admit no map.
    pub set_a: Vec<MapType>,
    /// Pair types that are realized on the torus or Klein bottle.
    pub set_b: Vec<MapType>,
}

/// Builds the type table; `set_s` is computed, `set_a` and `set_b` are data.
pub fn candidate_type_tables() -> TypeTable {
    let parse = |s: &&str| parse_type(s).expect("built-in type strings are well formed");
    TypeTable {
        set_s: solve_zero_curvature(),
        set_a: SET_A.iter().map(parse).collect(),
        set_b: SET_B.iter().map(parse).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> FaceSequence {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(
            canonical_face_sequence(&[4, 3, 4, 3, 3]).unwrap().sizes(),
            &[3, 3, 4, 3, 4]
        );
        assert_eq!(
            canonical_face_sequence(&[4, 4, 3, 3, 3]).unwrap().sizes(),
            &[3, 3, 3, 4, 4]
        );
        let a = canonical_face_sequence(&[3, 4, 6, 4]).unwrap();
        assert_eq!(a, canonical_face_sequence(&[4, 6, 4, 3]).unwrap());
        assert_eq!(a, canonical_face_sequence(&[4, 3, 4, 6]).unwrap());
        assert!(matches!(
            canonical_face_sequence(&[3, 3]),
            Err(TypeError::SequenceTooShort { .. })
        ));
        assert!(matches!(
            canonical_face_sequence(&[3, 2, 3]),
            Err(TypeError::SizeTooSmall { .. })
        ));
    }

    #[test]
    fn display_is_run_length() {
        assert_eq!(seq("3.3.4.3.4").to_string(), "3^2.4.3.4");
        assert_eq!(seq("3^12").to_string(), "3^12");
        assert_eq!(seq("12.3.12").to_string(), "3.12^2");
    }

    #[test]
    fn curvature_values() {
        assert_eq!(seq("3^6").curvature(), Rational::zero());
        assert_eq!(seq("3.7.42").curvature(), Rational::zero());
        assert_eq!(seq("3^7").curvature(), Rational::new(-1, 6));
    }

    #[test]
    fn parse_types() {
        assert_eq!(seq("3^2.4.3.4").sizes(), &[3, 3, 4, 3, 4]);
        let t = parse_type("[3^6:3^3.4^2]").unwrap();
        assert_eq!(t.k(), 2);
        assert_eq!(t.to_string(), "[3^6:3^3.4^2]");
        assert_eq!(parse_type("3^3.4^2 : 3^6").unwrap(), t);
        assert!(matches!(
            parse_type("4^0.3"),
            Err(TypeError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_type("3^6:2.3.3"),
            Err(TypeError::SizeTooSmall { pos: 4, size: 2 })
        ));
        assert!(matches!(
            parse_type("[3^6"),
            Err(TypeError::Syntax { pos: 4, .. })
        ));
        assert!(matches!(parse_type("3^6]"), Err(TypeError::Syntax { .. })));
        assert!(matches!(
            parse_type("3^6:"),
            Err(TypeError::Syntax { pos: 4, .. })
        ));
        assert!(matches!(
            parse_type("3.x"),
            Err(TypeError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_type("6^2"),
            Err(TypeError::SequenceTooShort { .. })
        ));
    }

    #[test]
    fn zero_curvature_set() {
        let s = solve_zero_curvature();
        assert_eq!(s.len(), 21);
        assert!(s.contains(&seq("3^3.4^2")));
        assert!(s.contains(&seq("3^2.4.3.4")));
        assert!(s.contains(&seq("3.7.42")));
        assert!(s.iter().all(|f| f.curvature().is_zero()));
    }

    #[test]
    fn tables() {
        let t = candidate_type_tables();
        assert_eq!(t.set_a.len(), 53);
        assert_eq!(t.set_b.len(), 16);
        assert!(t.set_b.contains(&parse_type("3^6:3^4.6").unwrap()));
        assert!(t.set_a.contains(&parse_type("3^3.4^2:3^2.6^2").unwrap()));
        let x = parse_type("3^6:4^4").unwrap();
        assert!(!t.set_a.contains(&x) && !t.set_b.contains(&x));
        // The transcribed A list repeats one realizable type from B.
        let shared: Vec<_> = t.set_a.iter().filter(|x| t.set_b.contains(x)).collect();
        assert_eq!(shared, vec![&parse_type("3.4.3.12:3.12^2").unwrap()]);
        for ty in t.set_a.iter().chain(&t.set_b) {
            assert!(ty.sequences().iter().all(|s| t.set_s.contains(s)));
        }
    }
}
