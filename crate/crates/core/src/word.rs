//! Words in the generators `g_1, ..., g_h` of a twist group.
//!
//! A [`Word`] is a sequence of syllables `g_i^e` with `e != 0`, kept freely
//! reduced: adjacent syllables always have distinct generators. Generator
//! indices are zero-based internally and printed as letters (`a`, `b`, ...).

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Mul;
use core::str::FromStr;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub generator: usize,
    pub exponent: i64,
}

impl Syllable {
    pub fn new(generator: usize, exponent: i64) -> Self {
        Self { generator, exponent }
    }

    fn inverse(self) -> Self {
        Self::new(self.generator, -self.exponent)
    }

    // a < a^-1 < a^2 < a^-2 < ... < b < ...
    fn key(&self) -> (usize, u64, bool) {
        (self.generator, self.exponent.unsigned_abs(), self.exponent < 0)
    }
}

impl Ord for Syllable {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Syllable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    syllables: Vec<Syllable>,
}

fn push_reduced(buf: &mut Vec<Syllable>, s: Syllable) {
    if s.exponent == 0 {
        return;
    }
    match buf.last_mut() {
        Some(last) if last.generator == s.generator => {
            last.exponent += s.exponent;
            if last.exponent == 0 {
                buf.pop();
            }
        }
        _ => buf.push(s),
    }
}

impl Word {
    /// Builds the freely reduced word of the given syllable sequence.
    pub fn new<I: IntoIterator<Item = Syllable>>(syllables: I) -> Self {
        let mut buf = Vec::new();
        for s in syllables {
            push_reduced(&mut buf, s);
        }
        Self { syllables: buf }
    }

    /// Shorthand for `Word::new` over `(generator, exponent)` pairs.
    pub fn from_pairs<I: IntoIterator<Item = (usize, i64)>>(pairs: I) -> Self {
        Self::new(pairs.into_iter().map(|(g, e)| Syllable::new(g, e)))
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn generator(generator: usize) -> Self {
        Self::from_pairs([(generator, 1)])
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    /// Number of syllables.
    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self { syllables: self.syllables.iter().rev().map(|s| s.inverse()).collect() }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..k.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    /// `self * other * self^-1`.
    pub fn conjugate(&self, other: &Word) -> Self {
        &(self * other) * &self.inverse()
    }

    /// Largest exponent magnitude over all syllables.
    pub fn max_step(&self) -> u64 {
        self.syllables.iter().map(|s| s.exponent.unsigned_abs()).max().unwrap_or(0)
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.syllables.iter().map(|s| s.generator).max()
    }

    /// Number of distinct generators that occur.
    pub fn distinct_generators(&self) -> usize {
        let mut seen: Vec<usize> = self.syllables.iter().map(|s| s.generator).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Replaces generator `i` by `map[i]` and multiplies every exponent by `sign`.
    pub fn relabel(&self, map: &[usize], sign: i64) -> Self {
        Self::new(self.syllables.iter().map(|s| Syllable::new(map[s.generator], sign * s.exponent)))
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.syllables.first(), self.syllables.last()) {
            (Some(f), Some(l)) if self.syllables.len() >= 2 => f.generator != l.generator,
            _ => true,
        }
    }

    /// Conjugates the word until first and last syllables use different
    /// generators, merging the two end syllables whenever they match.
    pub fn cyclic_reduce(&self) -> Self {
        let mut s = self.syllables.clone();
        while s.len() >= 2 && s[0].generator == s[s.len() - 1].generator {
            let last = s.pop().expect("len >= 2");
            let e = s[0].exponent + last.exponent;
            if e == 0 {
                s.remove(0);
            } else {
                s[0].exponent = e;
            }
        }
        Self { syllables: s }
    }

    /// Lexicographically least word among all cyclic rotations of `self`
    /// and of its inverse. Expects a cyclically reduced word.
    pub fn canonical_cyclic(&self) -> Self {
        let n = self.syllables.len();
        if n == 0 {
            return self.clone();
        }
        let inv = self.inverse();
        let mut best: Option<Vec<Syllable>> = None;
        for base in [&self.syllables, &inv.syllables] {
            for r in 0..n {
                let rot: Vec<Syllable> = base[r..].iter().chain(base[..r].iter()).copied().collect();
                if best.as_ref().is_none_or(|b| rot < *b) {
                    best = Some(rot);
                }
            }
        }
        Self { syllables: best.expect("nonempty") }
    }
}

impl Mul<&Word> for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        let mut buf = self.syllables.clone();
        for &s in &rhs.syllables {
            push_reduced(&mut buf, s);
        }
        Word { syllables: buf }
    }
}

impl Mul<Word> for Word {
    type Output = Word;

    fn mul(self, rhs: Word) -> Word {
        &self * &rhs
    }
}

fn write_generator(f: &mut fmt::Formatter<'_>, g: usize) -> fmt::Result {
    if g < 26 {
        write!(f, "{}", (b'a' + g as u8) as char)
    } else {
        write!(f, "g{}", g + 1)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write_generator(f, s.generator)?;
            if s.exponent != 1 {
                write!(f, "^{}", s.exponent)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses words such as `"a b^3 a^-1"` or `"ab^2"`; `"1"` is the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParams(alloc::format!("cannot parse word {s:?}"));
        let bytes = s.as_bytes();
        let mut i = 0;
        let mut out = Vec::new();
        while i < bytes.len() {
            let c = bytes[i];
            if c.is_ascii_whitespace() || (c == b'1' && out.is_empty() && s.trim() == "1") {
                i += 1;
                continue;
            }
            if !c.is_ascii_lowercase() {
                return Err(bad());
            }
            let generator = (c - b'a') as usize;
            i += 1;
            let mut exponent = 1i64;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let start = i;
                if i < bytes.len() && bytes[i] == b'-' {
                    i += 1;
                }
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                exponent = s[start..i].parse().map_err(|_| bad())?;
            }
            out.push(Syllable::new(generator, exponent));
        }
        Ok(Word::new(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn construction_reduces_freely() {
        assert_eq!(w("a a b b^-1 a^-2"), Word::empty());
        assert_eq!(w("a b a^-1 a c"), w("a b c"));
        assert_eq!(w("ab^2a").len(), 3);
        assert_eq!(w("1"), Word::empty());
        assert!("aB".parse::<Word>().is_err());
    }

    #[test]
    fn cyclic_reduction_examples() {
        assert_eq!(w("a b a^-1").cyclic_reduce(), w("b"));
        assert_eq!(w("a^2 b a^-1").cyclic_reduce(), w("a b"));
        assert_eq!(w("b^3 a^2 c^6").cyclic_reduce(), w("b^3 a^2 c^6"));
        assert_eq!(w("a b a^-1 b^-1").cyclic_reduce(), w("a b a^-1 b^-1"));
        assert_eq!(w("a b c b^-1 a^-1").cyclic_reduce(), w("c"));
        assert_eq!(Word::empty().cyclic_reduce(), Word::empty());
    }

    #[test]
    fn canonical_form_prefers_positive_small_letters() {
        assert_eq!(w("b a").canonical_cyclic(), w("a b"));
        assert_eq!(w("a^-1 b^-1").canonical_cyclic(), w("a b"));
        assert_eq!(w("b^-1 a").canonical_cyclic(), w("a b^-1"));
        assert_eq!(w("a^-1").canonical_cyclic(), w("a"));
    }

    #[test]
    fn display_round_trips() {
        for s in ["a b^3 a^-1", "c^-2 a", "1"] {
            assert_eq!(w(s).to_string(), s);
        }
        assert_eq!(Word::generator(27).to_string(), "g28");
    }

    #[test]
    fn powers_and_inverses() {
        let x = w("a b^2");
        assert_eq!(x.pow(2), w("a b^2 a b^2"));
        assert_eq!(x.pow(-1), x.inverse());
        assert_eq!(&x * &x.inverse(), Word::empty());
        assert_eq!(w("a").conjugate(&w("b")), w("a b a^-1"));
        assert_eq!(w("a b^-3 c").max_step(), 3);
        assert_eq!(w("a b a").distinct_generators(), 2);
        assert_eq!(w("a b^2").relabel(&[1, 0], -1), w("b^-1 a^-2"));
    }
}
