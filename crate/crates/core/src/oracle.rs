//! Brute-force search on the torus: relations (words evaluating to the
//! identity matrix) and non-Anosov words (`|trace| <= 2`), plus the
//! construction of non-free triples from a curve in the twist orbit of a pair.
//!
//! Words are over generator syllables: a step `t` of generator `i` stands for
//! `(D_{a_i}^{n_i})^t`. Results are canonical up to rotation and inversion and
//! sorted, so searches are deterministic.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::rational::gcd_i64;
use crate::system::{check_exponents, CurveSystem};
use crate::torus::{fixed_slope, intersection, twist_matrix, word_matrix, FixedSlope, Slope, UnimodularMatrix};
use crate::verdict::Witness;
use crate::word::{Syllable, Word};
use crate::{Error, Result};

/// See [`Word::cyclic_reduce`].
pub fn cyclic_reduce(w: &Word) -> Word {
    w.cyclic_reduce()
}

fn steps(max_step: u32) -> Vec<i64> {
    (1..=max_step as i64).flat_map(|t| [t, -t]).collect()
}

fn check_bounds(max_syllables: usize, max_step: u32) -> Result<()> {
    if max_syllables == 0 || max_step == 0 {
        return Err(Error::InvalidParams("search bounds must be at least 1".into()));
    }
    Ok(())
}

// Keys of the canonical form: the first syllable of a canonical word is the
// least syllable among those of the word and of its inverse, so every later
// syllable and its inverse must compare at least as large.
fn may_follow(first: Syllable, s: Syllable) -> bool {
    first <= s && first <= Syllable::new(s.generator, -s.exponent)
}

fn is_canonical_leaf(buf: &[Syllable]) -> bool {
    let w = Word::new(buf.iter().copied());
    w.len() == buf.len() && w.is_cyclically_reduced() && w.canonical_cyclic() == w
}

/// All cyclically reduced words with at most `max_syllables` syllables and
/// steps in `[-max_step, max_step] \ {0}`, one per class under rotation and
/// inversion, sorted.
pub fn enumerate_words(h: usize, max_syllables: usize, max_step: u32) -> Result<Vec<Word>> {
    check_bounds(max_syllables, max_step)?;
    if h == 0 {
        return Err(Error::InvalidParams("need at least one generator".into()));
    }
    let steps = steps(max_step);
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(max_syllables);
    fn rec(h: usize, max: usize, steps: &[i64], buf: &mut Vec<Syllable>, out: &mut Vec<Word>) {
        if !buf.is_empty() && is_canonical_leaf(buf) {
            out.push(Word::new(buf.iter().copied()));
        }
        if buf.len() == max {
            return;
        }
        for g in 0..h {
            if buf.last().is_some_and(|l| l.generator == g) {
                continue;
            }
            for &e in steps {
                let s = Syllable::new(g, e);
                if let Some(&first) = buf.first() {
                    if !may_follow(first, s) {
                        continue;
                    }
                } else if e < 0 {
                    continue;
                }
                buf.push(s);
                rec(h, max, steps, buf, out);
                buf.pop();
            }
        }
    }
    rec(h, max_syllables, &steps, &mut buf, &mut out);
    out.sort();
    Ok(out)
}

struct Generators {
    // matrices[g][k] for steps[k]
    matrices: Vec<Vec<UnimodularMatrix>>,
    steps: Vec<i64>,
}

impl Generators {
    fn new(curves: &[Slope], exponents: &[u32], max_step: u32) -> Result<Self> {
        check_exponents(curves.len(), exponents)?;
        let steps = steps(max_step);
        let mut matrices = Vec::with_capacity(curves.len());
        for (c, &n) in curves.iter().zip(exponents) {
            let row = steps
                .iter()
                .map(|&t| twist_matrix(*c, t.checked_mul(n as i64).ok_or(Error::Overflow)?))
                .collect::<Result<Vec<_>>>()?;
            matrices.push(row);
        }
        Ok(Self { matrices, steps })
    }
}

/// Relators with at most `max_syllables` syllables and steps at most
/// `max_step`, up to rotation and inversion. Only exact identity counts;
/// `-I` is a nontrivial element.
///
/// Meet in the middle: a cyclically reduced relator `w = u v` with
/// `|u| = ceil(|w|/2)` gives two reduced words `u` and `v^-1` of length at
/// most `ceil(max_syllables/2)` with equal matrices.
pub fn find_relations(curves: &[Slope], exponents: &[u32], max_syllables: usize, max_step: u32) -> Result<Vec<Word>> {
    check_bounds(max_syllables, max_step)?;
    let gens = Generators::new(curves, exponents, max_step)?;
    let half = max_syllables.div_ceil(2);
    let mut by_matrix: BTreeMap<UnimodularMatrix, Vec<Word>> = BTreeMap::new();
    let mut buf = Vec::new();
    fn rec(
        gens: &Generators,
        half: usize,
        m: UnimodularMatrix,
        buf: &mut Vec<Syllable>,
        by_matrix: &mut BTreeMap<UnimodularMatrix, Vec<Word>>,
    ) -> Result<()> {
        by_matrix.entry(m).or_default().push(Word::new(buf.iter().copied()));
        if buf.len() == half {
            return Ok(());
        }
        for (g, row) in gens.matrices.iter().enumerate() {
            if buf.last().is_some_and(|l| l.generator == g) {
                continue;
            }
            for (k, step_m) in row.iter().enumerate() {
                buf.push(Syllable::new(g, gens.steps[k]));
                rec(gens, half, m.checked_mul(step_m)?, buf, by_matrix)?;
                buf.pop();
            }
        }
        Ok(())
    }
    rec(&gens, half, UnimodularMatrix::IDENTITY, &mut buf, &mut by_matrix)?;

    let mut found = BTreeSet::new();
    for words in by_matrix.values() {
        for (i, u) in words.iter().enumerate() {
            for x in &words[i + 1..] {
                let w = (u * &x.inverse()).cyclic_reduce();
                if !w.is_empty() && w.len() <= max_syllables && w.max_step() <= max_step as u64 {
                    found.insert(w.canonical_cyclic());
                }
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// A word with at least two generators whose matrix has `|trace| <= 2`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Reducible {
    pub word: Word,
    pub matrix: UnimodularMatrix,
}

impl Reducible {
    pub fn fixed(&self) -> FixedSlope {
        fixed_slope(&self.matrix)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == UnimodularMatrix::IDENTITY
    }

    pub fn witness(&self) -> Witness {
        Witness::NonAnosov { word: self.word.clone(), fixed: self.fixed() }
    }
}

/// Cyclically reduced words using at least two distinct generators whose
/// matrix is central, parabolic or elliptic, up to rotation and inversion.
pub fn find_reducibles(
    curves: &[Slope],
    exponents: &[u32],
    max_syllables: usize,
    max_step: u32,
) -> Result<Vec<Reducible>> {
    check_bounds(max_syllables, max_step)?;
    let gens = Generators::new(curves, exponents, max_step)?;
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(max_syllables);
    fn rec(
        gens: &Generators,
        max: usize,
        m: UnimodularMatrix,
        buf: &mut Vec<Syllable>,
        out: &mut Vec<Reducible>,
    ) -> Result<()> {
        if buf.len() >= 2 && m.trace().abs() <= 2 && is_canonical_leaf(buf) {
            let word = Word::new(buf.iter().copied());
            if word.distinct_generators() >= 2 {
                out.push(Reducible { word, matrix: m });
            }
        }
        if buf.len() == max {
            return Ok(());
        }
        for (g, row) in gens.matrices.iter().enumerate() {
            if buf.last().is_some_and(|l| l.generator == g) {
                continue;
            }
            for (k, step_m) in row.iter().enumerate() {
                let s = Syllable::new(g, gens.steps[k]);
                match buf.first() {
                    Some(&first) if !may_follow(first, s) => continue,
                    None if s.exponent < 0 => continue,
                    _ => {}
                }
                buf.push(s);
                rec(gens, max, m.checked_mul(step_m)?, buf, out)?;
                buf.pop();
            }
        }
        Ok(())
    }
    rec(&gens, max_syllables, UnimodularMatrix::IDENTITY, &mut buf, &mut out)?;
    out.sort();
    Ok(out)
}

/// A rotation of `word` or of its inverse whose matrix fixes `slope`.
/// Fixed slopes move under conjugation, so a reducible class usually has
/// representatives fixing several different slopes.
pub fn rotation_fixing(word: &Word, curves: &[Slope], exponents: &[u32], slope: Slope) -> Result<Option<Word>> {
    let n = word.len();
    for base in [word.clone(), word.inverse()] {
        let syl = base.syllables();
        for r in 0..n {
            let rot = Word::new(syl[r..].iter().chain(syl[..r].iter()).copied());
            let m = word_matrix(&rot, curves, exponents)?;
            if m.apply(slope)? == slope {
                return Ok(Some(rot));
            }
        }
    }
    Ok(None)
}

/// Which curve of the pair the orbit element `g` is applied to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseCurve {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonFreeTriple {
    /// Curves `a`, `b`, `c` in this order.
    pub system: CurveSystem,
    /// `g(base)`, which meets `c` once.
    pub orbit_curve: Slope,
    /// Braid relation between `D_c` and `g D_base g^-1`, over generators
    /// `a`, `b`, `c` with exponents 1.
    pub relation: Witness,
}

// Solutions (r, s) of p s - q r = 1.
fn unit_partner(c: Slope) -> Slope {
    let (p, q) = (c.p(), c.q());
    let (mut old_r, mut r) = (p, q);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let k = old_r / r;
        (old_r, r) = (r, old_r - k * r);
        (old_s, s) = (s, old_s - k * s);
        (old_t, t) = (t, old_t - k * t);
    }
    // old_s p + old_t q = ±1
    Slope::new(-old_t, old_s).expect("Bezout pair is primitive")
}

/// Builds `c` meeting `c1 = g(base)` once and the relation
/// `c (g x g^-1) c = (g x g^-1) c (g x g^-1)` in `<D_a, D_b, D_c>`, where `x`
/// is the generator of the base curve.
pub fn construct_nonfree_triple(a: Slope, b: Slope, g: &Word, base: BaseCurve) -> Result<NonFreeTriple> {
    if intersection(a, b) < 2 {
        return Err(Error::NotApplicable(format!(
            "the pair must meet at least twice, ({a},{b}) = {}",
            intersection(a, b)
        )));
    }
    if g.max_generator().is_some_and(|m| m > 1) {
        return Err(Error::InvalidParams("g must be a word in a and b".into()));
    }
    let (x, base_slope) = match base {
        BaseCurve::A => (0, a),
        BaseCurve::B => (1, b),
    };
    let c1 = word_matrix(g, &[a, b], &[1, 1])?.apply(base_slope)?;
    let start = unit_partner(c1);
    debug_assert_eq!(intersection(start, c1), 1);
    let mut best: Option<Slope> = None;
    for k in -4i64..=4 {
        let p = start.p() + k * c1.p();
        let q = start.q() + k * c1.q();
        if gcd_i64(p, q) != 1 {
            continue;
        }
        let cand = Slope::new(p, q)?;
        if cand == a || cand == b {
            continue;
        }
        let key = |s: Slope| (s.height(), s.p().unsigned_abs() + s.q() as u64, s.p());
        if best.is_none_or(|bst| key(cand) < key(bst)) {
            best = Some(cand);
        }
    }
    let c = best.ok_or_else(|| Error::NotApplicable("no curve meeting g(base) once".into()))?;
    let t = g.conjugate(&Word::generator(x));
    let cw = Word::generator(2);
    let lhs = &(&cw * &t) * &cw;
    let rhs = &(&t * &cw) * &t;
    let system = CurveSystem::from_slopes(vec![a, b, c], false)?;
    Ok(NonFreeTriple { system, orbit_curve: c1, relation: Witness::Relation { lhs, rhs } })
}
