//! Curve systems described by their pairwise intersection numbers.
//!
//! A [`CurveSystem`] is the data every closed-form criterion needs: the
//! symmetric intersection matrix of `a_1, ..., a_h`, optionally a torus
//! realization by slopes, and two surface flags. Realizability of an abstract
//! matrix is not checked.

use alloc::format;
use alloc::vec::Vec;
use core::ops::Deref;

use crate::rational::{ratio, Rational};
use crate::torus::{intersection, Slope};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSystem {
    inter: Vec<Vec<u64>>,
    torus_slopes: Option<Vec<Slope>>,
    punctured: bool,
    pairwise_filling: bool,
}

fn validate_matrix(inter: &[Vec<u64>]) -> Result<()> {
    let h = inter.len();
    if h < 2 {
        return Err(Error::InvalidSystem(format!("need at least 2 curves, got {h}")));
    }
    for (i, row) in inter.iter().enumerate() {
        if row.len() != h {
            return Err(Error::InvalidSystem(format!("row {i} has {} entries, expected {h}", row.len())));
        }
        if row[i] != 0 {
            return Err(Error::InvalidSystem(format!("diagonal entry ({i},{i}) must be 0")));
        }
        for j in 0..i {
            if row[j] != inter[j][i] {
                return Err(Error::InvalidSystem(format!("matrix is not symmetric at ({i},{j})")));
            }
        }
    }
    Ok(())
}

fn all_distinct(slopes: &[Slope]) -> bool {
    slopes.iter().enumerate().all(|(i, x)| slopes[..i].iter().all(|y| y != x))
}

impl CurveSystem {
    /// A system known only through its intersection numbers.
    pub fn from_intersections(inter: Vec<Vec<u64>>, punctured: bool, pairwise_filling: bool) -> Result<Self> {
        validate_matrix(&inter)?;
        Ok(Self { inter, torus_slopes: None, punctured, pairwise_filling })
    }

    /// A torus system; the intersection matrix is computed from the slopes and
    /// pairwise filling holds exactly when the slopes are distinct.
    pub fn from_slopes(slopes: Vec<Slope>, punctured: bool) -> Result<Self> {
        let inter =
            slopes.iter().map(|x| slopes.iter().map(|y| intersection(*x, *y)).collect()).collect::<Vec<Vec<u64>>>();
        validate_matrix(&inter)?;
        let pairwise_filling = all_distinct(&slopes);
        Ok(Self { inter, torus_slopes: Some(slopes), punctured, pairwise_filling })
    }

    /// A system given by both a matrix and a torus realization, which must agree.
    /// `pairwise_filling = None` derives the flag from the slopes.
    pub fn realized(
        inter: Vec<Vec<u64>>,
        slopes: Vec<Slope>,
        punctured: bool,
        pairwise_filling: Option<bool>,
    ) -> Result<Self> {
        validate_matrix(&inter)?;
        if slopes.len() != inter.len() {
            return Err(Error::LengthMismatch { expected: inter.len(), found: slopes.len() });
        }
        for i in 0..slopes.len() {
            for j in 0..slopes.len() {
                let actual = intersection(slopes[i], slopes[j]);
                if actual != inter[i][j] {
                    return Err(Error::InvalidSystem(format!(
                        "intersection ({i},{j}) is {} but slopes {} and {} meet {actual} times",
                        inter[i][j], slopes[i], slopes[j]
                    )));
                }
            }
        }
        let implied = all_distinct(&slopes);
        let pairwise_filling = match pairwise_filling {
            None => implied,
            Some(true) if !implied => {
                return Err(Error::InvalidSystem("pairwise_filling asserted but two torus slopes coincide".into()))
            }
            Some(flag) => flag,
        };
        Ok(Self { inter, torus_slopes: Some(slopes), punctured, pairwise_filling })
    }

    pub fn h(&self) -> usize {
        self.inter.len()
    }

    pub fn inter(&self, i: usize, j: usize) -> u64 {
        self.inter[i][j]
    }

    pub fn intersections(&self) -> &[Vec<u64>] {
        &self.inter
    }

    pub fn torus_slopes(&self) -> Option<&[Slope]> {
        self.torus_slopes.as_deref()
    }

    pub fn punctured(&self) -> bool {
        self.punctured
    }

    pub fn pairwise_filling(&self) -> bool {
        self.pairwise_filling
    }

    pub(crate) fn require_slopes(&self) -> Result<&[Slope]> {
        self.torus_slopes().ok_or_else(|| Error::NotApplicable("operation needs a torus realization".into()))
    }

    /// `((x,a_1), ..., (x,a_h))` for a torus slope `x`.
    pub fn profile(&self, x: Slope) -> Result<Vec<u64>> {
        Ok(self.require_slopes()?.iter().map(|a| intersection(x, *a)).collect())
    }

    /// `||a_i||_A = sum_k (a_i, a_k)`.
    pub fn curve_norm(&self, i: usize) -> u64 {
        self.inter[i].iter().sum()
    }

    pub fn off_diagonal_positive(&self) -> bool {
        (0..self.h()).all(|i| (0..self.h()).all(|j| i == j || self.inter[i][j] > 0))
    }

    pub fn stats(&self) -> Result<Stats> {
        stats(self)
    }

    /// Same system with curves reordered: new curve `k` is old curve `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.h() {
            return Err(Error::LengthMismatch { expected: self.h(), found: perm.len() });
        }
        let inter = perm.iter().map(|&i| perm.iter().map(|&j| self.inter[i][j]).collect()).collect();
        Ok(Self {
            inter,
            torus_slopes: self.torus_slopes.as_ref().map(|s| perm.iter().map(|&i| s[i]).collect()),
            punctured: self.punctured,
            pairwise_filling: self.pairwise_filling,
        })
    }
}

/// Positive exponents `n_1, ..., n_h`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(n: Vec<u32>) -> Result<Self> {
        if let Some(pos) = n.iter().position(|&e| e == 0) {
            return Err(Error::InvalidParams(format!("exponent {} must be positive", pos + 1)));
        }
        Ok(Self(n))
    }

    pub fn uniform(h: usize, n: u32) -> Result<Self> {
        Self::new(alloc::vec![n; h])
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }
}

impl Deref for ExponentVector {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

pub(crate) fn check_exponents(h: usize, exponents: &[u32]) -> Result<()> {
    if exponents.len() != h {
        return Err(Error::LengthMismatch { expected: h, found: exponents.len() });
    }
    ExponentVector::new(exponents.to_vec()).map(|_| ())
}

/// `||x||_A`, the sum of an intersection profile.
pub fn norm(profile: &[u64], system: &CurveSystem) -> Result<u64> {
    if profile.len() != system.h() {
        return Err(Error::LengthMismatch { expected: system.h(), found: profile.len() });
    }
    Ok(profile.iter().sum())
}

/// `||x||_A` for a torus slope.
pub fn slope_norm(x: Slope, system: &CurveSystem) -> Result<u64> {
    Ok(system.profile(x)?.iter().sum())
}

/// Interval guaranteed to contain `(D_a^{±n}(b), c)`:
/// `[n(a,b)(a,c) - (b,c), n(a,b)(a,c) + (b,c)]`.
pub fn twist_intersection_interval(ab: u64, ac: u64, bc: u64, n: u64) -> (i128, i128) {
    let centre = n as i128 * ab as i128 * ac as i128;
    (centre - bc as i128, centre + bc as i128)
}

/// Checks `(c1,c2) <= k ||c1||_A ||c2||_A` with `k = 1` on closed surfaces
/// and `k = 2` with punctures. `A` must fill, which on the torus means it
/// contains two distinct slopes.
pub fn cauchy_schwarz_holds(c1: Slope, c2: Slope, system: &CurveSystem, punctured: bool) -> Result<bool> {
    let slopes = system.require_slopes()?;
    if slopes.iter().all(|s| *s == slopes[0]) {
        return Err(Error::NotApplicable("curve system does not fill the torus".into()));
    }
    let lhs = intersection(c1, c2) as u128;
    let factor = if punctured { 2 } else { 1 };
    let rhs = factor * slope_norm(c1, system)? as u128 * slope_norm(c2, system)? as u128;
    Ok(lhs <= rhs)
}

/// `m = min (a_i,a_j)`, `M = max (a_i,a_j)` over `i != j`, and
/// `M0 = max (a_i,a_k) / ((a_i,a_j)(a_j,a_k))` over distinct ordered triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stats {
    pub min: u64,
    pub max: u64,
    pub max_ratio: Option<Rational>,
}

pub fn stats(system: &CurveSystem) -> Result<Stats> {
    if !system.off_diagonal_positive() {
        return Err(Error::NotApplicable("some pair of curves is disjoint".into()));
    }
    let h = system.h();
    let off = || (0..h).flat_map(move |i| (0..h).filter(move |&j| j != i).map(move |j| (i, j)));
    let min = off().map(|(i, j)| system.inter(i, j)).min().expect("h >= 2");
    let max = off().map(|(i, j)| system.inter(i, j)).max().expect("h >= 2");
    let mut max_ratio: Option<Rational> = None;
    for (i, j) in off() {
        for k in (0..h).filter(|&k| k != i && k != j) {
            let r = ratio(system.inter(i, k) as i128, system.inter(i, j) as i128 * system.inter(j, k) as i128);
            if max_ratio.is_none_or(|m| r > m) {
                max_ratio = Some(r);
            }
        }
    }
    Ok(Stats { min, max, max_ratio })
}
