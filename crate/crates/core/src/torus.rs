//! Simple closed curves on the torus and the Dehn-twist action.
//!
//! An essential unoriented simple closed curve on the torus is a primitive
//! integer vector up to sign, its [`Slope`]. The mapping class group is
//! `SL(2,Z)` acting projectively on slopes, and the right-handed twist about
//! `c = (p,q)` is `I + n * [[pq, -p^2], [q^2, -pq]]`.

use alloc::vec::Vec;
use core::fmt;

use crate::rational::gcd_i64;
use crate::word::Word;
use crate::{Error, Result};

/// Primitive integer pair in canonical form: `q > 0`, or `(p,q) = (1,0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    /// Canonical representative of the unoriented class of `(p,q)`.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if (p == 0 && q == 0) || gcd_i64(p, q) != 1 || p == i64::MIN || q == i64::MIN {
            return Err(Error::InvalidCurve { p, q });
        }
        if q < 0 || (q == 0 && p < 0) {
            Ok(Self { p: -p, q: -q })
        } else {
            Ok(Self { p, q })
        }
    }

    pub const fn p(self) -> i64 {
        self.p
    }

    pub const fn q(self) -> i64 {
        self.q
    }

    /// `max(|p|, |q|)`.
    pub fn height(self) -> u64 {
        self.p.unsigned_abs().max(self.q.unsigned_abs())
    }

    pub fn intersection(self, other: Slope) -> u64 {
        intersection(self, other)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

pub fn canonicalize(p: i64, q: i64) -> Result<Slope> {
    Slope::new(p, q)
}

/// Geometric intersection number `|p_x q_y - q_x p_y|`.
pub fn intersection(x: Slope, y: Slope) -> u64 {
    let d = x.p as i128 * y.q as i128 - x.q as i128 * y.p as i128;
    d.unsigned_abs() as u64
}

fn narrow(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow)
}

/// 2x2 integer matrix of determinant 1, row-major.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnimodularMatrix([i64; 4]);

impl UnimodularMatrix {
    pub const IDENTITY: Self = Self([1, 0, 0, 1]);
    pub const NEG_IDENTITY: Self = Self([-1, 0, 0, -1]);

    pub fn new(entries: [i64; 4]) -> Result<Self> {
        let [a, b, c, d] = entries.map(i128::from);
        if a * d - b * c != 1 {
            return Err(Error::InvalidParams(alloc::format!("matrix {entries:?} does not have determinant 1")));
        }
        Ok(Self(entries))
    }

    pub fn entries(&self) -> [i64; 4] {
        self.0
    }

    pub fn rows(&self) -> [[i64; 2]; 2] {
        [[self.0[0], self.0[1]], [self.0[2], self.0[3]]]
    }

    pub fn trace(&self) -> i128 {
        self.0[0] as i128 + self.0[3] as i128
    }

    pub fn inverse(&self) -> Self {
        let [a, b, c, d] = self.0;
        Self([d, -b, -c, a])
    }

    pub fn is_central(&self) -> bool {
        *self == Self::IDENTITY || *self == Self::NEG_IDENTITY
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        let [a, b, c, d] = self.0.map(i128::from);
        let [e, f, g, h] = rhs.0.map(i128::from);
        Ok(Self([narrow(a * e + b * g)?, narrow(a * f + b * h)?, narrow(c * e + d * g)?, narrow(c * f + d * h)?]))
    }

    /// Projective action on slopes.
    pub fn apply(&self, x: Slope) -> Result<Slope> {
        let [a, b, c, d] = self.0.map(i128::from);
        let (p, q) = (x.p as i128, x.q as i128);
        Slope::new(narrow(a * p + b * q)?, narrow(c * p + d * q)?)
    }

    pub fn fixed_slope(&self) -> FixedSlope {
        fixed_slope(self)
    }
}

impl fmt::Display for UnimodularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

/// `D_c^n` as a matrix.
pub fn twist_matrix(c: Slope, n: i64) -> Result<UnimodularMatrix> {
    let (p, q, n) = (c.p as i128, c.q as i128, n as i128);
    Ok(UnimodularMatrix([narrow(1 + n * p * q)?, narrow(-n * p * p)?, narrow(n * q * q)?, narrow(1 - n * p * q)?]))
}

pub fn apply(m: &UnimodularMatrix, x: Slope) -> Result<Slope> {
    m.apply(x)
}

/// Matrix of `w` when generator `i` is `D_{curves[i]}^{exponents[i]}`.
///
/// Syllables compose left to right as functions: the rightmost syllable acts
/// first on a curve.
pub fn word_matrix(w: &Word, curves: &[Slope], exponents: &[u32]) -> Result<UnimodularMatrix> {
    if curves.len() != exponents.len() {
        return Err(Error::LengthMismatch { expected: curves.len(), found: exponents.len() });
    }
    let mut m = UnimodularMatrix::IDENTITY;
    for s in w.syllables() {
        let c = curves.get(s.generator).ok_or(Error::IndexOutOfRange { index: s.generator, h: curves.len() })?;
        let power = (exponents[s.generator] as i64).checked_mul(s.exponent).ok_or(Error::Overflow)?;
        m = m.checked_mul(&twist_matrix(*c, power)?)?;
    }
    Ok(m)
}

/// All canonical slopes with `max(|p|,|q|) <= height`, ordered by height,
/// then `q`, then `p`.
pub fn enumerate_slopes(height: u32) -> Result<Vec<Slope>> {
    if height == 0 {
        return Err(Error::InvalidParams("slope height bound must be at least 1".into()));
    }
    let h = height as i64;
    let mut out = Vec::new();
    for q in 0..=h {
        for p in -h..=h {
            if (q == 0 && p != 1) || gcd_i64(p, q) != 1 {
                continue;
            }
            out.push(Slope { p, q });
        }
    }
    out.sort_by_key(|s| (s.height(), s.q, s.p));
    Ok(out)
}

/// Slopes fixed by a matrix acting projectively.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FixedSlope {
    /// `±I`: every slope is fixed.
    All,
    /// No rational eigendirection (`|trace| != 2`).
    None,
    /// `|trace| = 2` and not central: a unique fixed slope.
    Exactly(Slope),
}

pub fn fixed_slope(m: &UnimodularMatrix) -> FixedSlope {
    if m.is_central() {
        return FixedSlope::All;
    }
    let tr = m.trace();
    if tr.abs() != 2 {
        return FixedSlope::None;
    }
    // Kernel of M - sign(tr) I, which has rank one.
    let s = tr.signum() as i64;
    let [a, b, c, d] = m.0;
    let (r1, r2) = if a - s != 0 || b != 0 { (a - s, b) } else { (c, d - s) };
    let g = gcd_i64(r1, r2);
    let slope = Slope::new(r2 / g, -r1 / g).expect("primitive kernel vector");
    debug_assert_eq!(m.apply(slope).ok(), Some(slope));
    FixedSlope::Exactly(slope)
}
