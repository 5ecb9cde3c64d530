//! Exact rationals used for all bounds and region parameters.

use core::fmt;

use num_integer::Integer;
use num_traits::{One, Signed};

/// Exact rational number. Entries stay small in practice (intersection
/// numbers and user-supplied parameters), `i128` leaves ample headroom.
pub type Rational = num_rational::Ratio<i128>;

pub fn int(n: i128) -> Rational {
    Rational::from_integer(n)
}

pub fn ratio(num: i128, den: i128) -> Rational {
    Rational::new(num, den)
}

/// Smallest positive integer `n` with `n >= bound`.
pub fn min_positive_integer_at_least(bound: &Rational) -> u64 {
    let c = bound.ceil().to_integer();
    if c < 1 {
        1
    } else {
        c as u64
    }
}

/// Parses `"p/q"`, `"p"` or a short decimal such as `"1.5"`.
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: i128 = n.trim().parse().ok()?;
        let d: i128 = d.trim().parse().ok()?;
        if d == 0 {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || frac.len() > 18 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = whole.starts_with('-');
        let w: i128 = if whole.is_empty() || whole == "-" { 0 } else { whole.parse().ok()? };
        let den = 10i128.pow(frac.len() as u32);
        let f: i128 = frac.parse().ok()?;
        let mag = w.abs() * den + f;
        return Some(Rational::new(if negative { -mag } else { mag }, den));
    }
    s.parse::<i128>().ok().map(Rational::from_integer)
}

/// Displays a rational as `"p/q"`, or `"p"` when it is an integer.
pub struct Display<'a>(pub &'a Rational);

impl fmt::Display for Display<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

pub(crate) fn is_positive(r: &Rational) -> bool {
    r.is_positive()
}

pub(crate) fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}
