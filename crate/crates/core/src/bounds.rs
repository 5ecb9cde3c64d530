//! Exponent bounds that make the ping-pong regions work.
//!
//! Every calculator returns the exact rational bound together with the least
//! positive integer meeting it; an integral bound is returned as is, since all
//! conditions are of the form `n >= bound`.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::pingpong::PingPongParams;
use crate::rational::{int, is_positive, min_positive_integer_at_least, ratio, Rational};
use crate::system::CurveSystem;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExponentBound {
    pub bound: Rational,
    pub n: u64,
}

impl ExponentBound {
    fn of(bound: Rational) -> Self {
        Self { bound, n: min_positive_integer_at_least(&bound) }
    }
}

/// Least `(n_a, n_b)` with `m n_a >= 2/λ` and `m n_b >= 2λ`, the exponents
/// for which powers of `D_a` and `D_b` play ping-pong on the regions
/// `(x,a) < λ(x,b)` and its complement.
pub fn pair_region_exponents(m: u64, lambda: Rational) -> Result<(u64, u64)> {
    if m == 0 {
        return Err(Error::NotApplicable("the curves are disjoint".into()));
    }
    if !is_positive(&lambda) {
        return Err(Error::InvalidParams(format!("λ must be positive, got {lambda}")));
    }
    let m = int(m as i128);
    let na = min_positive_integer_at_least(&(int(2) / (lambda * m)));
    let nb = min_positive_integer_at_least(&(int(2) * lambda / m));
    Ok((na, nb))
}

/// Which term families of the five-family bound apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RatioMode {
    /// Regions carry their ratio conditions: all families whose target ratio
    /// bound is finite are included.
    Explicit,
    /// The ratio conditions are implied by the `μ` conditions (for instance
    /// with the λ of [`implied_ratio_lambda`] or three curves meeting pairwise
    /// once), so only the first two families are needed.
    Equivalent,
}

/// One of the five term families, with the indices it was evaluated at.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `2 / (μ_ij (a_i,a_j))`.
    Mu,
    /// `1/(μ_ik (a_i,a_k)) + λ_jik (a_j,a_k) / ((a_i,a_j)(a_i,a_k))`.
    MuRatio { k: usize },
    /// Ratio condition `(k, l)` of region `i` with `k, l` both outside `{i, j}`.
    Ratio { k: usize, l: usize },
    /// Ratio condition `(k, j)` of region `i`.
    RatioToSource { k: usize },
    /// Ratio condition `(j, l)` of region `i`.
    RatioFromSource { l: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Term {
    /// Generator whose powers act (`i`).
    pub target: usize,
    /// Region the curve starts in (`j`).
    pub source: usize,
    pub family: Family,
    pub value: Rational,
}

fn check_bound_inputs(system: &CurveSystem, params: &PingPongParams) -> Result<()> {
    if params.h() != system.h() {
        return Err(Error::LengthMismatch { expected: system.h(), found: params.h() });
    }
    if !system.off_diagonal_positive() {
        return Err(Error::NotApplicable("some pair of curves is disjoint".into()));
    }
    params.validate()
}

fn source_lambda(params: &PingPongParams, i: usize, j: usize, k: usize) -> Result<Rational> {
    params.lambda(i, j, k).ok_or_else(|| {
        Error::NotApplicable(format!(
            "λ_{}{}{} is infinite, so region {} gives no ratio control",
            i + 1,
            j + 1,
            k + 1,
            i + 1
        ))
    })
}

/// All terms `n` must dominate so that `D_{a_i}^{±n}` maps region `j` into region `i`.
pub fn region_bound_terms(
    i: usize,
    j: usize,
    system: &CurveSystem,
    params: &PingPongParams,
    mode: RatioMode,
) -> Result<Vec<Term>> {
    check_bound_inputs(system, params)?;
    let h = system.h();
    if i >= h || j >= h {
        return Err(Error::IndexOutOfRange { index: i.max(j), h });
    }
    if i == j {
        return Err(Error::InvalidParams("target and source regions must differ".into()));
    }
    let a = |x: usize, y: usize| int(system.inter(x, y) as i128);
    let mu = |x: usize, y: usize| params.mu(x, y);
    let one = Rational::one();
    let mut terms = Vec::new();
    let mut push = |family, value| terms.push(Term { target: i, source: j, family, value });

    push(Family::Mu, int(2) / (mu(i, j) * a(i, j)));
    let others = || (0..h).filter(move |&k| k != i && k != j);
    for k in others() {
        let l_jik = source_lambda(params, j, i, k)?;
        push(Family::MuRatio { k }, one / (mu(i, k) * a(i, k)) + l_jik * a(j, k) / (a(i, j) * a(i, k)));
    }
    if mode == RatioMode::Equivalent {
        return Ok(terms);
    }
    for k in others() {
        for l in others().filter(|&l| l != k) {
            if let Some(l_ikl) = params.lambda(i, k, l) {
                let l_jil = source_lambda(params, j, i, l)?;
                let l_jik = source_lambda(params, j, i, k)?;
                let v = l_jil / (l_ikl - one) * a(j, l) / (a(i, l) * a(j, i))
                    + l_ikl * l_jik / (l_ikl - one) * a(j, k) / (a(j, i) * a(i, k));
                push(Family::Ratio { k, l }, v);
            }
        }
    }
    for k in others() {
        if let Some(l_ikj) = params.lambda(i, k, j) {
            let l_jik = source_lambda(params, j, i, k)?;
            let v = one / ((l_ikj - one) * mu(i, j) * a(i, j))
                + l_ikj * l_jik / (l_ikj - one) * a(j, k) / (a(j, i) * a(i, k));
            push(Family::RatioToSource { k }, v);
        }
    }
    for l in others() {
        if let Some(l_ijl) = params.lambda(i, j, l) {
            let l_jil = source_lambda(params, j, i, l)?;
            let v =
                l_ijl / ((l_ijl - one) * mu(i, j) * a(i, j)) + l_jil / (l_ijl - one) * a(j, l) / (a(j, i) * a(i, l));
            push(Family::RatioFromSource { l }, v);
        }
    }
    Ok(terms)
}

fn max_of(terms: impl Iterator<Item = Rational>) -> Rational {
    terms.fold(Rational::zero(), |m, v| if v > m { v } else { m })
}

/// Bound on `n_i` so that `D_{a_i}^{±n_i}` maps every other region into region `i`.
pub fn region_min_exponent(
    i: usize,
    system: &CurveSystem,
    params: &PingPongParams,
    mode: RatioMode,
) -> Result<ExponentBound> {
    let mut values = Vec::new();
    for j in (0..system.h()).filter(|&j| j != i) {
        values.extend(region_bound_terms(i, j, system, params, mode)?.into_iter().map(|t| t.value));
    }
    Ok(ExponentBound::of(max_of(values.into_iter())))
}

/// [`region_min_exponent`] for every generator.
pub fn region_exponents(system: &CurveSystem, params: &PingPongParams, mode: RatioMode) -> Result<Vec<ExponentBound>> {
    (0..system.h()).map(|i| region_min_exponent(i, system, params, mode)).collect()
}

/// `λ_ijk = 2(a_i,a_j)(1 + (a_k,a_j)/(a_i,a_k))(μ_ij + 1)`: with these ratio
/// bounds the regions coincide with the regions defined by `μ` alone,
/// provided every pair of curves fills the surface.
pub fn implied_ratio_lambda(system: &CurveSystem, params: &PingPongParams) -> Result<PingPongParams> {
    check_bound_inputs(system, params)?;
    if !system.pairwise_filling() {
        return Err(Error::NotApplicable("the curves do not fill pairwise".into()));
    }
    let a = |x: usize, y: usize| int(system.inter(x, y) as i128);
    let mu = params.clone();
    params.clone().with_lambda(|i, j, k| {
        Some(int(2) * a(i, j) * (Rational::one() + a(k, j) / a(i, k)) * (mu.mu(i, j) + Rational::one()))
    })
}

/// Bound on `n` making `D_{a_i}^{±n}` strictly increase `||.||_A` on region `j`:
/// `(2/||a_i||_A)(μ_ji + sum_{k != i,j} λ_jik (a_j,a_k)/(a_j,a_i))`.
pub fn norm_growth_bound(i: usize, j: usize, system: &CurveSystem, params: &PingPongParams) -> Result<Rational> {
    check_bound_inputs(system, params)?;
    let h = system.h();
    if i >= h || j >= h {
        return Err(Error::IndexOutOfRange { index: i.max(j), h });
    }
    if i == j {
        return Err(Error::InvalidParams("target and source regions must differ".into()));
    }
    let a = |x: usize, y: usize| int(system.inter(x, y) as i128);
    let mut sum = params.mu(j, i);
    for k in (0..h).filter(|&k| k != i && k != j) {
        sum += source_lambda(params, j, i, k)? * a(j, k) / a(j, i);
    }
    Ok(int(2) / int(system.curve_norm(i) as i128) * sum)
}

/// [`norm_growth_bound`] maximised over the source region.
pub fn norm_growth_min_exponent(i: usize, system: &CurveSystem, params: &PingPongParams) -> Result<ExponentBound> {
    let mut values = Vec::new();
    for j in (0..system.h()).filter(|&j| j != i) {
        values.push(norm_growth_bound(i, j, system, params)?);
    }
    Ok(ExponentBound::of(max_of(values.into_iter())))
}

fn require_triple_stats(system: &CurveSystem) -> Result<crate::system::Stats> {
    if system.h() < 3 {
        return Err(Error::NotApplicable("needs at least three curves".into()));
    }
    system.stats()
}

/// `n >= 6 M0`, the uniform exponent making all twists free.
pub fn uniform_free_power(system: &CurveSystem) -> Result<ExponentBound> {
    let stats = require_triple_stats(system)?;
    let m0 = stats.max_ratio.expect("h >= 3");
    Ok(ExponentBound::of(int(6) * m0))
}

/// `n >= max(6M/m, 4M/m + 5)`, the uniform exponent making the group
/// relatively pseudo-Anosov. Needs pairwise filling curves with `m >= 2`.
pub fn uniform_relpa_power(system: &CurveSystem) -> Result<ExponentBound> {
    if !system.pairwise_filling() {
        return Err(Error::NotApplicable("the curves do not fill pairwise".into()));
    }
    let stats = system.stats()?;
    if stats.min < 2 {
        return Err(Error::NotApplicable(format!(
            "minimal intersection number is {}, at least 2 is required",
            stats.min
        )));
    }
    let r = ratio(stats.max as i128, stats.min as i128);
    let a = int(6) * r;
    let b = int(4) * r + int(5);
    Ok(ExponentBound::of(if a > b { a } else { b }))
}
