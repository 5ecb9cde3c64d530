//! Ping-pong regions `N_{a_i,λ,μ}` and bounded verification of the
//! ping-pong criteria over enumerated torus slopes.
//!
//! For a curve `x` with profile `x_k = (x, a_k)`, region `i` is
//!
//! ```text
//! x_i < μ_ij x_j                                 for all j != i
//! x_k / x_j < λ_ijk (a_i,a_k) / (a_i,a_j)        for all distinct j, k != i
//! ```
//!
//! An infinite `λ_ijk` drops its ratio condition. All comparisons are exact.
//!
//! Verification is evidence, not proof: every enumerated slope up to a height
//! bound and every twist power up to a power bound is checked.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use crate::rational::{is_positive, Rational};
use crate::system::{check_exponents, CurveSystem};
use crate::torus::{enumerate_slopes, twist_matrix, Slope, UnimodularMatrix};
use crate::word::{Syllable, Word};
use crate::{Error, Result};

/// Region parameters: `μ` (an `h x h` matrix with `μ_ji = 1/μ_ij`) and `λ`
/// (an `h x h x h` tensor, `None` meaning infinity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PingPongParams {
    h: usize,
    mu: Vec<Rational>,
    lambda: Vec<Option<Rational>>,
}

impl PingPongParams {
    /// All `μ_ij = 1`, all `λ` infinite.
    pub fn unit(h: usize) -> Self {
        Self { h, mu: vec![Rational::one(); h * h], lambda: vec![None; h * h * h] }
    }

    /// Starts from [`unit`](Self::unit) and sets `μ_ij = v`, `μ_ji = 1/v` for
    /// each listed `(i, j, v)`.
    pub fn with_mu(h: usize, entries: &[(usize, usize, Rational)]) -> Result<Self> {
        let mut p = Self::unit(h);
        for &(i, j, v) in entries {
            if i >= h || j >= h {
                return Err(Error::IndexOutOfRange { index: i.max(j), h });
            }
            if i == j {
                return Err(Error::InvalidParams(format!("μ_{i}{i} is not a parameter")));
            }
            if !is_positive(&v) {
                return Err(Error::InvalidParams(format!("μ must be positive, got {v}")));
            }
            p.mu[i * h + j] = v;
            p.mu[j * h + i] = v.recip();
        }
        Ok(p)
    }

    /// Full constructor; checks reciprocity of `μ` and `λ > 1`.
    pub fn new(mu: Vec<Vec<Rational>>, lambda: Vec<Option<Rational>>) -> Result<Self> {
        let h = mu.len();
        if mu.iter().any(|r| r.len() != h) {
            return Err(Error::InvalidParams("μ must be square".into()));
        }
        if lambda.len() != h * h * h {
            return Err(Error::LengthMismatch { expected: h * h * h, found: lambda.len() });
        }
        let p = Self { h, mu: mu.into_iter().flatten().collect(), lambda };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let h = self.h;
        for i in 0..h {
            for j in (0..h).filter(|&j| j != i) {
                let m = self.mu(i, j);
                if !is_positive(&m) {
                    return Err(Error::InvalidParams(format!("μ_{i}{j} = {m} is not positive")));
                }
                if m * self.mu(j, i) != Rational::one() {
                    return Err(Error::InvalidParams(format!("μ_{j}{i} is not 1/μ_{i}{j}")));
                }
                for k in (0..h).filter(|&k| k != i && k != j) {
                    if let Some(l) = self.lambda(i, j, k) {
                        if l <= Rational::one() {
                            return Err(Error::InvalidParams(format!("λ_{i}{j}{k} = {l} must exceed 1")));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn mu(&self, i: usize, j: usize) -> Rational {
        self.mu[i * self.h + j]
    }

    pub fn lambda(&self, i: usize, j: usize, k: usize) -> Option<Rational> {
        self.lambda[(i * self.h + j) * self.h + k]
    }

    /// Replaces `λ` by `f(i, j, k)` on distinct triples.
    pub fn with_lambda<F>(mut self, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize, usize) -> Option<Rational>,
    {
        let h = self.h;
        for i in 0..h {
            for j in 0..h {
                for k in 0..h {
                    let v = if i != j && j != k && i != k { f(i, j, k) } else { None };
                    self.lambda[(i * h + j) * h + k] = v;
                }
            }
        }
        self.validate()?;
        Ok(self)
    }

    pub fn with_uniform_lambda(self, value: Rational) -> Result<Self> {
        self.with_lambda(|_, _, _| Some(value))
    }

    pub fn with_infinite_lambda(self) -> Self {
        self.with_lambda(|_, _, _| None).expect("μ already validated")
    }

    /// `λ_ijk = 1 + μ_ij`, the ratio bound implied by the μ conditions for
    /// three curves meeting pairwise once on the torus.
    pub fn with_triangle_lambda(self) -> Result<Self> {
        let mu = self.clone();
        self.with_lambda(|i, j, _| Some(Rational::one() + mu.mu(i, j)))
    }

    /// `μ_ji + μ_ki >= 1` for every `i` and distinct `j, k != i`.
    pub fn triangle_condition_holds(&self) -> bool {
        let h = self.h;
        (0..h).all(|i| {
            (0..h)
                .filter(|&j| j != i)
                .all(|j| (0..h).filter(|&k| k != i && k != j).all(|k| self.mu(j, i) + self.mu(k, i) >= Rational::one()))
        })
    }
}

fn check_shapes(system: &CurveSystem, params: &PingPongParams) -> Result<()> {
    if params.h() != system.h() {
        return Err(Error::LengthMismatch { expected: system.h(), found: params.h() });
    }
    Ok(())
}

// x_i * den(μ_ij) < num(μ_ij) * x_j, and the ratio conditions, all in i128.
fn in_region(profile: &[u64], i: usize, system: &CurveSystem, params: &PingPongParams) -> bool {
    let h = system.h();
    let x = |k: usize| profile[k] as i128;
    for j in (0..h).filter(|&j| j != i) {
        let m = params.mu(i, j);
        if x(i) * m.denom() >= *m.numer() * x(j) {
            return false;
        }
    }
    for j in (0..h).filter(|&j| j != i) {
        for k in (0..h).filter(|&k| k != i && k != j) {
            if let Some(l) = params.lambda(i, j, k) {
                let lhs = x(k) * system.inter(i, j) as i128 * l.denom();
                let rhs = *l.numer() * system.inter(i, k) as i128 * x(j);
                if lhs >= rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether the curve with the given intersection profile lies in region `i`.
pub fn region_membership(profile: &[u64], i: usize, system: &CurveSystem, params: &PingPongParams) -> Result<bool> {
    check_shapes(system, params)?;
    if profile.len() != system.h() {
        return Err(Error::LengthMismatch { expected: system.h(), found: profile.len() });
    }
    if i >= system.h() {
        return Err(Error::IndexOutOfRange { index: i, h: system.h() });
    }
    if profile.iter().all(|&v| v == 0) {
        return Err(Error::OutsideDomain);
    }
    Ok(in_region(profile, i, system, params))
}

/// [`region_membership`] for a torus slope.
pub fn slope_in_region(x: Slope, i: usize, system: &CurveSystem, params: &PingPongParams) -> Result<bool> {
    region_membership(&system.profile(x)?, i, system, params)
}

/// The region containing the profile, if any. Regions are disjoint, so the
/// answer is unique.
pub fn region_of(profile: &[u64], system: &CurveSystem, params: &PingPongParams) -> Option<usize> {
    if profile.iter().all(|&v| v == 0) {
        return None;
    }
    (0..system.h()).find(|&i| in_region(profile, i, system, params))
}

/// Enumerated slopes of height `<= height` with positive norm lying in no region.
pub fn exceptional_curves(system: &CurveSystem, params: &PingPongParams, height: u32) -> Result<Vec<Slope>> {
    check_shapes(system, params)?;
    let mut out = Vec::new();
    for x in enumerate_slopes(height)? {
        let profile = system.profile(x)?;
        if profile.iter().any(|&v| v > 0) && region_of(&profile, system, params).is_none() {
            out.push(x);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Plain ping-pong: powers of each generator map the other regions into its own.
    PingPong,
    /// Ping-pong plus strict norm growth and full coverage of the curve set.
    NormPingPong,
    /// Norm ping-pong on covered curves plus absorption of the uncovered ones
    /// after `n0` syllables.
    WeakPingPong,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub height: u32,
    pub power_bound: u32,
    pub n0: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { height: 20, power_bound: 5, n0: 1 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `D_{a_generator}^{step * n}` maps `source` (in `source_region`) outside
    /// the generator's region.
    Escape {
        source: Slope,
        source_region: usize,
        generator: usize,
        step: i64,
        image: Slope,
        image_region: Option<usize>,
    },
    /// The move does not strictly increase `||.||_A`.
    NormLoss { source: Slope, generator: usize, step: i64, before: u64, after: u64 },
    /// No suffix `w_j` of `word` sends `curve` into the region of its leading generator.
    NotAbsorbed { curve: Slope, word: Word },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub mode: Mode,
    pub height: u32,
    pub power_bound: u32,
    pub n0: Option<u32>,
    /// Covered enumerated curves whose moves were checked.
    pub points: u64,
    /// Twist moves applied.
    pub moves: u64,
    /// Enumerated curves of positive norm outside every region.
    pub uncovered: Vec<Slope>,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && (self.mode != Mode::NormPingPong || self.uncovered.is_empty())
    }

    pub fn escapes(&self) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(|v| matches!(v, Violation::Escape { .. }))
    }

    pub fn norm_losses(&self) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(|v| matches!(v, Violation::NormLoss { .. }))
    }

    pub fn unabsorbed(&self) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(|v| matches!(v, Violation::NotAbsorbed { .. }))
    }
}

struct Moves {
    // moves[g][t] = D_{a_g}^{step(t) * n_g}, steps ordered 1, -1, 2, -2, ...
    matrices: Vec<Vec<(i64, UnimodularMatrix)>>,
}

impl Moves {
    fn new(slopes: &[Slope], exponents: &[u32], power_bound: u32) -> Result<Self> {
        let mut matrices = Vec::with_capacity(slopes.len());
        for (g, a) in slopes.iter().enumerate() {
            let mut row = Vec::new();
            for t in 1..=power_bound as i64 {
                for step in [t, -t] {
                    row.push((step, twist_matrix(*a, step * exponents[g] as i64)?));
                }
            }
            matrices.push(row);
        }
        Ok(Self { matrices })
    }
}

/// Runs the bounded check for `mode` on a torus-realized system.
pub fn verify(
    system: &CurveSystem,
    exponents: &[u32],
    params: &PingPongParams,
    mode: Mode,
    config: &VerifyConfig,
) -> Result<VerificationReport> {
    check_shapes(system, params)?;
    check_exponents(system.h(), exponents)?;
    if config.power_bound == 0 {
        return Err(Error::InvalidParams("power bound must be at least 1".into()));
    }
    if mode == Mode::WeakPingPong && config.n0 == 0 {
        return Err(Error::InvalidParams("n0 must be at least 1".into()));
    }
    let slopes = system.require_slopes()?;
    let h = system.h();
    let moves = Moves::new(slopes, exponents, config.power_bound)?;
    let check_norm = mode != Mode::PingPong;

    let mut report = VerificationReport {
        mode,
        height: config.height,
        power_bound: config.power_bound,
        n0: (mode == Mode::WeakPingPong).then_some(config.n0),
        points: 0,
        moves: 0,
        uncovered: Vec::new(),
        violations: Vec::new(),
    };

    for x in enumerate_slopes(config.height)? {
        let profile = system.profile(x)?;
        let before: u64 = profile.iter().sum();
        if before == 0 {
            continue;
        }
        let Some(j) = region_of(&profile, system, params) else {
            report.uncovered.push(x);
            continue;
        };
        report.points += 1;
        for i in (0..h).filter(|&i| i != j) {
            for &(step, m) in &moves.matrices[i] {
                report.moves += 1;
                let y = m.apply(x)?;
                let py = system.profile(y)?;
                let image_region = region_of(&py, system, params);
                if image_region != Some(i) {
                    report.violations.push(Violation::Escape {
                        source: x,
                        source_region: j,
                        generator: i,
                        step,
                        image: y,
                        image_region,
                    });
                }
                if check_norm {
                    let after: u64 = py.iter().sum();
                    if after <= before {
                        report.violations.push(Violation::NormLoss { source: x, generator: i, step, before, after });
                    }
                }
            }
        }
    }

    if mode == Mode::WeakPingPong {
        for &x in &report.uncovered.clone() {
            let mut suffix = Vec::new();
            absorb(x, x, None, config.n0, &mut suffix, system, params, &moves, &mut report)?;
        }
    }
    Ok(report)
}

// Builds words right to left. Once a suffix lands in the region of its
// leading generator, every extension of it is absorbed and the branch stops.
#[allow(clippy::too_many_arguments)]
fn absorb(
    origin: Slope,
    current: Slope,
    last: Option<usize>,
    remaining: u32,
    suffix: &mut Vec<Syllable>,
    system: &CurveSystem,
    params: &PingPongParams,
    moves: &Moves,
    report: &mut VerificationReport,
) -> Result<()> {
    for g in (0..system.h()).filter(|&g| Some(g) != last) {
        for &(step, m) in &moves.matrices[g] {
            let y = m.apply(current)?;
            let py = system.profile(y)?;
            if region_of(&py, system, params) == Some(g) {
                continue;
            }
            suffix.push(Syllable::new(g, step));
            if remaining == 1 {
                let word = Word::new(suffix.iter().rev().copied());
                report.violations.push(Violation::NotAbsorbed { curve: origin, word });
            } else {
                absorb(origin, y, Some(g), remaining - 1, suffix, system, params, moves, report)?;
            }
            suffix.pop();
        }
    }
    Ok(())
}

pub fn verify_ppl(
    system: &CurveSystem,
    exponents: &[u32],
    params: &PingPongParams,
    height: u32,
    power_bound: u32,
) -> Result<VerificationReport> {
    let config = VerifyConfig { height, power_bound, n0: 1 };
    verify(system, exponents, params, Mode::PingPong, &config)
}

pub fn verify_ppwtc(
    system: &CurveSystem,
    exponents: &[u32],
    params: &PingPongParams,
    height: u32,
    power_bound: u32,
) -> Result<VerificationReport> {
    let config = VerifyConfig { height, power_bound, n0: 1 };
    verify(system, exponents, params, Mode::NormPingPong, &config)
}

pub fn verify_wpp(
    system: &CurveSystem,
    exponents: &[u32],
    params: &PingPongParams,
    config: &VerifyConfig,
) -> Result<VerificationReport> {
    verify(system, exponents, params, Mode::WeakPingPong, config)
}
