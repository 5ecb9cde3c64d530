//! Closed-form classifiers. Each returns a [`Verdict`] carrying either the
//! exactly checked hypotheses of the result it applies or an explicit witness
//! evaluated on a torus realization.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::bounds::{region_exponents, uniform_free_power, uniform_relpa_power, ExponentBound, RatioMode};
use crate::pingpong::{PingPongParams, VerificationReport};
use crate::rational::{int, ratio, Rational};
use crate::system::{check_exponents, CurveSystem};
use crate::torus::{fixed_slope, word_matrix, Slope};
use crate::verdict::{Certificate, Check, Comparison, Question, Status, TheoremTag, Verdict, Witness};
use crate::word::Word;
use crate::{Error, Result};

fn slope(p: i64, q: i64) -> Slope {
    Slope::new(p, q).expect("primitive")
}

/// Two torus curves meeting `m` times: `(1,0)` with `(0,1)` when `m = 1`,
/// `(1,m)` otherwise (`(1,0)` twice when `m = 0`).
pub fn standard_pair(m: u64) -> Result<Vec<Slope>> {
    let m = i64::try_from(m).map_err(|_| Error::Overflow)?;
    Ok(match m {
        0 => vec![slope(1, 0), slope(1, 0)],
        1 => vec![slope(1, 0), slope(0, 1)],
        _ => vec![slope(1, 0), slope(1, m)],
    })
}

/// `(1,0)`, `(0,1)`, `(1,1)`: three torus curves meeting pairwise once.
pub fn torus_triangle() -> Vec<Slope> {
    vec![slope(1, 0), slope(0, 1), slope(1, 1)]
}

fn check_pair_exponents(n1: u32, n2: u32) -> Result<()> {
    check_exponents(2, &[n1, n2])
}

fn small_pair(n1: u32, n2: u32) -> Option<u32> {
    match (n1.min(n2), n1.max(n2)) {
        (1, n) if n <= 3 => Some(n),
        _ => None,
    }
}

/// A relation between `D_a` and `D_b^n` for curves meeting once:
/// `aba = bab` for `n = 1`, `(ab)^4 a = a (ab)^4` for `n = 2` and
/// `(ab)^3 a = a (ab)^3` for `n = 3`, with `b` standing for `D_b^n`.
pub fn nonfree_witness_2(n: u32) -> Result<(Word, Word)> {
    let a = Word::generator(0);
    let b = Word::generator(1);
    let ab = &a * &b;
    match n {
        1 => Ok((&ab * &a, &(&b * &a) * &b)),
        2 => Ok((&ab.pow(4) * &a, &a * &ab.pow(4))),
        3 => Ok((&ab.pow(3) * &a, &a * &ab.pow(3))),
        _ => Err(Error::InvalidParams(format!("no relation witness for exponent {n}"))),
    }
}

fn swap_if(w: Word, swap: bool) -> Word {
    if swap {
        w.relabel(&[1, 0], 1)
    } else {
        w
    }
}

/// Freeness of `<D_a^{n1}, D_b^{n2}>` for curves meeting `m` times.
pub fn classify_free_2(m: u64, n1: u32, n2: u32) -> Result<Verdict> {
    check_pair_exponents(n1, n2)?;
    let curves = standard_pair(m)?;
    let exps = vec![n1, n2];
    let m_check = |rel, rhs| Check::new("(a,b)", int(m as i128), rel, int(rhs));
    if m == 0 {
        let w = Witness::Relation { lhs: "a b".parse()?, rhs: "b a".parse()? };
        return Ok(Verdict::new(Question::Freeness, Status::No, Certificate::Witness(w))
            .realized(curves, exps)
            .with_note("disjoint curves give commuting twists"));
    }
    if let (1, Some(n)) = (m, small_pair(n1, n2)) {
        let (lhs, rhs) = nonfree_witness_2(n)?;
        let swap = n1 > n2;
        let w = Witness::Relation { lhs: swap_if(lhs, swap), rhs: swap_if(rhs, swap) };
        return Ok(Verdict::new(Question::Freeness, Status::No, Certificate::Witness(w)).realized(curves, exps));
    }
    let checks = if m >= 2 {
        vec![m_check(Comparison::Ge, 2)]
    } else {
        vec![m_check(Comparison::Eq, 1), Check::new("n1 * n2", int(n1 as i128 * n2 as i128), Comparison::Ge, int(4))]
    };
    Ok(Verdict::new(
        Question::Freeness,
        Status::Yes,
        Certificate::Theorem { theorem: TheoremTag::PairFreeness, parameters: pair_params(m, n1, n2), checks },
    )
    .realized(curves, exps))
}

fn pair_params(m: u64, n1: u32, n2: u32) -> Vec<(String, Rational)> {
    vec![("m".into(), int(m as i128)), ("n1".into(), int(n1 as i128)), ("n2".into(), int(n2 as i128))]
}

fn non_anosov(word: Word, curves: &[Slope], exponents: &[u32]) -> Result<Witness> {
    let fixed = fixed_slope(&word_matrix(&word, curves, exponents)?);
    Ok(Witness::NonAnosov { word, fixed })
}

/// Whether `<D_a^{n1}, D_b^{n2}>` is relatively pseudo-Anosov for curves
/// meeting `m >= 1` times.
///
/// With `m = 1` and exponents `{1,4}` the answer is no: `D_b^4 D_a` has trace
/// `-2` and fixes the slope `(1,2)`.
pub fn classify_relpa_2(m: u64, n1: u32, n2: u32) -> Result<Verdict> {
    check_pair_exponents(n1, n2)?;
    if m == 0 {
        return Err(Error::NotApplicable("disjoint curves are outside the pair classification".into()));
    }
    let curves = standard_pair(m)?;
    let exps = vec![n1, n2];
    let ba: Word = "b a".parse()?;
    let (lo, hi) = (n1.min(n2), n1.max(n2));
    let witness = match (m, lo, hi) {
        (1, 1, 1..=3) => Some((ba, "the product has finite order, so a power of it commutes with both twists")),
        (1, 2, 2) => Some((ba, "reducible product of the squares")),
        (1, 1, 4) => Some((ba, "trace of the product is -2")),
        (2, 1, 1) => Some((ba, "the product fixes the slope (1,1)")),
        _ => None,
    };
    if let Some((word, note)) = witness {
        let w = non_anosov(word, &curves, &exps)?;
        return Ok(Verdict::new(Question::RelativePseudoAnosov, Status::No, Certificate::Witness(w))
            .realized(curves, exps)
            .with_note(note));
    }
    let m_check = |rel, rhs| Check::new("(a,b)", int(m as i128), rel, int(rhs));
    let checks = match m {
        1 => vec![
            m_check(Comparison::Eq, 1),
            Check::new("n1 * n2", int(n1 as i128 * n2 as i128), Comparison::Ge, int(5)),
        ],
        2 => vec![
            m_check(Comparison::Eq, 2),
            Check::new("n1 + n2", int(n1 as i128 + n2 as i128), Comparison::Ge, int(3)),
        ],
        _ => vec![m_check(Comparison::Ge, 3)],
    };
    Ok(Verdict::new(
        Question::RelativePseudoAnosov,
        Status::Yes,
        Certificate::Theorem { theorem: TheoremTag::PairRelativePa, parameters: pair_params(m, n1, n2), checks },
    )
    .realized(curves, exps))
}

fn require_triples(system: &CurveSystem) -> Result<()> {
    if system.h() < 3 {
        return Err(Error::NotApplicable("needs at least three curves".into()));
    }
    if !system.off_diagonal_positive() {
        return Err(Error::NotApplicable("some pair of curves is disjoint".into()));
    }
    Ok(())
}

fn ordered_triples(h: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..h)
        .flat_map(move |i| (0..h).flat_map(move |j| (0..h).map(move |k| (i, j, k))))
        .filter(|&(i, j, k)| i != j && j != k && i != k)
}

fn realize_uniform(v: Verdict, system: &CurveSystem, n: u64) -> Result<Verdict> {
    Ok(match system.torus_slopes() {
        Some(s) => {
            let n = u32::try_from(n).map_err(|_| Error::Overflow)?;
            v.realized(s.to_vec(), vec![n; s.len()])
        }
        None => v,
    })
}

/// Freeness of the twists themselves (all exponents 1) when every ratio
/// `(a_i,a_k) / ((a_i,a_j)(a_j,a_k))` is at most `1/6`. Also reports the
/// simpler sufficient condition `M <= m^2/6`.
pub fn spread_ratio_certificate(system: &CurveSystem) -> Result<Verdict> {
    require_triples(system)?;
    let stats = system.stats()?;
    let a = |x: usize, y: usize| system.inter(x, y) as i128;
    let mut checks: Vec<Check> = ordered_triples(system.h())
        .map(|(i, j, k)| {
            Check::new(
                format!("(a{0},a{2}) / ((a{0},a{1})(a{1},a{2}))", i + 1, j + 1, k + 1),
                ratio(a(i, k), a(i, j) * a(j, k)),
                Comparison::Le,
                ratio(1, 6),
            )
        })
        .collect();
    let status = if checks.iter().all(|c| c.holds) { Status::Yes } else { Status::Unknown };
    checks.push(Check::new(
        "M vs m^2/6",
        int(stats.max as i128),
        Comparison::Le,
        ratio(stats.min as i128 * stats.min as i128, 6),
    ));
    let parameters = vec![
        ("m".into(), int(stats.min as i128)),
        ("M".into(), int(stats.max as i128)),
        ("M0".into(), stats.max_ratio.unwrap_or_else(Rational::zero)),
        ("n".into(), Rational::one()),
    ];
    let v = Verdict::new(
        Question::Freeness,
        status,
        Certificate::Theorem { theorem: TheoremTag::SpreadRatio, parameters, checks },
    );
    realize_uniform(v, system, 1)
}

/// Freeness for the uniform exponent `n = ceil(6 M0)` (and every larger one).
pub fn uniform_free_certificate(system: &CurveSystem) -> Result<(ExponentBound, Verdict)> {
    require_triples(system)?;
    let b = uniform_free_power(system)?;
    let m0 = system.stats()?.max_ratio.expect("h >= 3");
    let parameters = vec![("M0".into(), m0), ("n".into(), int(b.n as i128))];
    let checks = vec![Check::new("n vs 6 M0", int(b.n as i128), Comparison::Ge, b.bound)];
    let v = Verdict::new(
        Question::Freeness,
        Status::Yes,
        Certificate::Theorem { theorem: TheoremTag::UniformFreePower, parameters, checks },
    );
    Ok((b, realize_uniform(v, system, b.n)?))
}

/// Relative pseudo-Anosov status for the uniform exponent
/// `n = ceil(max(6M/m, 4M/m + 5))`; needs pairwise filling and `m >= 2`.
pub fn uniform_relpa_certificate(system: &CurveSystem) -> Result<(ExponentBound, Verdict)> {
    let b = uniform_relpa_power(system)?;
    let stats = system.stats()?;
    let r = ratio(stats.max as i128, stats.min as i128);
    let n = int(b.n as i128);
    let parameters = vec![("m".into(), int(stats.min as i128)), ("M".into(), int(stats.max as i128)), ("n".into(), n)];
    let checks = vec![
        Check::new("m", int(stats.min as i128), Comparison::Ge, int(2)),
        Check::new("n vs 6M/m", n, Comparison::Ge, int(6) * r),
        Check::new("n vs 4M/m + 5", n, Comparison::Ge, int(4) * r + int(5)),
    ];
    let v = Verdict::new(
        Question::RelativePseudoAnosov,
        Status::Yes,
        Certificate::Theorem { theorem: TheoremTag::UniformRelativePaPower, parameters, checks },
    );
    Ok((b, realize_uniform(v, system, b.n)?))
}

fn mu_parameters(params: &PingPongParams) -> Vec<(String, Rational)> {
    let h = params.h();
    let mut out = Vec::new();
    for i in 0..h {
        for j in (0..h).filter(|&j| j != i) {
            out.push((format!("mu{}{}", i + 1, j + 1), params.mu(i, j)));
        }
    }
    out
}

fn exponent_checks(bounds: &[ExponentBound], exponents: &[u32]) -> Vec<Check> {
    bounds
        .iter()
        .zip(exponents)
        .enumerate()
        .map(|(i, (b, &n))| Check::new(format!("n{}", i + 1), int(n as i128), Comparison::Ge, b.bound))
        .collect()
}

/// Freeness from the ping-pong regions for the given parameters: yes when
/// every exponent meets its five-family bound, unknown otherwise.
///
/// `RatioMode::Equivalent` is only sound when the regions with and without
/// ratio conditions agree; the caller is responsible for that.
pub fn pingpong_certificate(
    system: &CurveSystem,
    exponents: &[u32],
    params: &PingPongParams,
    mode: RatioMode,
) -> Result<Verdict> {
    check_exponents(system.h(), exponents)?;
    let bounds = region_exponents(system, params, mode)?;
    let checks = exponent_checks(&bounds, exponents);
    let status = if checks.iter().all(|c| c.holds) { Status::Yes } else { Status::Unknown };
    let v = Verdict::new(
        Question::Freeness,
        status,
        Certificate::Theorem { theorem: TheoremTag::PingPongExponents, parameters: mu_parameters(params), checks },
    );
    Ok(match system.torus_slopes() {
        Some(s) => v.realized(s.to_vec(), exponents.to_vec()),
        None => v,
    })
}

/// Turns a bounded verification report into a verdict: yes if it passed,
/// unknown otherwise.
pub fn bounded_verdict(
    question: Question,
    report: VerificationReport,
    system: &CurveSystem,
    exponents: &[u32],
) -> Verdict {
    let status = if report.passed() { Status::Yes } else { Status::Unknown };
    let v = Verdict::new(question, status, Certificate::Bounded(report))
        .with_note("bounded evidence over enumerated slopes and twist powers, not a proof");
    match system.torus_slopes() {
        Some(s) => v.realized(s.to_vec(), exponents.to_vec()),
        None => v,
    }
}

/// The three `μ` families `(μ21, μ31, μ32)` searched for torus triples.
pub fn triangle_mu_families() -> [[Rational; 3]; 3] {
    [[int(1), int(1), int(1)], [ratio(1, 2), ratio(1, 2), int(1)], [ratio(2, 3), ratio(1, 3), ratio(1, 2)]]
}

const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn is_odd(p: &[usize; 3]) -> bool {
    let inversions = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
    inversions % 2 == 1
}

fn check_triple(n: [u32; 3]) -> Result<()> {
    check_exponents(3, &n)
}

fn reciprocal_sum(n: [u32; 3]) -> Rational {
    n.iter().map(|&x| ratio(1, x as i128)).sum()
}

/// Family `family` placed so that canonical curve `c` is curve `perm[c]`.
fn triangle_params(family: &[Rational; 3], perm: &[usize; 3]) -> Result<PingPongParams> {
    let [m21, m31, m32] = *family;
    PingPongParams::with_mu(3, &[(perm[1], perm[0], m21), (perm[2], perm[0], m31), (perm[2], perm[1], m32)])?
        .with_triangle_lambda()
}

fn lift_pair_relation(n: [u32; 3]) -> Option<(usize, usize, Witness)> {
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if small_pair(n[i], n[j]).is_some() {
            let v = classify_free_2(1, n[i], n[j]).ok()?;
            if let Certificate::Witness(Witness::Relation { lhs, rhs }) = v.certificate {
                let map = [i, j];
                return Some((i, j, Witness::Relation { lhs: lhs.relabel(&map, 1), rhs: rhs.relabel(&map, 1) }));
            }
        }
    }
    None
}

/// Freeness of `<D_{a_1}^{n_1}, D_{a_2}^{n_2}, D_{a_3}^{n_3}>` for three
/// torus curves meeting pairwise once.
pub fn torus_triple_certificate(n1: u32, n2: u32, n3: u32) -> Result<Verdict> {
    let n = [n1, n2, n3];
    check_triple(n)?;
    let system = CurveSystem::from_slopes(torus_triangle(), false)?;
    let sum = reciprocal_sum(n);
    if sum <= Rational::one() {
        for family in triangle_mu_families() {
            for perm in PERMUTATIONS {
                let params = triangle_params(&family, &perm)?;
                let bounds = region_exponents(&system, &params, RatioMode::Equivalent)?;
                if bounds.iter().zip(n).all(|(b, x)| b.n <= x as u64) {
                    let mut checks = vec![Check::new("1/n1 + 1/n2 + 1/n3", sum, Comparison::Le, Rational::one())];
                    checks.push(Check::new(
                        "μ_ji + μ_ki vs 1",
                        Rational::one(),
                        Comparison::Le,
                        if params.triangle_condition_holds() { Rational::one() } else { Rational::zero() },
                    ));
                    checks.extend(exponent_checks(&bounds, &n));
                    return Ok(Verdict::new(
                        Question::Freeness,
                        Status::Yes,
                        Certificate::Theorem {
                            theorem: TheoremTag::TorusTripleFreeness,
                            parameters: mu_parameters(&params),
                            checks,
                        },
                    )
                    .realized(torus_triangle(), n.to_vec()));
                }
            }
        }
    }
    if let Some((i, j, w)) = lift_pair_relation(n) {
        return Ok(Verdict::new(Question::Freeness, Status::No, Certificate::Witness(w))
            .realized(torus_triangle(), n.to_vec())
            .with_note(format!("relation between generators {} and {}", i + 1, j + 1)));
    }
    Ok(unknown_triple(Question::Freeness, TheoremTag::TorusTripleFreeness, n, sum, Comparison::Le))
}

fn unknown_triple(question: Question, tag: TheoremTag, n: [u32; 3], sum: Rational, rel: Comparison) -> Verdict {
    let checks = vec![Check::new("1/n1 + 1/n2 + 1/n3", sum, rel, Rational::one())];
    let parameters = n.iter().enumerate().map(|(i, &x)| (format!("n{}", i + 1), int(x as i128))).collect();
    Verdict::new(question, Status::Unknown, Certificate::Theorem { theorem: tag, parameters, checks })
        .realized(torus_triangle(), n.to_vec())
}

/// Canonical exponents `(2, x, y)` of the non-Anosov families; in each the
/// word `b a c` (one step of every generator) is parabolic.
fn non_anosov_pattern(n: [u32; 3]) -> Option<[u32; 3]> {
    let mut s = n;
    s.sort_unstable();
    match s {
        [2, 2, x] | [x, 2, 2] => Some([2, 2, x]),
        [2, 3, 6] => Some([2, 3, 6]),
        [2, 4, 4] => Some([2, 4, 4]),
        _ => None,
    }
}

/// Relative pseudo-Anosov status of the torus triple group.
pub fn torus_triple_relpa(n1: u32, n2: u32, n3: u32) -> Result<Verdict> {
    let n = [n1, n2, n3];
    check_triple(n)?;
    let sum = reciprocal_sum(n);
    if sum < Rational::one() {
        let parameters = n.iter().enumerate().map(|(i, &x)| (format!("n{}", i + 1), int(x as i128))).collect();
        let checks = vec![Check::new("1/n1 + 1/n2 + 1/n3", sum, Comparison::Lt, Rational::one())];
        return Ok(Verdict::new(
            Question::RelativePseudoAnosov,
            Status::Yes,
            Certificate::Theorem { theorem: TheoremTag::TorusTripleRelativePa, parameters, checks },
        )
        .realized(torus_triangle(), n.to_vec()));
    }
    if let Some(canon) = non_anosov_pattern(n) {
        let perm =
            PERMUTATIONS.into_iter().find(|p| (0..3).all(|c| n[p[c]] == canon[c])).expect("pattern is a rearrangement");
        let sign = if is_odd(&perm) { -1 } else { 1 };
        let word = Word::from_pairs([(1, 1), (0, 1), (2, 1)]).relabel(&perm, sign);
        let w = non_anosov(word, &torus_triangle(), &n)?;
        return Ok(Verdict::new(Question::RelativePseudoAnosov, Status::No, Certificate::Witness(w))
            .realized(torus_triangle(), n.to_vec()));
    }
    Ok(unknown_triple(Question::RelativePseudoAnosov, TheoremTag::TorusTripleRelativePa, n, sum, Comparison::Lt))
}
