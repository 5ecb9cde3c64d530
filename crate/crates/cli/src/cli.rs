//! Argument parsing and the subcommands.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use twistfree_core::bounds::{
    implied_ratio_lambda, norm_growth_min_exponent, region_bound_terms, region_exponents, ExponentBound, RatioMode,
};
use twistfree_core::classify::{
    bounded_verdict, classify_free_2, classify_relpa_2, pingpong_certificate, spread_ratio_certificate, torus_triangle,
    torus_triple_certificate, torus_triple_relpa, uniform_free_certificate, uniform_relpa_certificate,
};
use twistfree_core::consistency::{check_verdict, OracleBounds};
use twistfree_core::oracle::{find_reducibles, find_relations, Reducible};
use twistfree_core::pingpong::{verify, Mode, PingPongParams, VerifyConfig};
use twistfree_core::rational::{self, int, Rational};
use twistfree_core::{Certificate, CurveSystem, Error, Question, Slope, Status, Verdict, Witness, Word};

use crate::format::{parse_exponents, CurveSystemFile};
use crate::report::{
    BoundResult, BoundsSection, CertificateReport, ConsistencyReport, ErrorReport, Exact, ExponentReport, FoundReport,
    RealizationReport, SearchSection, StatsReport, TermReport, VerdictReport,
};

/// Largest verification height accepted.
pub const MAX_HEIGHT: u32 = 500;
/// Largest twist power tried per move.
pub const MAX_POWER_BOUND: u32 = 50;
/// Longest absorption words checked.
pub const MAX_N0: u32 = 6;
/// Cap on the number of words an oracle search may visit.
pub const MAX_SEARCH_WORDS: f64 = 1e8;

#[derive(Parser, Debug)]
#[command(
    name = "twistfree",
    version,
    about = "Freeness and pseudo-Anosov certificates for groups generated by Dehn twist powers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Two curves meeting m times, twist exponents n1 and n2.
    Classify2(Classify2Args),
    /// Exponent bounds for a curve system.
    Bounds(BoundsArgs),
    /// Three torus curves meeting pairwise once.
    TorusTriple(TorusTripleArgs),
    /// Brute-force search for relations or non-Anosov words on a torus system.
    Search(SearchArgs),
    /// Bounded ping-pong verification on a torus system.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Write the JSON certificate report to PATH (`-` for stdout).
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Longest words of the consistency oracle (default 6).
    #[arg(long, value_name = "S")]
    pub oracle_syllables: Option<usize>,
    /// Largest step of the consistency oracle (default 3 for freeness, 2 otherwise).
    #[arg(long, value_name = "T")]
    pub oracle_step: Option<u32>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuestionArg {
    Free,
    Relpa,
}

#[derive(Args, Debug)]
pub struct Classify2Args {
    #[arg(long)]
    pub m: u64,
    #[arg(long)]
    pub n1: u32,
    #[arg(long)]
    pub n2: u32,
    #[arg(long, value_enum)]
    pub question: QuestionArg,
    #[command(flatten)]
    pub common: Common,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum LambdaArg {
    /// Every ratio bound infinite.
    Infinite,
    /// Ratio bounds large enough to be implied by the μ conditions (pairwise filling curves).
    Auto,
    /// `λ_ijk = 1 + μ_ij`, for curves meeting pairwise once.
    Triangle,
}

impl LambdaArg {
    fn name(self) -> &'static str {
        match self {
            LambdaArg::Infinite => "infinite",
            LambdaArg::Auto => "auto",
            LambdaArg::Triangle => "triangle",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremArg {
    /// Exponents 1 when the intersection ratios are at most 1/6.
    #[value(alias = "32")]
    SpreadRatio,
    /// Uniform exponent for freeness.
    #[value(alias = "33")]
    UniformFree,
    /// Uniform exponent for the relatively pseudo-Anosov property.
    #[value(alias = "36")]
    UniformRelpa,
    /// Per-generator exponents from the ping-pong regions.
    #[value(alias = "lemma31")]
    Pingpong,
}

impl TheoremArg {
    fn name(self) -> &'static str {
        match self {
            TheoremArg::SpreadRatio => "spread-ratio",
            TheoremArg::UniformFree => "uniform-free",
            TheoremArg::UniformRelpa => "uniform-relpa",
            TheoremArg::Pingpong => "pingpong",
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct RegionArgs {
    /// `I,J=V` sets μ_IJ = V (curves numbered from 1); a bare `V` sets μ_IJ = V for all I < J.
    #[arg(long, value_name = "SPEC")]
    pub mu: Vec<String>,
    #[arg(long, value_enum, default_value = "infinite")]
    pub lambda: LambdaArg,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[command(flatten)]
    pub regions: RegionArgs,
    /// Only this bound; all applicable ones by default.
    #[arg(long, value_enum)]
    pub theorem: Option<TheoremArg>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct TorusTripleArgs {
    #[arg(long, value_name = "N1,N2,N3")]
    pub exponents: String,
    #[arg(long, value_enum)]
    pub question: QuestionArg,
    #[command(flatten)]
    pub common: Common,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Relations,
    Reducibles,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub exponents: String,
    #[arg(long, value_enum)]
    pub mode: SearchMode,
    #[arg(long, default_value_t = 6)]
    pub max_syllables: usize,
    #[arg(long, default_value_t = 2)]
    pub max_step: u32,
    #[command(flatten)]
    pub common: Common,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    Ppl,
    Ppwtc,
    Wpp,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub exponents: String,
    #[arg(long, value_enum)]
    pub mode: VerifyMode,
    #[arg(long)]
    pub height: u32,
    #[arg(long, default_value_t = 1)]
    pub n0: u32,
    #[arg(long, default_value_t = 5)]
    pub power_bound: u32,
    #[command(flatten)]
    pub regions: RegionArgs,
    #[command(flatten)]
    pub common: Common,
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Classify2(a) => &a.common,
            Command::Bounds(a) => &a.common,
            Command::TorusTriple(a) => &a.common,
            Command::Search(a) => &a.common,
            Command::Verify(a) => &a.common,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Command::Classify2(_) => "classify2",
            Command::Bounds(_) => "bounds",
            Command::TorusTriple(_) => "torus-triple",
            Command::Search(_) => "search",
            Command::Verify(_) => "verify",
        }
    }
}

/// Why a command produced no verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    Invalid(String),
    NotApplicable(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotApplicable(reason) => Failure::NotApplicable(reason),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

impl Failure {
    fn report(&self) -> ErrorReport {
        match self {
            Failure::Invalid(m) => ErrorReport { kind: "invalid-input".into(), message: m.clone() },
            Failure::NotApplicable(m) => ErrorReport { kind: "not-applicable".into(), message: m.clone() },
        }
    }
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CONTRADICTION: i32 = 3;

/// A finished command: the report (also for failures) and the exit code.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: CertificateReport,
    pub code: i32,
}

pub fn run(cli: &Cli) -> Outcome {
    let cmd = &cli.command;
    let mut report = CertificateReport::new(cmd.name(), Value::Null);
    let result = match cmd {
        Command::Classify2(a) => classify2(a, &mut report),
        Command::Bounds(a) => bounds(a, &mut report),
        Command::TorusTriple(a) => torus_triple(a, &mut report),
        Command::Search(a) => search(a, &mut report),
        Command::Verify(a) => verify_cmd(a, &mut report),
    };
    let code = match result {
        Err(f) => {
            report.error = Some(f.report());
            EXIT_INVALID
        }
        Ok(()) if report.has_contradiction() => EXIT_CONTRADICTION,
        Ok(()) => EXIT_OK,
    };
    Outcome { report, code }
}

fn oracle_bounds(common: &Common, question: Question) -> OracleBounds {
    let d = OracleBounds::default_for(question);
    OracleBounds {
        max_syllables: common.oracle_syllables.unwrap_or(d.max_syllables),
        max_step: common.oracle_step.unwrap_or(d.max_step),
    }
}

fn check_oracle_size(h: usize, max_syllables: usize, max_step: u32, meet_in_middle: bool) -> Result<(), Failure> {
    if max_syllables == 0 || max_step == 0 {
        return Err(Failure::Invalid("search bounds must be positive".into()));
    }
    let depth = if meet_in_middle { max_syllables.div_ceil(2) } else { max_syllables };
    let words = (2.0 * h as f64 * max_step as f64).powi(depth as i32);
    if words > MAX_SEARCH_WORDS {
        return Err(Failure::Invalid(format!(
            "search with {max_syllables} syllables and step {max_step} over {h} generators is too large"
        )));
    }
    Ok(())
}

/// Adds `v` with its oracle cross-check.
fn push_checked(report: &mut CertificateReport, v: &Verdict, common: &Common) -> Result<(), Failure> {
    let mut r = VerdictReport::new(v);
    let b = oracle_bounds(common, v.question);
    let h = v.realization.as_ref().map_or(0, |r| r.curves.len());
    check_oracle_size(h.max(1), b.max_syllables, b.max_step, v.question == Question::Freeness)?;
    r.consistency = Some(match check_verdict(v, Some(b)) {
        Ok(c) => ConsistencyReport::new(&c),
        Err(e) => ConsistencyReport::skipped(format!("oracle could not run: {e}")),
    });
    report.verdicts.push(r);
    Ok(())
}

fn question(q: QuestionArg) -> Question {
    match q {
        QuestionArg::Free => Question::Freeness,
        QuestionArg::Relpa => Question::RelativePseudoAnosov,
    }
}

fn classify2(a: &Classify2Args, report: &mut CertificateReport) -> Result<(), Failure> {
    let q = question(a.question);
    report.input = json!({ "m": a.m, "n1": a.n1, "n2": a.n2, "question": q.to_string() });
    let v = match q {
        Question::Freeness => classify_free_2(a.m, a.n1, a.n2)?,
        Question::RelativePseudoAnosov => classify_relpa_2(a.m, a.n1, a.n2)?,
    };
    push_checked(report, &v, &a.common)
}

fn exponents(s: &str, h: usize) -> Result<Vec<u32>, Failure> {
    let n = parse_exponents(s).map_err(Failure::Invalid)?;
    if n.len() != h {
        return Err(Failure::Invalid(format!("expected {h} exponents, found {}", n.len())));
    }
    Ok(n)
}

/// The first non-identity word with the fewest syllables.
fn shortest_reducible(found: &[Reducible]) -> Option<&Reducible> {
    found.iter().filter(|r| !r.is_identity()).min_by_key(|r| (r.word.len(), r.word.max_step()))
}

fn torus_triple(a: &TorusTripleArgs, report: &mut CertificateReport) -> Result<(), Failure> {
    let q = question(a.question);
    let n = exponents(&a.exponents, 3)?;
    report.input = json!({ "exponents": n, "question": q.to_string() });
    let mut v = match q {
        Question::Freeness => torus_triple_certificate(n[0], n[1], n[2])?,
        Question::RelativePseudoAnosov => torus_triple_relpa(n[0], n[1], n[2])?,
    };
    if v.status == Status::Unknown {
        // No theorem decides this case; report what a bounded search sees.
        let curves = torus_triangle();
        let b = oracle_bounds(&a.common, q);
        check_oracle_size(3, b.max_syllables, b.max_step, q == Question::Freeness)?;
        let found = match q {
            Question::Freeness => find_relations(&curves, &n, b.max_syllables, b.max_step)?
                .iter()
                .filter_map(|w| FoundReport::relation(w, &curves, &n))
                .collect::<Vec<_>>(),
            Question::RelativePseudoAnosov => {
                let all = find_reducibles(&curves, &n, b.max_syllables, b.max_step)?;
                shortest_reducible(&all).and_then(FoundReport::reducible).into_iter().collect()
            }
        };
        v = v.with_note(match found.first() {
            Some(f) => format!(
                "no closed-form result applies; the oracle found `{}` with trace {} (status left unknown)",
                f.word.text, f.value.trace
            ),
            None => format!(
                "no closed-form result applies; the oracle found nothing up to {} syllables, step {}",
                b.max_syllables, b.max_step
            ),
        });
        report.search = Some(SearchSection {
            mode: match q {
                Question::Freeness => "relations".into(),
                Question::RelativePseudoAnosov => "reducibles".into(),
            },
            max_syllables: b.max_syllables,
            max_step: b.max_step,
            realization: RealizationReport { curves: curves.iter().map(|s| [s.p(), s.q()]).collect(), exponents: n },
            found,
        });
    }
    if v.status != Status::Unknown {
        v = v.with_note(
            "the verdict covers the closed and the once-punctured torus; oracle checks use the closed torus"
                .to_string(),
        );
    }
    push_checked(report, &v, &a.common)
}

fn load(path: &std::path::Path, report: &mut CertificateReport) -> Result<(CurveSystemFile, CurveSystem), Failure> {
    let file = CurveSystemFile::read(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    let system = file.to_system().map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    report.input = json!({ "system": file });
    Ok((file, system))
}

fn require_torus(system: &CurveSystem) -> Result<Vec<Slope>, Failure> {
    system
        .torus_slopes()
        .map(<[Slope]>::to_vec)
        .ok_or_else(|| Failure::NotApplicable("this command needs torus_slopes in the input".into()))
}

fn parse_mu(specs: &[String], h: usize) -> Result<PingPongParams, Failure> {
    let mut entries = Vec::new();
    for spec in specs {
        let bad = || Failure::Invalid(format!("cannot parse --mu {spec:?}; expected I,J=V or V"));
        match spec.split_once('=') {
            Some((idx, val)) => {
                let (i, j) = idx.split_once(',').ok_or_else(bad)?;
                let i: usize = i.trim().parse().map_err(|_| bad())?;
                let j: usize = j.trim().parse().map_err(|_| bad())?;
                let v = rational::parse(val).ok_or_else(bad)?;
                if i == 0 || j == 0 {
                    return Err(bad());
                }
                entries.push((i - 1, j - 1, v));
            }
            None => {
                let v = rational::parse(spec).ok_or_else(bad)?;
                for i in 0..h {
                    for j in i + 1..h {
                        entries.push((i, j, v));
                    }
                }
            }
        }
    }
    Ok(PingPongParams::with_mu(h, &entries)?)
}

fn params(regions: &RegionArgs, system: &CurveSystem) -> Result<PingPongParams, Failure> {
    let p = parse_mu(&regions.mu, system.h())?;
    Ok(match regions.lambda {
        LambdaArg::Infinite => p,
        LambdaArg::Triangle => p.with_triangle_lambda()?,
        LambdaArg::Auto => implied_ratio_lambda(system, &p)?,
    })
}

fn mu_matrix(p: &PingPongParams) -> Vec<Vec<Exact>> {
    (0..p.h()).map(|i| (0..p.h()).map(|j| Exact(if i == j { int(0) } else { p.mu(i, j) })).collect()).collect()
}

fn not_applicable(theorem: TheoremArg, f: Failure) -> Result<BoundResult, Failure> {
    match f {
        Failure::NotApplicable(reason) => Ok(BoundResult {
            theorem: theorem.name().into(),
            status: "not-applicable".into(),
            reason: Some(reason),
            exponents: Vec::new(),
            norm_growth: Vec::new(),
            terms: Vec::new(),
        }),
        other => Err(other),
    }
}

fn ok_result(theorem: TheoremArg, exponents: Vec<ExponentReport>) -> BoundResult {
    BoundResult {
        theorem: theorem.name().into(),
        status: "ok".into(),
        reason: None,
        exponents,
        norm_growth: Vec::new(),
        terms: Vec::new(),
    }
}

fn bound_for(
    theorem: TheoremArg,
    system: &CurveSystem,
    p: &PingPongParams,
    lambda: LambdaArg,
) -> Result<(BoundResult, Verdict), Failure> {
    match theorem {
        TheoremArg::SpreadRatio => {
            let v = spread_ratio_certificate(system)?;
            if v.status != Status::Yes {
                let mut r = ok_result(theorem, Vec::new());
                r.status = "hypotheses-fail".into();
                r.reason = Some("some intersection ratio exceeds 1/6".into());
                return Ok((r, v));
            }
            let one = ExponentBound { bound: Rational::from_integer(1), n: 1 };
            Ok((ok_result(theorem, vec![ExponentReport::new(None, &one)]), v))
        }
        TheoremArg::UniformFree => {
            let (b, v) = uniform_free_certificate(system)?;
            Ok((ok_result(theorem, vec![ExponentReport::new(None, &b)]), v))
        }
        TheoremArg::UniformRelpa => {
            let (b, v) = uniform_relpa_certificate(system)?;
            Ok((ok_result(theorem, vec![ExponentReport::new(None, &b)]), v))
        }
        TheoremArg::Pingpong => {
            let mode = if lambda == LambdaArg::Auto { RatioMode::Equivalent } else { RatioMode::Explicit };
            let bounds = region_exponents(system, p, mode)?;
            let mut result =
                ok_result(theorem, bounds.iter().enumerate().map(|(i, b)| ExponentReport::new(Some(i), b)).collect());
            for i in 0..system.h() {
                for j in (0..system.h()).filter(|&j| j != i) {
                    result.terms.extend(region_bound_terms(i, j, system, p, mode)?.iter().map(TermReport::new));
                }
            }
            let growth: Result<Vec<_>, Error> =
                (0..system.h()).map(|i| norm_growth_min_exponent(i, system, p)).collect();
            if let Ok(growth) = growth {
                result.norm_growth = growth.iter().enumerate().map(|(i, b)| ExponentReport::new(Some(i), b)).collect();
            }
            let n = bounds
                .iter()
                .map(|b| u32::try_from(b.n).map_err(|_| Failure::Invalid("exponent bound overflows".into())))
                .collect::<Result<Vec<_>, _>>()?;
            let v = pingpong_certificate(system, &n, p, mode)?;
            Ok((result, v))
        }
    }
}

fn bounds(a: &BoundsArgs, report: &mut CertificateReport) -> Result<(), Failure> {
    let (_, system) = load(&a.input, report)?;
    let p = params(&a.regions, &system)?;
    if let Some(obj) = report.input.as_object_mut() {
        obj.insert("mu".into(), json!(a.regions.mu));
        obj.insert("lambda".into(), json!(a.regions.lambda.name()));
        obj.insert("theorem".into(), json!(a.theorem.map(TheoremArg::name)));
    }
    let stats = system.stats().ok().map(|s| StatsReport { min: s.min, max: s.max, max_ratio: s.max_ratio.map(Exact) });
    let theorems = match a.theorem {
        Some(t) => vec![t],
        None => vec![TheoremArg::SpreadRatio, TheoremArg::UniformFree, TheoremArg::UniformRelpa, TheoremArg::Pingpong],
    };
    let mut results = Vec::new();
    let mut verdicts = Vec::new();
    for t in theorems {
        match bound_for(t, &system, &p, a.regions.lambda) {
            Ok((r, v)) => {
                results.push(r);
                verdicts.push(v);
            }
            Err(f) if a.theorem.is_some() => return Err(f),
            Err(f) => results.push(not_applicable(t, f)?),
        }
    }
    report.bounds = Some(BoundsSection { stats, mu: mu_matrix(&p), lambda: a.regions.lambda.name().into(), results });
    for v in &verdicts {
        push_checked(report, v, &a.common)?;
    }
    Ok(())
}

fn search(a: &SearchArgs, report: &mut CertificateReport) -> Result<(), Failure> {
    let (_, system) = load(&a.input, report)?;
    let curves = require_torus(&system)?;
    let n = exponents(&a.exponents, system.h())?;
    if let Some(obj) = report.input.as_object_mut() {
        obj.insert("exponents".into(), json!(n));
        obj.insert("max_syllables".into(), json!(a.max_syllables));
        obj.insert("max_step".into(), json!(a.max_step));
    }
    check_oracle_size(curves.len(), a.max_syllables, a.max_step, a.mode == SearchMode::Relations)?;
    let (mode, found, verdict) = match a.mode {
        SearchMode::Relations => {
            let words = find_relations(&curves, &n, a.max_syllables, a.max_step)?;
            let verdict = words.first().map(|w| {
                Verdict::new(
                    Question::Freeness,
                    Status::No,
                    Certificate::Witness(Witness::Relation { lhs: w.clone(), rhs: Word::empty() }),
                )
                .realized(curves.clone(), n.clone())
            });
            let found = words.iter().filter_map(|w| FoundReport::relation(w, &curves, &n)).collect();
            ("relations", found, verdict)
        }
        SearchMode::Reducibles => {
            let all = find_reducibles(&curves, &n, a.max_syllables, a.max_step)?;
            let verdict = shortest_reducible(&all).map(|r| {
                Verdict::new(Question::RelativePseudoAnosov, Status::No, Certificate::Witness(r.witness()))
                    .realized(curves.clone(), n.clone())
            });
            ("reducibles", all.iter().filter_map(FoundReport::reducible).collect(), verdict)
        }
    };
    report.search = Some(SearchSection {
        mode: mode.into(),
        max_syllables: a.max_syllables,
        max_step: a.max_step,
        realization: RealizationReport { curves: curves.iter().map(|s| [s.p(), s.q()]).collect(), exponents: n },
        found,
    });
    if let Some(v) = verdict {
        push_checked(report, &v, &a.common)?;
    }
    Ok(())
}

fn verify_cmd(a: &VerifyArgs, report: &mut CertificateReport) -> Result<(), Failure> {
    let (_, system) = load(&a.input, report)?;
    require_torus(&system)?;
    let n = exponents(&a.exponents, system.h())?;
    let p = params(&a.regions, &system)?;
    let mode = match a.mode {
        VerifyMode::Ppl => Mode::PingPong,
        VerifyMode::Ppwtc => Mode::NormPingPong,
        VerifyMode::Wpp => Mode::WeakPingPong,
    };
    if a.height == 0 || a.height > MAX_HEIGHT {
        return Err(Failure::Invalid(format!("height must be between 1 and {MAX_HEIGHT}")));
    }
    if a.power_bound == 0 || a.power_bound > MAX_POWER_BOUND {
        return Err(Failure::Invalid(format!("power bound must be between 1 and {MAX_POWER_BOUND}")));
    }
    if a.n0 == 0 || a.n0 > MAX_N0 {
        return Err(Failure::Invalid(format!("n0 must be between 1 and {MAX_N0}")));
    }
    if let Some(obj) = report.input.as_object_mut() {
        obj.insert("exponents".into(), json!(n));
        obj.insert("mode".into(), json!(crate::report::mode_name(mode)));
        obj.insert("height".into(), json!(a.height));
        obj.insert("power_bound".into(), json!(a.power_bound));
        obj.insert("n0".into(), json!((mode == Mode::WeakPingPong).then_some(a.n0)));
        obj.insert("mu".into(), json!(a.regions.mu));
        obj.insert("lambda".into(), json!(a.regions.lambda.name()));
    }
    let config = VerifyConfig { height: a.height, power_bound: a.power_bound, n0: a.n0 };
    let result = verify(&system, &n, &p, mode, &config)?;
    let mut questions = vec![Question::Freeness];
    if mode != Mode::PingPong {
        questions.push(Question::RelativePseudoAnosov);
    }
    for q in questions {
        let v = bounded_verdict(q, result.clone(), &system, &n);
        push_checked(report, &v, &a.common)?;
    }
    Ok(())
}
