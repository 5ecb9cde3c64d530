//! The JSON certificate report.
//!
//! Rationals are strings (`"3/2"`, or `"3"` when integral), counts and
//! exponents are numbers, generators are numbered from 1 and curves are
//! `[p, q]` pairs. Every verdict can be rebuilt from its report with
//! [`VerdictReport::to_verdict`] and re-checked without running the tool.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;
use twistfree_core::bounds::{ExponentBound, Family, Term};
use twistfree_core::consistency::{Consistency, Contradiction, OracleBounds};
use twistfree_core::oracle::Reducible;
use twistfree_core::pingpong::{Mode, VerificationReport, Violation};
use twistfree_core::rational::{self, Rational};
use twistfree_core::verdict::{Check, Comparison, Realization, TheoremTag};
use twistfree_core::{
    Certificate, FixedSlope, Question, Slope, Status, Syllable, UnimodularMatrix, Verdict, Witness, Word,
};

pub const TOOL: &str = "twistfree";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Exact rational carried as a string.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Exact(pub Rational);

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&rational::Display(&self.0))
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        rational::parse(&s).map(Exact).ok_or_else(|| serde::de::Error::custom(format!("invalid rational {s:?}")))
    }
}

/// A report field that does not decode back into a core value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeError(pub String);

impl fmt::Display for DecodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed report: {}", self.0)
    }
}

impl std::error::Error for DecodeError {}

fn bad(msg: impl Into<String>) -> DecodeError {
    DecodeError(msg.into())
}

pub type Curve = [i64; 2];
pub type Matrix = [[i64; 2]; 2];

fn curve(s: Slope) -> Curve {
    [s.p(), s.q()]
}

fn slope(c: &Curve) -> Result<Slope, DecodeError> {
    Slope::new(c[0], c[1]).map_err(|e| bad(e.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordReport {
    pub text: String,
    /// `[generator, exponent]` pairs, generators numbered from 1.
    pub syllables: Vec<(usize, i64)>,
}

impl WordReport {
    pub fn new(w: &Word) -> Self {
        Self { text: w.to_string(), syllables: w.syllables().iter().map(|s| (s.generator + 1, s.exponent)).collect() }
    }

    pub fn to_word(&self) -> Result<Word, DecodeError> {
        let mut out = Vec::with_capacity(self.syllables.len());
        for &(g, e) in &self.syllables {
            if g == 0 || e == 0 {
                return Err(bad(format!("bad syllable [{g}, {e}] in {:?}", self.text)));
            }
            out.push(Syllable::new(g - 1, e));
        }
        let w = Word::new(out);
        if w.len() != self.syllables.len() || w.to_string() != self.text {
            return Err(bad(format!("word text {:?} does not match its syllables", self.text)));
        }
        Ok(w)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FixedReport {
    All,
    None,
    Slope(Curve),
}

impl FixedReport {
    pub fn new(f: FixedSlope) -> Self {
        match f {
            FixedSlope::All => FixedReport::All,
            FixedSlope::None => FixedReport::None,
            FixedSlope::Exactly(s) => FixedReport::Slope(curve(s)),
        }
    }

    fn to_fixed(&self) -> Result<FixedSlope, DecodeError> {
        Ok(match self {
            FixedReport::All => FixedSlope::All,
            FixedReport::None => FixedSlope::None,
            FixedReport::Slope(c) => FixedSlope::Exactly(slope(c)?),
        })
    }
}

fn matrix(m: &UnimodularMatrix) -> Matrix {
    m.rows()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evaluation {
    pub matrix: Matrix,
    pub trace: i64,
}

impl Evaluation {
    fn of(m: &UnimodularMatrix) -> Option<Self> {
        Some(Self { matrix: matrix(m), trace: i64::try_from(m.trace()).ok()? })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub lhs: Exact,
    pub relation: String,
    pub rhs: Exact,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameter {
    pub name: String,
    pub value: Exact,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum WitnessReport {
    /// `lhs = rhs` in the group; the matrices are evaluated on the realization.
    Relation {
        lhs: WordReport,
        rhs: WordReport,
        relator: WordReport,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        lhs_value: Option<Evaluation>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        rhs_value: Option<Evaluation>,
    },
    /// A word with `|trace| <= 2`.
    NonAnosov {
        word: WordReport,
        fixed: FixedReport,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        value: Option<Evaluation>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum ViolationReport {
    Escape {
        source: Curve,
        source_region: usize,
        generator: usize,
        step: i64,
        image: Curve,
        image_region: Option<usize>,
    },
    NormLoss {
        source: Curve,
        generator: usize,
        step: i64,
        before: u64,
        after: u64,
    },
    NotAbsorbed {
        curve: Curve,
        word: WordReport,
    },
}

impl ViolationReport {
    pub fn new(v: &Violation) -> Self {
        match v {
            Violation::Escape { source, source_region, generator, step, image, image_region } => {
                ViolationReport::Escape {
                    source: curve(*source),
                    source_region: source_region + 1,
                    generator: generator + 1,
                    step: *step,
                    image: curve(*image),
                    image_region: image_region.map(|r| r + 1),
                }
            }
            Violation::NormLoss { source, generator, step, before, after } => ViolationReport::NormLoss {
                source: curve(*source),
                generator: generator + 1,
                step: *step,
                before: *before,
                after: *after,
            },
            Violation::NotAbsorbed { curve: c, word } => {
                ViolationReport::NotAbsorbed { curve: curve(*c), word: WordReport::new(word) }
            }
        }
    }

    fn to_violation(&self) -> Result<Violation, DecodeError> {
        let index = |i: usize| i.checked_sub(1).ok_or_else(|| bad("indices are numbered from 1"));
        Ok(match self {
            ViolationReport::Escape { source, source_region, generator, step, image, image_region } => {
                Violation::Escape {
                    source: slope(source)?,
                    source_region: index(*source_region)?,
                    generator: index(*generator)?,
                    step: *step,
                    image: slope(image)?,
                    image_region: image_region.map(index).transpose()?,
                }
            }
            ViolationReport::NormLoss { source, generator, step, before, after } => Violation::NormLoss {
                source: slope(source)?,
                generator: index(*generator)?,
                step: *step,
                before: *before,
                after: *after,
            },
            ViolationReport::NotAbsorbed { curve: c, word } => {
                Violation::NotAbsorbed { curve: slope(c)?, word: word.to_word()? }
            }
        })
    }
}

pub fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::PingPong => "ppl",
        Mode::NormPingPong => "ppwtc",
        Mode::WeakPingPong => "wpp",
    }
}

fn mode_from_name(s: &str) -> Result<Mode, DecodeError> {
    match s {
        "ppl" => Ok(Mode::PingPong),
        "ppwtc" => Ok(Mode::NormPingPong),
        "wpp" => Ok(Mode::WeakPingPong),
        _ => Err(bad(format!("unknown mode {s:?}"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "certificate_kind", rename_all = "kebab-case")]
pub enum Payload {
    Theorem {
        theorem: String,
        parameters: Vec<Parameter>,
        checks: Vec<CheckReport>,
    },
    Witness {
        witness: WitnessReport,
    },
    BoundedVerification {
        mode: String,
        height: u32,
        power_bound: u32,
        n0: Option<u32>,
        points: u64,
        moves: u64,
        uncovered: Vec<Curve>,
        violations: Vec<ViolationReport>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationReport {
    pub curves: Vec<Curve>,
    pub exponents: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleBoundsReport {
    pub max_syllables: usize,
    pub max_step: u32,
}

impl From<OracleBounds> for OracleBoundsReport {
    fn from(b: OracleBounds) -> Self {
        Self { max_syllables: b.max_syllables, max_step: b.max_step }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsistencyReport {
    /// `consistent`, `unchecked`, `skipped` or `contradicted`.
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleBoundsReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<WordReport>,
}

impl ConsistencyReport {
    pub fn new(c: &Consistency) -> Self {
        match c {
            Consistency::Unchecked => Self {
                status: "unchecked".into(),
                oracle: None,
                detail: Some("nothing for the oracle to check".into()),
                counterexample: None,
            },
            Consistency::Consistent { bounds } => Self {
                status: "consistent".into(),
                oracle: bounds.map(Into::into),
                detail: Some(match bounds {
                    Some(_) => "oracle search found no counterexample".into(),
                    None => "witness re-evaluated on the realization".into(),
                }),
                counterexample: None,
            },
            Consistency::Contradicted(c) => {
                let (detail, word) = match c {
                    Contradiction::Relation(w) => ("oracle found a relation".to_string(), Some(WordReport::new(w))),
                    Contradiction::NonAnosov(r) => {
                        ("oracle found a non-Anosov word".to_string(), Some(WordReport::new(&r.word)))
                    }
                    Contradiction::InvalidWitness => ("witness fails on its own realization".to_string(), None),
                };
                Self { status: "contradicted".into(), oracle: None, detail: Some(detail), counterexample: word }
            }
        }
    }

    pub fn skipped(reason: impl Into<String>) -> Self {
        Self { status: "skipped".into(), oracle: None, detail: Some(reason.into()), counterexample: None }
    }

    pub fn is_contradiction(&self) -> bool {
        self.status == "contradicted"
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub question: String,
    pub status: String,
    pub payload: Payload,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub realization: Option<RealizationReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub consistency: Option<ConsistencyReport>,
}

fn question_from_name(s: &str) -> Result<Question, DecodeError> {
    match s {
        "free" => Ok(Question::Freeness),
        "relpa" => Ok(Question::RelativePseudoAnosov),
        _ => Err(bad(format!("unknown question {s:?}"))),
    }
}

fn status_from_name(s: &str) -> Result<Status, DecodeError> {
    match s {
        "yes" => Ok(Status::Yes),
        "no" => Ok(Status::No),
        "unknown" => Ok(Status::Unknown),
        _ => Err(bad(format!("unknown status {s:?}"))),
    }
}

impl VerdictReport {
    pub fn new(v: &Verdict) -> Self {
        let eval = |w: &Word| v.realization.as_ref().and_then(|r| r.matrix(w).ok()).and_then(|m| Evaluation::of(&m));
        let payload = match &v.certificate {
            Certificate::Theorem { theorem, parameters, checks } => Payload::Theorem {
                theorem: theorem.name().into(),
                parameters: parameters.iter().map(|(n, x)| Parameter { name: n.clone(), value: Exact(*x) }).collect(),
                checks: checks
                    .iter()
                    .map(|c| CheckReport {
                        name: c.name.clone(),
                        lhs: Exact(c.lhs),
                        relation: c.relation.symbol().into(),
                        rhs: Exact(c.rhs),
                        holds: c.holds,
                    })
                    .collect(),
            },
            Certificate::Witness(Witness::Relation { lhs, rhs }) => Payload::Witness {
                witness: WitnessReport::Relation {
                    lhs: WordReport::new(lhs),
                    rhs: WordReport::new(rhs),
                    relator: WordReport::new(&(lhs * &rhs.inverse())),
                    lhs_value: eval(lhs),
                    rhs_value: eval(rhs),
                },
            },
            Certificate::Witness(Witness::NonAnosov { word, fixed }) => Payload::Witness {
                witness: WitnessReport::NonAnosov {
                    word: WordReport::new(word),
                    fixed: FixedReport::new(*fixed),
                    value: eval(word),
                },
            },
            Certificate::Bounded(r) => Payload::BoundedVerification {
                mode: mode_name(r.mode).into(),
                height: r.height,
                power_bound: r.power_bound,
                n0: r.n0,
                points: r.points,
                moves: r.moves,
                uncovered: r.uncovered.iter().map(|s| curve(*s)).collect(),
                violations: r.violations.iter().map(ViolationReport::new).collect(),
            },
        };
        Self {
            question: v.question.to_string(),
            status: v.status.to_string(),
            payload,
            realization: v.realization.as_ref().map(|r| RealizationReport {
                curves: r.curves.iter().map(|s| curve(*s)).collect(),
                exponents: r.exponents.clone(),
            }),
            notes: v.notes.clone(),
            consistency: None,
        }
    }

    pub fn certificate_kind(&self) -> &'static str {
        match self.payload {
            Payload::Theorem { .. } => "theorem",
            Payload::Witness { .. } => "witness",
            Payload::BoundedVerification { .. } => "bounded-verification",
        }
    }

    /// Rebuilds the verdict. Derived data (evaluated matrices, relators,
    /// check outcomes) must agree with a fresh evaluation.
    pub fn to_verdict(&self) -> Result<Verdict, DecodeError> {
        let question = question_from_name(&self.question)?;
        let status = status_from_name(&self.status)?;
        let certificate = match &self.payload {
            Payload::Theorem { theorem, parameters, checks } => {
                let theorem =
                    TheoremTag::from_name(theorem).ok_or_else(|| bad(format!("unknown theorem {theorem:?}")))?;
                let mut out = Vec::with_capacity(checks.len());
                for c in checks {
                    let relation = Comparison::from_symbol(&c.relation)
                        .ok_or_else(|| bad(format!("unknown relation {:?}", c.relation)))?;
                    let check = Check::new(c.name.clone(), c.lhs.0, relation, c.rhs.0);
                    if check.holds != c.holds {
                        return Err(bad(format!("check {:?} does not evaluate to {}", c.name, c.holds)));
                    }
                    out.push(check);
                }
                Certificate::Theorem {
                    theorem,
                    parameters: parameters.iter().map(|p| (p.name.clone(), p.value.0)).collect(),
                    checks: out,
                }
            }
            Payload::Witness { witness } => Certificate::Witness(match witness {
                WitnessReport::Relation { lhs, rhs, relator, .. } => {
                    let (lhs, rhs) = (lhs.to_word()?, rhs.to_word()?);
                    if relator.to_word()? != &lhs * &rhs.inverse() {
                        return Err(bad("relator is not lhs rhs^-1"));
                    }
                    Witness::Relation { lhs, rhs }
                }
                WitnessReport::NonAnosov { word, fixed, .. } => {
                    Witness::NonAnosov { word: word.to_word()?, fixed: fixed.to_fixed()? }
                }
            }),
            Payload::BoundedVerification { mode, height, power_bound, n0, points, moves, uncovered, violations } => {
                Certificate::Bounded(VerificationReport {
                    mode: mode_from_name(mode)?,
                    height: *height,
                    power_bound: *power_bound,
                    n0: *n0,
                    points: *points,
                    moves: *moves,
                    uncovered: uncovered.iter().map(slope).collect::<Result<_, _>>()?,
                    violations: violations.iter().map(ViolationReport::to_violation).collect::<Result<_, _>>()?,
                })
            }
        };
        let mut v = Verdict::new(question, status, certificate);
        v.notes = self.notes.clone();
        if let Some(r) = &self.realization {
            v.realization = Some(Realization {
                curves: r.curves.iter().map(slope).collect::<Result<_, _>>()?,
                exponents: r.exponents.clone(),
            });
        }
        if VerdictReport::new(&v).payload != self.payload {
            return Err(bad("evaluated matrices do not match the realization"));
        }
        Ok(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentReport {
    /// Numbered from 1; absent for a uniform exponent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<usize>,
    pub bound: Exact,
    pub n: u64,
}

impl ExponentReport {
    pub fn new(generator: Option<usize>, b: &ExponentBound) -> Self {
        Self { generator: generator.map(|g| g + 1), bound: Exact(b.bound), n: b.n }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermReport {
    pub target: usize,
    pub source: usize,
    pub family: String,
    pub value: Exact,
}

impl TermReport {
    pub fn new(t: &Term) -> Self {
        let family = match t.family {
            Family::Mu => "mu".to_string(),
            Family::MuRatio { k } => format!("mu-ratio k={}", k + 1),
            Family::Ratio { k, l } => format!("ratio k={} l={}", k + 1, l + 1),
            Family::RatioToSource { k } => format!("ratio-to-source k={}", k + 1),
            Family::RatioFromSource { l } => format!("ratio-from-source l={}", l + 1),
        };
        Self { target: t.target + 1, source: t.source + 1, family, value: Exact(t.value) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundResult {
    pub theorem: String,
    /// `ok`, `hypotheses-fail` or `not-applicable`.
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub exponents: Vec<ExponentReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub norm_growth: Vec<ExponentReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub terms: Vec<TermReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsReport {
    pub min: u64,
    pub max: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_ratio: Option<Exact>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stats: Option<StatsReport>,
    /// `μ_ij`, row `i`, diagonal `"0"`.
    pub mu: Vec<Vec<Exact>>,
    pub lambda: String,
    pub results: Vec<BoundResult>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoundReport {
    pub word: WordReport,
    pub value: Evaluation,
    pub fixed: FixedReport,
}

impl FoundReport {
    pub fn relation(w: &Word, curves: &[Slope], exps: &[u32]) -> Option<Self> {
        let m = twistfree_core::torus::word_matrix(w, curves, exps).ok()?;
        Some(Self { word: WordReport::new(w), value: Evaluation::of(&m)?, fixed: FixedReport::new(m.fixed_slope()) })
    }

    pub fn reducible(r: &Reducible) -> Option<Self> {
        Some(Self {
            word: WordReport::new(&r.word),
            value: Evaluation::of(&r.matrix)?,
            fixed: FixedReport::new(r.fixed()),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSection {
    /// `relations` or `reducibles`.
    pub mode: String,
    pub max_syllables: usize,
    pub max_step: u32,
    pub realization: RealizationReport,
    pub found: Vec<FoundReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorReport {
    /// `invalid-input` or `not-applicable`.
    pub kind: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub input: Value,
    pub verdicts: Vec<VerdictReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundsSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub search: Option<SearchSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorReport>,
}

impl CertificateReport {
    pub fn new(command: &str, input: Value) -> Self {
        Self {
            tool: TOOL.into(),
            version: VERSION.into(),
            command: command.into(),
            input,
            verdicts: Vec::new(),
            bounds: None,
            search: None,
            error: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn has_contradiction(&self) -> bool {
        self.verdicts.iter().any(|v| v.consistency.as_ref().is_some_and(ConsistencyReport::is_contradiction))
    }
}
