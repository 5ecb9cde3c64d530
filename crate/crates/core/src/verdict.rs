//! Verdicts and the certificates backing them.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::pingpong::VerificationReport;
use crate::rational::Rational;
use crate::torus::{fixed_slope, word_matrix, FixedSlope, Slope, UnimodularMatrix};
use crate::word::Word;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Question {
    Freeness,
    RelativePseudoAnosov,
}

impl fmt::Display for Question {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Question::Freeness => "free",
            Question::RelativePseudoAnosov => "relpa",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Yes => "yes",
            Status::No => "no",
            Status::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CertificateKind {
    Theorem,
    BoundedVerification,
    Witness,
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertificateKind::Theorem => "theorem",
            CertificateKind::BoundedVerification => "bounded-verification",
            CertificateKind::Witness => "witness",
        })
    }
}

/// The closed-form result a theorem-backed certificate relies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremTag {
    /// Two twists: free unless disjoint or meeting once with exponents {1,1}, {1,2}, {1,3}.
    PairFreeness,
    /// Two twists: the relatively pseudo-Anosov table.
    PairRelativePa,
    /// Exponents all 1 when every ratio `(a_i,a_k)/((a_i,a_j)(a_j,a_k))` is at most 1/6.
    SpreadRatio,
    /// Free for all exponents at least `6 M0`.
    UniformFreePower,
    /// Relatively pseudo-Anosov for all exponents at least `max(6M/m, 4M/m + 5)`.
    UniformRelativePaPower,
    /// Three torus curves meeting pairwise once, `sum 1/n_i <= 1`.
    TorusTripleFreeness,
    /// Three torus curves meeting pairwise once, `sum 1/n_i < 1`.
    TorusTripleRelativePa,
    /// Ping-pong regions with exponents meeting the five-family bound.
    PingPongExponents,
}

impl TheoremTag {
    pub fn name(self) -> &'static str {
        match self {
            TheoremTag::PairFreeness => "pair-freeness",
            TheoremTag::PairRelativePa => "pair-relative-pa",
            TheoremTag::SpreadRatio => "spread-ratio",
            TheoremTag::UniformFreePower => "uniform-free-power",
            TheoremTag::UniformRelativePaPower => "uniform-relative-pa-power",
            TheoremTag::TorusTripleFreeness => "torus-triple-freeness",
            TheoremTag::TorusTripleRelativePa => "torus-triple-relative-pa",
            TheoremTag::PingPongExponents => "ping-pong-exponents",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        [
            TheoremTag::PairFreeness,
            TheoremTag::PairRelativePa,
            TheoremTag::SpreadRatio,
            TheoremTag::UniformFreePower,
            TheoremTag::UniformRelativePaPower,
            TheoremTag::TorusTripleFreeness,
            TheoremTag::TorusTripleRelativePa,
            TheoremTag::PingPongExponents,
        ]
        .into_iter()
        .find(|t| t.name() == name)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Comparison {
    Lt,
    Le,
    Eq,
    Ge,
    Gt,
}

impl Comparison {
    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Comparison::Lt => lhs < rhs,
            Comparison::Le => lhs <= rhs,
            Comparison::Eq => lhs == rhs,
            Comparison::Ge => lhs >= rhs,
            Comparison::Gt => lhs > rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Comparison::Lt => "<",
            Comparison::Le => "<=",
            Comparison::Eq => "=",
            Comparison::Ge => ">=",
            Comparison::Gt => ">",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Self> {
        [Comparison::Lt, Comparison::Le, Comparison::Eq, Comparison::Ge, Comparison::Gt]
            .into_iter()
            .find(|c| c.symbol() == s)
    }
}

/// One exactly evaluated hypothesis `lhs relation rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub lhs: Rational,
    pub relation: Comparison,
    pub rhs: Rational,
    pub holds: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, lhs: Rational, relation: Comparison, rhs: Rational) -> Self {
        let holds = relation.holds(&lhs, &rhs);
        Self { name: name.into(), lhs, relation, rhs, holds }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `lhs = rhs` in the group while `lhs rhs^-1` is a nontrivial reduced word.
    Relation { lhs: Word, rhs: Word },
    /// A word with at least two distinct generators that is not (pseudo-)Anosov:
    /// on the torus its matrix is `±I`, parabolic (fixing `fixed`) or elliptic.
    NonAnosov { word: Word, fixed: FixedSlope },
}

impl Witness {
    /// The relator `lhs rhs^-1`, or the non-Anosov word itself.
    pub fn word(&self) -> Word {
        match self {
            Witness::Relation { lhs, rhs } => lhs * &rhs.inverse(),
            Witness::NonAnosov { word, .. } => word.clone(),
        }
    }

    /// Re-checks the witness by matrix evaluation.
    pub fn holds_on(&self, curves: &[Slope], exponents: &[u32]) -> Result<bool> {
        match self {
            Witness::Relation { lhs, rhs } => {
                let relator = lhs * &rhs.inverse();
                Ok(!relator.is_empty() && word_matrix(lhs, curves, exponents)? == word_matrix(rhs, curves, exponents)?)
            }
            Witness::NonAnosov { word, fixed } => {
                let m = word_matrix(word, curves, exponents)?;
                Ok(word.distinct_generators() >= 2 && m.trace().abs() <= 2 && fixed_slope(&m) == *fixed)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Theorem { theorem: TheoremTag, parameters: Vec<(String, Rational)>, checks: Vec<Check> },
    Bounded(VerificationReport),
    Witness(Witness),
}

impl Certificate {
    pub fn kind(&self) -> CertificateKind {
        match self {
            Certificate::Theorem { .. } => CertificateKind::Theorem,
            Certificate::Bounded(_) => CertificateKind::BoundedVerification,
            Certificate::Witness(_) => CertificateKind::Witness,
        }
    }
}

/// Torus curves and exponents the verdict was evaluated on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub curves: Vec<Slope>,
    pub exponents: Vec<u32>,
}

impl Realization {
    pub fn matrix(&self, word: &Word) -> Result<UnimodularMatrix> {
        word_matrix(word, &self.curves, &self.exponents)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub question: Question,
    pub status: Status,
    pub certificate: Certificate,
    pub realization: Option<Realization>,
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn new(question: Question, status: Status, certificate: Certificate) -> Self {
        Self { question, status, certificate, realization: None, notes: Vec::new() }
    }

    pub fn realized(mut self, curves: Vec<Slope>, exponents: Vec<u32>) -> Self {
        self.realization = Some(Realization { curves, exponents });
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn kind(&self) -> CertificateKind {
        self.certificate.kind()
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.certificate {
            Certificate::Witness(w) => Some(w),
            _ => None,
        }
    }

    /// `Some(true)` if the witness checks out on the realization, `None` when
    /// there is no witness or no realization.
    pub fn check_witness(&self) -> Result<Option<bool>> {
        match (self.witness(), &self.realization) {
            (Some(w), Some(r)) => w.holds_on(&r.curves, &r.exponents).map(Some),
            _ => Ok(None),
        }
    }
}
