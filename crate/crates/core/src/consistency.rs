//! Cross-checks verdicts against the brute-force oracle on their torus
//! realization. A contradiction means a bug, never a mathematical outcome.

use crate::oracle::{find_reducibles, find_relations, Reducible};
use crate::verdict::{Question, Status, Verdict};
use crate::word::Word;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBounds {
    pub max_syllables: usize,
    pub max_step: u32,
}

impl OracleBounds {
    /// Default relation search for free verdicts.
    pub const FREENESS: Self = Self { max_syllables: 6, max_step: 3 };
    /// Default non-Anosov search for relatively pseudo-Anosov verdicts.
    pub const RELATIVE_PA: Self = Self { max_syllables: 6, max_step: 2 };

    pub fn default_for(question: Question) -> Self {
        match question {
            Question::Freeness => Self::FREENESS,
            Question::RelativePseudoAnosov => Self::RELATIVE_PA,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Contradiction {
    /// A free verdict, yet this word is a relator.
    Relation(Word),
    /// A relatively pseudo-Anosov verdict, yet this word is not Anosov.
    NonAnosov(Reducible),
    /// A negative verdict whose witness fails on its own realization.
    InvalidWitness,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Consistency {
    /// No realization, or an unknown verdict: nothing to check.
    Unchecked,
    /// The oracle found nothing contradicting the verdict.
    Consistent {
        bounds: Option<OracleBounds>,
    },
    Contradicted(Contradiction),
}

impl Consistency {
    pub fn is_contradiction(&self) -> bool {
        matches!(self, Consistency::Contradicted(_))
    }
}

/// Checks `verdict` with the oracle: positive verdicts by a bounded search for
/// counterexamples, negative ones by re-evaluating their witness.
pub fn check_verdict(verdict: &Verdict, bounds: Option<OracleBounds>) -> Result<Consistency> {
    let Some(real) = &verdict.realization else {
        return Ok(Consistency::Unchecked);
    };
    match verdict.status {
        Status::Unknown => Ok(Consistency::Unchecked),
        Status::No => match verdict.check_witness()? {
            Some(false) => Ok(Consistency::Contradicted(Contradiction::InvalidWitness)),
            Some(true) => Ok(Consistency::Consistent { bounds: None }),
            None => Ok(Consistency::Unchecked),
        },
        Status::Yes => {
            let b = bounds.unwrap_or_else(|| OracleBounds::default_for(verdict.question));
            let found = match verdict.question {
                Question::Freeness => find_relations(&real.curves, &real.exponents, b.max_syllables, b.max_step)?
                    .into_iter()
                    .next()
                    .map(Contradiction::Relation),
                Question::RelativePseudoAnosov => {
                    find_reducibles(&real.curves, &real.exponents, b.max_syllables, b.max_step)?
                        .into_iter()
                        .find(|r| !r.is_identity())
                        .map(Contradiction::NonAnosov)
                }
            };
            Ok(match found {
                Some(c) => Consistency::Contradicted(c),
                None => Consistency::Consistent { bounds: Some(b) },
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify_free_2, classify_relpa_2, torus_triple_relpa};
    use crate::verdict::{Certificate, Witness};

    #[test]
    fn verdicts_agree_with_oracle() {
        for v in [
            classify_free_2(1, 2, 2).unwrap(),
            classify_free_2(1, 1, 2).unwrap(),
            classify_relpa_2(2, 1, 2).unwrap(),
            torus_triple_relpa(2, 4, 4).unwrap(),
        ] {
            assert!(!check_verdict(&v, None).unwrap().is_contradiction());
        }
        assert_eq!(check_verdict(&torus_triple_relpa(3, 3, 3).unwrap(), None).unwrap(), Consistency::Unchecked);
    }

    #[test]
    fn tampered_verdicts_are_caught() {
        let mut v = classify_free_2(1, 1, 1).unwrap();
        v.status = Status::Yes;
        assert!(matches!(check_verdict(&v, None).unwrap(), Consistency::Contradicted(Contradiction::Relation(_))));

        let mut v = classify_free_2(1, 1, 1).unwrap();
        v.certificate =
            Certificate::Witness(Witness::Relation { lhs: "a b".parse().unwrap(), rhs: "b a".parse().unwrap() });
        assert_eq!(check_verdict(&v, None).unwrap(), Consistency::Contradicted(Contradiction::InvalidWitness));

        let mut v = torus_triple_relpa(2, 4, 4).unwrap();
        v.status = Status::Yes;
        assert!(matches!(check_verdict(&v, None).unwrap(), Consistency::Contradicted(Contradiction::NonAnosov(_))));
    }
}
