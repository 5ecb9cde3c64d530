//! Exact certificates for groups generated by powers of Dehn twists.
//!
//! The crate decides, where closed-form results apply, whether
//! `G = <D_{a_1}^{n_1}, ..., D_{a_h}^{n_h}>` is free and whether it is
//! relatively pseudo-Anosov. Curves are handled either abstractly, through
//! their pairwise geometric intersection numbers, or concretely as slopes on
//! the torus, where the mapping class group is `SL(2,Z)` and everything can be
//! checked by integer matrix arithmetic.
//!
//! Layout:
//! - [`torus`]: slopes, unimodular matrices, twist matrices, fixed slopes.
//! - [`word`]: reduced words in the generators, cyclic reduction, canonical forms.
//! - [`system`]: curve systems given by intersection matrices, norms, basic inequalities.
//! - [`pingpong`]: ping-pong regions and bounded verification of the ping-pong variants.
//! - [`bounds`]: exponent bound calculators.
//! - [`classify`]: closed-form classifiers emitting [`Verdict`]s.
//! - [`oracle`]: brute-force relation and reducible-element search on the torus.
//! - [`consistency`]: cross-checks of verdicts against the oracle.
//!
//! All arithmetic is exact. The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod classify;
pub mod consistency;
mod error;
pub mod oracle;
pub mod pingpong;
pub mod rational;
pub mod system;
pub mod torus;
pub mod verdict;
pub mod word;

pub use error::{Error, Result};
pub use rational::Rational;
pub use system::{CurveSystem, ExponentVector};
pub use torus::{FixedSlope, Slope, UnimodularMatrix};
pub use verdict::{Certificate, CertificateKind, Question, Status, Verdict, Witness};
pub use word::{Syllable, Word};
