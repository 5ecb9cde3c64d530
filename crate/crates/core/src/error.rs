use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid curve ({p},{q}): slopes must be primitive and nonzero")]
    InvalidCurve { p: i64, q: i64 },

    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("generator index {index} out of range for {h} generators")]
    IndexOutOfRange { index: usize, h: usize },

    #[error("curve has zero norm and lies outside every region")]
    OutsideDomain,

    #[error("invalid curve system: {0}")]
    InvalidSystem(String),

    #[error("invalid ping-pong parameters: {0}")]
    InvalidParams(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("integer overflow in exact arithmetic")]
    Overflow,
}
