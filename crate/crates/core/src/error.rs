use thiserror::Error;

use crate::validate::ValidationReport;

/// Errors raised by the engine.
///
/// Law violations of otherwise well-formed tables are reported through
/// [`ValidationReport`]; `Structural` is reserved for tables whose shape is
/// wrong (wrong dimensions, indices out of range).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("structural error at {path}: {message}")]
    Structural { path: String, message: String },

    #[error("law violations: {0}")]
    Laws(ValidationReport),

    #[error("objects are over different monoids")]
    MonoidMismatch,

    #[error("side mismatch: expected {expected}, found {found}")]
    SideMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("maps do not compose or share the required endpoints: {0}")]
    Incompatible(String),

    #[error("the square does not commute")]
    NotCommuting,

    #[error("map is not a monomorphism")]
    NotMono,

    #[error("relation is not compatible with the action: {a} ~ {b} but {a}·{s} !~ {b}·{s}")]
    NotCongruence { a: usize, b: usize, s: usize },

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("carrier of size {size} exceeds the exhaustive limit {limit}")]
    TooLarge { size: usize, limit: usize },

    #[error("the monoid has no left zero")]
    NoLeftZero,

    #[error("the monoid has no zero")]
    NoZero,

    #[error("act is not centred ({fixed} fixed points)")]
    NotCentred { fixed: usize },

    #[error("coproduct of centred acts must be requested as a centred coproduct")]
    CentredCoproductRequired,

    #[error("no member of the class maps to the act, so it has no precover")]
    NoPrecover,

    #[error("class descriptor cannot be used here: {0}")]
    Descriptor(String),

    #[error("bound must be at least 1")]
    InvalidBound,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn structural(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Structural {
        path: path.into(),
        message: message.into(),
    }
}
