use thiserror::Error;

use crate::report::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("malformed algebra: {0}")]
    Malformed(String),

    #[error("size {size} exceeds the cap of {cap} ({what})")]
    SizeCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("empty word")]
    EmptyWord,

    #[error("empty generating set")]
    EmptySubset,

    #[error("not a group: {0}")]
    NotAGroup(Violation),

    #[error("not a filter: {0}")]
    NotAFilter(Violation),

    #[error("not a congruence: {0}")]
    NotACongruence(Violation),

    #[error("subset is not a subuniverse: {0}")]
    NotClosed(Violation),

    #[error("term uses `{0}`, which this structure does not provide")]
    UnboundSymbol(String),

    #[error("arity mismatch: {0}")]
    Arity(String),

    #[error("name clash on `{0}`")]
    NameClash(String),

    #[error("lattice error: {0}")]
    Lattice(String),

    #[error("construction precondition failed: {0}")]
    Hypothesis(String),

    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),

    /// Two independent computations of the same quantity disagree. This
    /// never happens for a valid pseudo-BCI-algebra and points to a bug
    /// or to input that skipped verification.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
