use std::fmt;

use crate::paths::Family;

/// A violated definitional clause, optionally pinned to a 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Violation {
    pub clause: &'static str,
    pub position: Option<usize>,
}

impl Violation {
    pub fn new(clause: &'static str) -> Self {
        Violation { clause, position: None }
    }

    pub fn at(clause: &'static str, position: usize) -> Self {
        Violation { clause, position: Some(position) }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.position {
            Some(p) => write!(f, "{} at position {}", self.clause, p),
            None => f.write_str(self.clause),
        }
    }
}

pub(crate) fn join_violations(vs: &[Violation]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("syntax error in {family} text at token {position}: unexpected {token:?}")]
    Syntax {
        family: Family,
        token: String,
        position: usize,
    },

    #[error("invalid {family}: {}", join_violations(.violations))]
    Invariant {
        family: Family,
        violations: Vec<Violation>,
    },

    #[error("path is not little: D step starts on the diagonal at step {position}")]
    NotLittle { position: usize },

    #[error("height sequence not in raw form: {0}")]
    NotRaw(Violation),

    #[error("height sequence not lonely-free: {0}")]
    NotLonelyFree(Violation),

    #[error("invalid growth sequence: {0}")]
    InvalidGrowthSeq(Violation),

    #[error("rewriting fixed point is outside the bijection's image: {0}")]
    NotInvertible(Violation),

    #[error("invalid bounded sequence: {0}")]
    InvalidSequence(Violation),

    #[error("malformed Kimberling path: {0}")]
    MalformedPath(Violation),

    #[error("coloring assertion failed at unit {position}: {reason}")]
    ColoringAssertion { reason: &'static str, position: usize },

    #[error("inversion failed at token {position}: {reason}")]
    InversionFailure { reason: &'static str, position: usize },

    #[error("object limit of {limit} exceeded")]
    ResourceLimit { limit: u64 },

    #[error("exact count overflowed 64 bits")]
    Overflow,

    #[error("size {size} does not apply to family {family}")]
    SizeMismatch { family: Family, size: String },

    #[error("reference file line {line}: {reason}")]
    FileFormat { line: usize, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
