use std::fmt;

use serde::Serialize;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// One failed identity, with the basis elements it failed on and both sides
/// of the equation as rendered coordinate vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: String,
    pub witness: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl Violation {
    pub fn new(law: impl Into<String>, witness: Vec<String>, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        Violation {
            law: law.into(),
            witness,
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.law)?;
        if !self.witness.is_empty() {
            write!(f, " at ({})", self.witness.join(", "))?;
        }
        match (self.lhs.is_empty(), self.rhs.is_empty()) {
            (true, true) => Ok(()),
            (false, true) => write!(f, ": {}", self.lhs),
            _ => write!(f, ": {} != {}", self.lhs, self.rhs),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Shapes, fields or text that do not describe a well-formed object.
    #[error("malformed input: {0}")]
    Malformed(String),
    /// A mathematical law failed; every violation found is listed.
    #[error("{context}: {}", summarize(.violations))]
    Violations {
        context: String,
        violations: Vec<Violation>,
    },
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// An argument outside the domain of an operation (e.g. an element not in H_s).
    #[error("domain error: {0}")]
    Domain(String),
    /// A construction that cannot fail on valid input did fail.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

fn summarize(v: &[Violation]) -> String {
    match v {
        [] => "no violations".to_string(),
        [one] => one.to_string(),
        [first, rest @ ..] => format!("{first} (+{} more)", rest.len()),
    }
}

impl Error {
    pub fn violations(context: impl Into<String>, violations: Vec<Violation>) -> Self {
        Error::Violations {
            context: context.into(),
            violations,
        }
    }

    /// The violations carried by this error, if it is a law failure.
    pub fn violation_list(&self) -> &[Violation] {
        match self {
            Error::Violations { violations, .. } => violations,
            _ => &[],
        }
    }
}
