//! Crate-wide error type.
//!
//! All fallible operations in this crate return [`Error`]. Variants are
//! grouped by the layer that raises them: token/structure validation,
//! text parsing, size guards, and operation preconditions.

use std::fmt;

use crate::automaton::Violation;

/// Errors raised by automaton construction, parsing, semantics, and
/// transformations.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A token (state name or alphabet symbol) violates the lexical rules.
    #[error("invalid token {token:?}: {reason}")]
    BadToken {
        /// The offending token text.
        token: String,
        /// Why the token was rejected.
        reason: String,
    },

    /// Structural validation of an automaton failed.
    #[error("invalid automaton: {}", format_violations(.0))]
    InvalidAutomaton(Vec<Violation>),

    /// A textual input (document, word, formula) could not be parsed.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        /// 1-based line of the offending input.
        line: usize,
        /// 1-based column of the offending input.
        column: usize,
        /// Description of the problem.
        message: String,
    },

    /// A lasso word was malformed (empty cycle, untokenizable text, …).
    #[error("invalid word: {0}")]
    Word(String),

    /// A construction or analysis would exceed a size limit.
    #[error("size guard exceeded: {what} is {size}, limit {limit}")]
    GuardExceeded {
        /// What was measured (e.g. "product vertices").
        what: String,
        /// The measured size.
        size: usize,
        /// The configured limit.
        limit: usize,
    },

    /// An operation's precondition does not hold for the given input.
    #[error("{operation}: {requirement}")]
    Unsupported {
        /// The operation that refused.
        operation: String,
        /// The precondition that failed, in user-facing terms.
        requirement: String,
    },
}

impl Error {
    /// Convenience constructor for [`Error::Unsupported`].
    pub fn unsupported(operation: impl Into<String>, requirement: impl Into<String>) -> Self {
        Error::Unsupported {
            operation: operation.into(),
            requirement: requirement.into(),
        }
    }

    /// Convenience constructor for [`Error::GuardExceeded`].
    pub fn guard(what: impl Into<String>, size: usize, limit: usize) -> Self {
        Error::GuardExceeded {
            what: what.into(),
            size,
            limit,
        }
    }
}

fn format_violations(violations: &[Violation]) -> String {
    let mut out = String::new();
    for (i, v) in violations.iter().enumerate() {
        if i > 0 {
            out.push_str("; ");
        }
        out.push_str(&v.to_string());
    }
    if out.is_empty() {
        out.push_str("unspecified violation");
    }
    out
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Parse error helper carrying a position.
    pub fn parse_at(line: usize, column: usize, message: impl fmt::Display) -> Self {
        Error::Parse {
            line,
            column,
            message: message.to_string(),
        }
    }
}
