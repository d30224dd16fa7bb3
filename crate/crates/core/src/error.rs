//! Error and violation types shared by every module.

use std::fmt;

use crate::spheres::Violation;

/// Errors raised by the library.
///
/// Violations of mathematical hypotheses are kept separate from structural
/// problems so that callers (in particular the CLI) can map them to distinct
/// exit statuses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two values from incompatible contexts were combined (different
    /// coefficient fields, different variable counts, wrong vector length).
    Mismatch(String),
    /// An argument is outside the operation's domain (zero weight, zero
    /// divisor, nonpositive orbit count, non-prime characteristic, ...).
    Domain(String),
    /// The operation is not defined for this group (e.g. enumerating the
    /// infinitely many corank-1 subtori of a torus).
    Unsupported(String),
    /// Data failed consistency validation; all violations are carried.
    Invalid(Vec<Violation>),
    /// A theorem hypothesis does not hold for the given input.
    Hypothesis(String),
    /// A bounded search ran out of budget without reaching a conclusion.
    SearchExhausted { bound: u64 },
    /// The requested search would enumerate too many candidates.
    Budget { candidates: u128, limit: u128 },
    /// Exponent arithmetic overflowed.
    Overflow(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Mismatch(msg) => write!(f, "structural mismatch: {msg}"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
            Error::Invalid(violations) => {
                write!(f, "invalid data ({} violation(s)):", violations.len())?;
                for v in violations {
                    write!(f, " [{v}]")?;
                }
                Ok(())
            }
            Error::Hypothesis(msg) => write!(f, "hypothesis violation: {msg}"),
            Error::SearchExhausted { bound } => {
                write!(
                    f,
                    "bounded search exhausted: no witness of size <= {bound} \
                     (not a mathematical conclusion)"
                )
            }
            Error::Budget { candidates, limit } => {
                write!(
                    f,
                    "search budget exceeded: {candidates} candidate multisets, limit {limit}"
                )
            }
            Error::Overflow(msg) => write!(f, "arithmetic overflow: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
