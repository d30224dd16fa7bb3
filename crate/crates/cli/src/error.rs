//! CLI error model: every failure carries a machine-parsable code and maps
//! to one of the documented exit statuses.

use std::fmt;

use cohomlen_core::Error as CoreError;

/// Success.
pub const EXIT_OK: i32 = 0;
/// Usage, argument, or input parsing problems.
pub const EXIT_USAGE: i32 = 64;
/// Data failed mathematical validation or an operation's hypotheses.
pub const EXIT_DATA: i32 = 65;
/// A bounded search ended without a conclusion (exhausted or over budget).
pub const EXIT_SEARCH: i32 = 66;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub exit: i32,
    pub code: &'static str,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            exit: EXIT_USAGE,
            code: "E_USAGE",
            message: message.into(),
        }
    }

    pub fn parse(message: impl Into<String>) -> Self {
        CliError {
            exit: EXIT_USAGE,
            code: "E_PARSE",
            message: message.into(),
        }
    }

    pub fn schema(message: impl Into<String>) -> Self {
        CliError {
            exit: EXIT_USAGE,
            code: "E_SCHEMA",
            message: message.into(),
        }
    }

    pub fn data(message: impl Into<String>) -> Self {
        CliError {
            exit: EXIT_DATA,
            code: "E_DATA",
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.code, self.message)
    }
}

impl std::error::Error for CliError {}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match &e {
            CoreError::Mismatch(_) | CoreError::Domain(_) | CoreError::Overflow(_) => CliError {
                exit: EXIT_DATA,
                code: "E_DATA",
                message: e.to_string(),
            },
            CoreError::Invalid(_) => CliError {
                exit: EXIT_DATA,
                code: "E_DATA",
                message: e.to_string(),
            },
            CoreError::Unsupported(_) => CliError {
                exit: EXIT_DATA,
                code: "E_UNSUPPORTED",
                message: e.to_string(),
            },
            CoreError::Hypothesis(_) => CliError {
                exit: EXIT_DATA,
                code: "E_HYPOTHESIS",
                message: e.to_string(),
            },
            CoreError::SearchExhausted { .. } => CliError {
                exit: EXIT_SEARCH,
                code: "E_SEARCH",
                message: e.to_string(),
            },
            CoreError::Budget { .. } => CliError {
                exit: EXIT_SEARCH,
                code: "E_BUDGET",
                message: e.to_string(),
            },
        }
    }
}
