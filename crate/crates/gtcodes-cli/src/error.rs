//! Machine-readable CLI errors: every failure is printed to stderr as a JSON
//! object with a stable `kind` before the process exits nonzero.

use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct CliError {
    pub kind: String,
    pub message: String,
}

impl CliError {
    pub fn new(kind: &str, message: impl Into<String>) -> CliError {
        CliError {
            kind: kind.into(),
            message: message.into(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::json!({ "error": self }).to_string()
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.kind, self.message)
    }
}

impl From<gtcodes::Error> for CliError {
    fn from(e: gtcodes::Error) -> CliError {
        let kind = match &e {
            gtcodes::Error::NotPrime(_)
            | gtcodes::Error::FieldTooLarge { .. }
            | gtcodes::Error::InvalidModulus(_)
            | gtcodes::Error::NotPrimitive { .. } => "bad-field",
            gtcodes::Error::ExponentOutOfRange { .. }
            | gtcodes::Error::DimensionMismatch { .. }
            | gtcodes::Error::EmptySupport => "bad-exponents",
            gtcodes::Error::BudgetExceeded { .. } => "budget-exceeded",
            _ => "internal",
        };
        CliError::new(kind, e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::new("io", e.to_string())
    }
}
