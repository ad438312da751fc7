//! CLI error taxonomy and exit-code mapping.
//!
//! Every failure is reported as a machine-readable JSON object on stderr and
//! mapped to a stable exit code: malformed input documents or flags exit
//! with 2, mathematically invalid requests with 3, and numerical failures
//! (non-convergence, step-size underflow, drift gates) with 4.

use crowngraft::crown::CrownError;
use crowngraft::grafting::GraftError;
use crowngraft::matching::MatchError;
use crowngraft::moebius::MoebiusError;
use crowngraft::ode::OdeError;
use crowngraft::polygon::PolygonError;

/// A CLI failure with its reporting category.
#[derive(Debug)]
pub enum CliError {
    /// Unreadable or schema-invalid input (exit 2).
    Schema(String),
    /// Structurally valid input describing an invalid object (exit 3).
    Domain(String),
    /// A numerical routine failed to deliver (exit 4).
    Numerical(String),
    /// File system trouble (exit 1).
    Io(String),
}

impl CliError {
    /// Stable process exit code.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Schema(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Numerical(_) => 4,
        }
    }

    /// Machine-readable category name.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Io(_) => "io",
            CliError::Schema(_) => "schema",
            CliError::Domain(_) => "domain",
            CliError::Numerical(_) => "numerical",
        }
    }

    /// Human-readable message.
    pub fn message(&self) -> &str {
        match self {
            CliError::Io(m) | CliError::Schema(m) | CliError::Domain(m) | CliError::Numerical(m) => m,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.kind(), self.message())
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Schema(e.to_string())
    }
}

impl From<MoebiusError> for CliError {
    fn from(e: MoebiusError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<PolygonError> for CliError {
    fn from(e: PolygonError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<GraftError> for CliError {
    fn from(e: GraftError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<CrownError> for CliError {
    fn from(e: CrownError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<MatchError> for CliError {
    fn from(e: MatchError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<OdeError> for CliError {
    fn from(e: OdeError) -> Self {
        match e {
            OdeError::ConfigurationInvalid(_) => CliError::Domain(e.to_string()),
            _ => CliError::Numerical(e.to_string()),
        }
    }
}
