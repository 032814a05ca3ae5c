use hcobord::magnus::MagnusError;
use hcobord::manifold::ManifoldError;
use hcobord::seifert::SeifertError;
use thiserror::Error;

/// Failure classes, each with a stable exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Unknown(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Unknown(_) => 4,
        }
    }

    pub fn from_seifert(input: &str, e: SeifertError) -> Self {
        match e {
            SeifertError::Parse(p) => {
                CliError::Parse(format!("cannot parse Seifert notation\n{}", p.caret_diagnostic(input)))
            }
            other => CliError::Domain(other.to_string()),
        }
    }
}

impl From<MagnusError> for CliError {
    fn from(e: MagnusError) -> Self {
        match e {
            MagnusError::UnknownCatalogName(_) => CliError::Unknown(e.to_string()),
            other => CliError::Domain(other.to_string()),
        }
    }
}

impl From<ManifoldError> for CliError {
    fn from(e: ManifoldError) -> Self {
        match e {
            ManifoldError::Magnus(m) => m.into(),
            other => CliError::Domain(other.to_string()),
        }
    }
}
