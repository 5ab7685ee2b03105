use std::path::PathBuf;

/// Errors that stop a run before any verdict: bad input, bad configuration,
/// or a core operation rejecting its arguments. Failed identities are not
/// errors; they are reports.
#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{path}: {message}")]
    Parse { path: PathBuf, message: String },
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("check `{check}`: {message}")]
    BadParam { check: String, message: String },
    #[error("check `{check}`: {source}")]
    Core { check: String, source: workbench_core::Error },
}

impl RunError {
    pub(crate) fn param(check: &str, message: impl Into<String>) -> Self {
        RunError::BadParam { check: check.into(), message: message.into() }
    }
}
