use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{path}: no FASTA record found")]
    EmptyFasta { path: PathBuf },
    #[error("invalid argument: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] klcf::Error),
}

impl CliError {
    /// Process exit status: 2 for resource limits, 64 for bad arguments,
    /// 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(klcf::Error::Resource { .. }) => 2,
            CliError::Usage(_) | CliError::Core(klcf::Error::InvalidParameter(_)) => 64,
            _ => 1,
        }
    }

    /// Extra advice printed after the error message, if any.
    pub fn hint(&self) -> Option<&'static str> {
        match self {
            CliError::Core(klcf::Error::Resource { what, .. }) if what.contains("lookup table") => {
                Some("hint: use a smaller --block-bits, or rerun with --algo strided")
            }
            CliError::Core(klcf::Error::Resource { .. }) => {
                Some("hint: raise --mem-budget or --pieces, or rerun with --algo strided")
            }
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
