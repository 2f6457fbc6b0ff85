use std::path::PathBuf;

use thiserror::Error;

/// Everything that can go wrong between reading user input and writing files.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("unbound variable `{0}`")]
    Unbound(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("numeric failure: {0}")]
    Numeric(rfa_core::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

impl CliError {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Self::Parse {
            offset,
            message: message.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Self::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit status: 2 for bad input, 3 for numeric aborts, 4 for I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Parse { .. } | Self::Config(_) | Self::Unbound(_) => 2,
            Self::DivisionByZero | Self::Domain(_) | Self::Numeric(_) => 3,
            Self::Io { .. } => 4,
        }
    }
}

impl From<rfa_core::Error> for CliError {
    fn from(e: rfa_core::Error) -> Self {
        use rfa_core::Error as E;
        match e {
            E::DivisionByZero => Self::DivisionByZero,
            E::Domain(m) => Self::Domain(m),
            E::UndefinedArgument => Self::Domain("argument of zero is undefined".into()),
            E::InvalidBasis(m) => Self::Config(format!("invalid basis: {m}")),
            E::SymmetricBasis => Self::Config("basis number is symmetric".into()),
            E::NonSingletonCore => Self::Config("basis 1-level is not a single point".into()),
            other => Self::Numeric(other),
        }
    }
}
