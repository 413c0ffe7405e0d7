use std::path::PathBuf;

use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A real argument fell outside the domain of the function it was passed to.
    #[error("{function}: argument {value} outside domain {domain}")]
    Domain {
        function: &'static str,
        value: f64,
        domain: &'static str,
    },

    /// A distortion parameter violates its family constraint.
    #[error("invalid {family} parameter {name}={value}: must be {constraint}")]
    InvalidParameter {
        family: &'static str,
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },

    /// A distortion spec string could not be parsed.
    #[error("cannot parse distortion spec {input:?}: {reason}")]
    SpecSyntax { input: String, reason: String },

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("values must be sorted in non-increasing order (position {position})")]
    Unsorted { position: usize },

    #[error("length mismatch: {values} values but {weights} weights")]
    LengthMismatch { values: usize, weights: usize },

    #[error("reports computed under different distortions: {left} vs {right}")]
    MismatchedDistortion { left: String, right: String },

    #[error("duplicate profile id {0:?}")]
    DuplicateId(String),

    /// Malformed input data. `location` names the line or record.
    #[error("{location}: {message}")]
    Parse { location: String, message: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Process exit code for the CLI: 3 for data validation problems,
    /// 4 for numeric domain problems, 2 for malformed arguments.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::SpecSyntax { .. } => 2,
            Error::Domain { .. } | Error::InvalidParameter { .. } => 4,
            Error::Empty(_)
            | Error::Unsorted { .. }
            | Error::LengthMismatch { .. }
            | Error::MismatchedDistortion { .. }
            | Error::DuplicateId(_)
            | Error::Parse { .. }
            | Error::Io { .. } => 3,
        }
    }
}
