use serde::Serialize;

/// A failed command, classified by exit status.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Disconnected(String),
    #[error("{0}")]
    Range(String),
    #[error("{0}")]
    Numeric(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Disconnected(_) => 3,
            CliError::Range(_) => 4,
            CliError::Numeric(_) => 5,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::Disconnected(_) => "disconnected",
            CliError::Range(_) => "range",
            CliError::Numeric(_) => "numeric",
        }
    }

    /// `{"error": {"kind": ..., "code": ..., "message": ...}}`
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Body<'a> {
            kind: &'a str,
            code: i32,
            message: String,
        }
        #[derive(Serialize)]
        struct Wrapper<'a> {
            error: Body<'a>,
        }
        let w = Wrapper {
            error: Body {
                kind: self.kind(),
                code: self.exit_code(),
                message: self.to_string(),
            },
        };
        serde_json::to_string_pretty(&w).expect("error object serializes")
    }
}

impl From<resistnet_core::Error> for CliError {
    fn from(e: resistnet_core::Error) -> Self {
        use resistnet_core::Error as E;
        let msg = e.to_string();
        match e {
            E::Disconnected { .. } | E::MultipleZeroModes { .. } => CliError::Disconnected(msg),
            E::IndexOutOfRange { .. } | E::OutOfRange(_) | E::SameNode(_) => CliError::Range(msg),
            E::NoConvergence { .. } | E::SingularReducedSystem | E::QuadratureFailure(_) => CliError::Numeric(msg),
            E::EmptyNetwork | E::NonPositiveResistance { .. } | E::SelfLoop { .. } | E::InvalidLattice(_) => {
                CliError::Parse(msg)
            }
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
