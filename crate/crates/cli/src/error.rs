use aniso_monogenic::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("numerical breakdown: {0}")]
    Numerical(String),
    #[error("{0} suite(s) failed")]
    SuiteFailure(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::SuiteFailure(_) => 1,
            Self::Validation(_) => 2,
            Self::Numerical(_) => 3,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::NumericalBreakdown(msg) => Self::Numerical(msg),
            CoreError::InvalidParam(p) => Self::Validation(format!("p must satisfy p > 0 and p != 1 (got {p})")),
            other => Self::Validation(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}
