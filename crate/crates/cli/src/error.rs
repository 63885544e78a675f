use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),

    #[error("numeric failure: {0}")]
    Numeric(gravphase_core::Error),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl From<gravphase_core::Error> for CliError {
    fn from(e: gravphase_core::Error) -> Self {
        use gravphase_core::Error as E;
        match e {
            // Rejected inputs are configuration problems, not numerical ones.
            E::InvalidGrid(m) | E::InvalidParameter(m) => CliError::Config(m),
            other => CliError::Numeric(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Io(_) => 2,
            CliError::Numeric(_) => 3,
        }
    }
}
