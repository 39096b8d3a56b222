use thiserror::Error;

/// Process exit codes. These are the machine contract of the tool.
pub mod exit {
    pub const YES: i32 = 0;
    pub const NO: i32 = 1;
    pub const BUDGET: i32 = 2;
    /// Command-line misuse (sysexits `EX_USAGE`).
    pub const USAGE: i32 = 64;
    /// Malformed or infeasible input data (`EX_DATAERR`).
    pub const DATA: i32 = 65;
    /// Input file missing or unreadable (`EX_NOINPUT`).
    pub const NO_INPUT: i32 = 66;
    /// A `--check` found source and reduced verdicts disagreeing (`EX_SOFTWARE`).
    pub const SOFTWARE: i32 = 70;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Data(String),
    #[error("{0}")]
    NoInput(String),
    #[error("{0}")]
    Software(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Data(_) => exit::DATA,
            CliError::NoInput(_) => exit::NO_INPUT,
            CliError::Software(_) => exit::SOFTWARE,
        }
    }
}

impl From<subreconf::Error> for CliError {
    fn from(e: subreconf::Error) -> Self {
        match e {
            subreconf::Error::NotApplicable { .. } | subreconf::Error::InvalidBudget(_) => {
                CliError::Usage(e.to_string())
            }
            e => CliError::Data(e.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
