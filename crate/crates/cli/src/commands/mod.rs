mod bench;
mod reduce;
mod rgraph;
mod solve;
mod verify;

pub use bench::{bench, BenchOptions, BenchRow};
pub use reduce::{reduce, ReduceOptions, SourceFile};
pub use rgraph::{rgraph, to_dot};
pub use solve::{solve, RunReport, SolveOptions};
pub use verify::verify;

use subreconf::OracleBudget;

use crate::error::{CliError, CliResult};

/// Environment variable overriding the default candidate budget.
pub const BUDGET_ENV: &str = "RECONFIG_BUDGET";

/// What a command prints and how the process should exit.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn new(stdout: String, code: i32) -> Output {
        Output { stdout, stderr: String::new(), code }
    }
}

/// The oracle budget from `--budget`, else `RECONFIG_BUDGET`, else the
/// library default.
pub fn resolve_budget(flag: Option<u64>) -> CliResult<OracleBudget> {
    let value = match flag {
        Some(b) => Some(b),
        None => match std::env::var(BUDGET_ENV) {
            Ok(s) => Some(
                s.trim()
                    .parse::<u64>()
                    .map_err(|_| CliError::Usage(format!("{BUDGET_ENV}=`{s}` is not a candidate count")))?,
            ),
            Err(_) => None,
        },
    };
    match value {
        Some(b) => Ok(OracleBudget::new(b, OracleBudget::DEFAULT_MAX_K)?),
        None => Ok(OracleBudget::default()),
    }
}
