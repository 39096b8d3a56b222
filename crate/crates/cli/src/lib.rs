//! Command-line front end for `subreconf`: instance files, solving,
//! sequence checking, reduction output, reconfiguration-graph export and a
//! small benchmark runner.
//!
//! Every command returns an [`commands::Output`] rather than printing, so
//! the binary stays a thin wrapper and tests can call commands directly.

pub mod commands;
pub mod error;
pub mod format;

pub use error::{exit, CliError, CliResult};
pub use format::InstanceFile;
