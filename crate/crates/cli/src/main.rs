use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{error::ErrorKind, Parser, Subcommand};
use subreconf::reductions::ReductionKind;
use subreconf::{DispatchConfig, SolverKind};
use subreconf_cli::commands::{self, resolve_budget, BenchOptions, Output, ReduceOptions, SolveOptions};
use subreconf_cli::format::VariantName;
use subreconf_cli::{exit, CliResult};

/// Subgraph reconfiguration: decide whether one solution can be turned
/// into another by single token moves.
///
/// Exit codes: 0 YES/accepted, 1 NO/rejected, 2 budget exceeded, 64 usage
/// error, 65 invalid input data, 66 unreadable input, 70 failed --check.
#[derive(Parser)]
#[command(name = "subreconf", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide reachability for an instance file.
    Solve {
        instance: PathBuf,
        /// auto, oracle, edge-cycle, edge-clique, edge-biclique, edge-tree,
        /// spanning-tree or spanning-biclique.
        #[arg(long, default_value = "auto")]
        solver: SolverKind,
        /// Oracle candidate budget; overrides RECONFIG_BUDGET.
        #[arg(long)]
        budget: Option<u64>,
        /// Largest hub side handed to the spanning-biclique solver.
        #[arg(long, default_value_t = 3)]
        max_hub_size: usize,
        /// Print the witness, one solution per line.
        #[arg(long)]
        emit_sequence: bool,
        /// Print a JSON report instead.
        #[arg(long)]
        json: bool,
    },
    /// Check a sequence file against an instance.
    Verify { instance: PathBuf, sequence: PathBuf },
    /// Build a hardness gadget from a source-problem file.
    Reduce {
        kind: ReductionKind,
        source: PathBuf,
        /// induced or spanning, for the shortest-path gadgets.
        #[arg(long, value_parser = parse_variant)]
        variant: Option<VariantName>,
        /// Write the instance here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the vertex map and named gadget vertices here.
        #[arg(long)]
        annotation: Option<PathBuf>,
        /// Solve both sides exhaustively and compare verdicts.
        #[arg(long)]
        check: bool,
        /// Oracle candidate budget for --check.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Reconfiguration graph statistics and DOT export.
    Rgraph {
        instance: PathBuf,
        /// Write the graph in DOT format to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Oracle candidate budget.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Solve every *.json instance in a directory.
    Bench {
        dir: PathBuf,
        /// Comma-separated output with a header row.
        #[arg(long)]
        csv: bool,
        /// Leave out the time column, so reports are reproducible.
        #[arg(long)]
        no_timing: bool,
        /// Solver for every instance, as for `solve`.
        #[arg(long, default_value = "auto")]
        solver: SolverKind,
        /// Oracle candidate budget.
        #[arg(long)]
        budget: Option<u64>,
    },
}

fn parse_variant(s: &str) -> Result<VariantName, String> {
    match s {
        "edge" => Ok(VariantName::Edge),
        "induced" => Ok(VariantName::Induced),
        "spanning" => Ok(VariantName::Spanning),
        _ => Err(format!("unknown variant `{s}`")),
    }
}

fn run(command: Command) -> CliResult<Output> {
    match command {
        Command::Solve { instance, solver, budget, max_hub_size, emit_sequence, json } => {
            let opts = SolveOptions { solver, budget: resolve_budget(budget)?, max_hub_size, emit_sequence, json };
            commands::solve(&instance, &opts)
        }
        Command::Verify { instance, sequence } => commands::verify(&instance, &sequence),
        Command::Reduce { kind, source, variant, out, annotation, check, budget } => {
            let opts = ReduceOptions { variant, out, annotation, check, budget: resolve_budget(budget)? };
            commands::reduce(kind, &source, &opts)
        }
        Command::Rgraph { instance, dot, budget } => {
            commands::rgraph(&instance, dot.as_deref(), &resolve_budget(budget)?)
        }
        Command::Bench { dir, csv, no_timing, solver, budget } => {
            let config = DispatchConfig { solver, budget: resolve_budget(budget)?, ..DispatchConfig::default() };
            commands::bench(&dir, &BenchOptions { config, csv, no_timing })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(exit::USAGE as u8),
            };
        }
    };
    let code = match run(cli.command) {
        Ok(out) => {
            print!("{}", out.stdout);
            eprint!("{}", out.stderr);
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    let _ = std::io::stdout().flush();
    ExitCode::from(code as u8)
}
