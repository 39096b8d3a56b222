use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use subreconf::{dispatch, DispatchConfig, OracleBudget, SolverKind, Verdict};

use super::Output;
use crate::error::{exit, CliResult};
use crate::format::{format_sequence, load_instance};

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub solver: SolverKind,
    pub budget: OracleBudget,
    pub max_hub_size: usize,
    pub emit_sequence: bool,
    /// Print a [`RunReport`] as JSON instead of text.
    pub json: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        let d = DispatchConfig::default();
        SolveOptions {
            solver: d.solver,
            budget: d.budget,
            max_hub_size: d.max_hub_size,
            emit_sequence: false,
            json: false,
        }
    }
}

/// One solver run. `sequence` is present iff the verdict is YES.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub verdict: &'static str,
    pub steps: Option<usize>,
    pub sequence: Option<Vec<String>>,
    pub nodes: Option<usize>,
    pub edges: Option<usize>,
    pub wall_time_ms: f64,
    pub solver: &'static str,
}

pub fn verdict_code(v: &Verdict) -> i32 {
    match v {
        Verdict::Yes(_) => exit::YES,
        Verdict::No => exit::NO,
        Verdict::BudgetExceeded => exit::BUDGET,
    }
}

pub fn solve(path: &Path, opts: &SolveOptions) -> CliResult<Output> {
    let inst = load_instance(path)?;
    let config = DispatchConfig { budget: opts.budget, max_hub_size: opts.max_hub_size, solver: opts.solver };
    let start = Instant::now();
    let out = dispatch(&inst, &config)?;
    let elapsed = start.elapsed();
    let code = verdict_code(&out.verdict);
    if opts.json {
        let report = RunReport {
            verdict: out.verdict.label(),
            steps: out.verdict.sequence().map(|s| s.moves()),
            sequence: out.verdict.sequence().map(|s| s.steps().iter().map(ToString::to_string).collect()),
            nodes: out.nodes,
            edges: out.edges,
            wall_time_ms: elapsed.as_secs_f64() * 1e3,
            solver: out.solver,
        };
        let mut text = serde_json::to_string_pretty(&report).expect("reports always serialize");
        text.push('\n');
        return Ok(Output::new(text, code));
    }
    let mut text = format!("{}\nsolver={}", out.verdict, out.solver);
    if let (Some(n), Some(e)) = (out.nodes, out.edges) {
        text.push_str(&format!(" nodes={n} edges={e}"));
    } else if let Some(n) = out.nodes {
        text.push_str(&format!(" nodes={n}"));
    }
    text.push('\n');
    if opts.emit_sequence {
        if let Some(seq) = out.verdict.sequence() {
            text.push_str(&format_sequence(seq));
        }
    }
    Ok(Output::new(text, code))
}
