use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use subreconf::{dispatch, DispatchConfig};

use super::Output;
use crate::error::{CliError, CliResult};
use crate::format::load_instance;

#[derive(Clone, Debug, Default)]
pub struct BenchOptions {
    pub config: DispatchConfig,
    pub csv: bool,
    /// Leave out the time column so that reports are reproducible.
    pub no_timing: bool,
}

/// One line of the bench table.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub instance: String,
    pub solver: String,
    /// `YES`, `NO`, `BUDGET_EXCEEDED` or `ERROR`.
    pub verdict: String,
    pub steps: Option<usize>,
    pub nodes: Option<usize>,
    pub time_ms: f64,
    pub error: Option<String>,
}

fn run_one(path: &Path, config: &DispatchConfig) -> BenchRow {
    let instance = path.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default();
    let start = Instant::now();
    let result = load_instance(path).and_then(|inst| Ok(dispatch(&inst, config)?));
    let time_ms = start.elapsed().as_secs_f64() * 1e3;
    match result {
        Ok(out) => BenchRow {
            instance,
            solver: out.solver.to_string(),
            verdict: out.verdict.label().to_string(),
            steps: out.verdict.sequence().map(|s| s.moves()),
            nodes: out.nodes,
            time_ms,
            error: None,
        },
        Err(e) => BenchRow {
            instance,
            solver: "-".into(),
            verdict: "ERROR".into(),
            steps: None,
            nodes: None,
            time_ms,
            error: Some(e.to_string()),
        },
    }
}

fn opt(x: Option<usize>) -> String {
    x.map_or_else(|| "-".into(), |v| v.to_string())
}

/// Runs every `*.json` file in `dir` in parallel and prints a table sorted
/// by file name. Per-file failures become `ERROR` rows; the run goes on.
pub fn bench(dir: &Path, opts: &BenchOptions) -> CliResult<Output> {
    let entries = fs::read_dir(dir).map_err(|e| CliError::NoInput(format!("{}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let rows: Vec<BenchRow> = files.par_iter().map(|p| run_one(p, &opts.config)).collect();

    let mut header = vec!["instance", "solver", "verdict", "steps", "nodes"];
    if !opts.no_timing {
        header.push("time_ms");
    }
    let table: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let mut cells = vec![r.instance.clone(), r.solver.clone(), r.verdict.clone(), opt(r.steps), opt(r.nodes)];
            if !opts.no_timing {
                cells.push(format!("{:.3}", r.time_ms));
            }
            cells
        })
        .collect();

    let mut stdout = String::new();
    if opts.csv {
        stdout.push_str(&header.join(","));
        stdout.push('\n');
        for cells in &table {
            stdout.push_str(&cells.join(","));
            stdout.push('\n');
        }
    } else {
        let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
        for cells in &table {
            for (w, c) in widths.iter_mut().zip(cells) {
                *w = (*w).max(c.len());
            }
        }
        let line = |cells: Vec<&str>| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        stdout.push_str(&line(header.clone()));
        for cells in &table {
            stdout.push_str(&line(cells.iter().map(String::as_str).collect()));
        }
    }
    let stderr = rows.iter().filter_map(|r| r.error.as_ref().map(|e| format!("{}: {e}\n", r.instance))).collect();
    Ok(Output { stdout, stderr, code: 0 })
}
