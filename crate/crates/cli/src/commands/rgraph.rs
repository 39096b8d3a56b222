use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use subreconf::oracle::build_reconfig_graph;
use subreconf::{Error, OracleBudget, ReconfigGraph};

use super::Output;
use crate::error::{exit, CliError, CliResult};
use crate::format::load_instance;

/// Builds the reconfiguration graph and prints `nodes=<a> edges=<b>` and
/// its component count, optionally writing it as DOT.
pub fn rgraph(path: &Path, dot: Option<&Path>, budget: &OracleBudget) -> CliResult<Output> {
    let inst = load_instance(path)?;
    let rg = match build_reconfig_graph(&inst, budget) {
        Ok(rg) => rg,
        Err(Error::BudgetExceeded(why)) => {
            return Ok(Output { stdout: "BUDGET_EXCEEDED\n".into(), stderr: format!("{why}\n"), code: exit::BUDGET })
        }
        Err(e) => return Err(e.into()),
    };
    if let Some(out) = dot {
        fs::write(out, to_dot(&rg)).map_err(|e| CliError::Usage(format!("{}: {e}", out.display())))?;
    }
    let components = rg.component_ids().iter().max().map_or(0, |c| c + 1);
    Ok(Output::new(format!("nodes={} edges={}\ncomponents={components}\n", rg.node_count(), rg.edge_count()), 0))
}

/// Undirected DOT, one node per solution labeled with its canonical form.
/// The source is filled green, the target red, and both gold if equal.
pub fn to_dot(rg: &ReconfigGraph) -> String {
    let mut s = String::from("graph reconfiguration {\n  node [shape=box];\n");
    for (i, sol) in rg.nodes().iter().enumerate() {
        let fill = match (Some(i) == rg.source_idx(), Some(i) == rg.target_idx()) {
            (true, true) => Some("gold"),
            (true, false) => Some("palegreen"),
            (false, true) => Some("lightcoral"),
            (false, false) => None,
        };
        match fill {
            Some(c) => writeln!(s, "  n{i} [label=\"{sol}\", style=filled, fillcolor={c}];"),
            None => writeln!(s, "  n{i} [label=\"{sol}\"];"),
        }
        .unwrap();
    }
    for (a, adj) in rg.adjacency().iter().enumerate() {
        for &b in adj.iter().filter(|&&b| b > a) {
            writeln!(s, "  n{a} -- n{b};").unwrap();
        }
    }
    s.push_str("}\n");
    s
}
