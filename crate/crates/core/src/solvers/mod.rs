//! Polynomial-time algorithms for the tractable settings, and [`dispatch`],
//! which routes an instance to the strongest applicable one.
//!
//! Every YES produced here carries a sequence that passes
//! [`verify_sequence`](crate::graph_core::verify_sequence).

mod biclique;
mod rigid;
mod tree;

use std::fmt;
use std::str::FromStr;

pub use biclique::{aux_adjacent, solve_spanning_biclique_fixed_i, AuxGraph, HubNode};
pub use rigid::{solve_edge_biclique, solve_edge_clique, solve_edge_cycle};
pub use tree::{solve_edge_tree_tj, solve_spanning_tree_tj};

use crate::error::{Error, Result};
use crate::graph_core::{Edge, Graph, Instance, PropertySpec, Rule, Variant};
use crate::oracle::{self, OracleBudget};
use crate::verdict::Verdict;

/// Named solver choice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SolverKind {
    /// Let [`dispatch`] pick.
    Auto,
    Oracle,
    EdgeCycle,
    EdgeClique,
    EdgeBiclique,
    EdgeTree,
    SpanningTree,
    SpanningBiclique,
}

impl SolverKind {
    pub const ALL: [SolverKind; 8] = [
        SolverKind::Auto,
        SolverKind::Oracle,
        SolverKind::EdgeCycle,
        SolverKind::EdgeClique,
        SolverKind::EdgeBiclique,
        SolverKind::EdgeTree,
        SolverKind::SpanningTree,
        SolverKind::SpanningBiclique,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SolverKind::Auto => "auto",
            SolverKind::Oracle => "oracle",
            SolverKind::EdgeCycle => "edge-cycle",
            SolverKind::EdgeClique => "edge-clique",
            SolverKind::EdgeBiclique => "edge-biclique",
            SolverKind::EdgeTree => "edge-tree",
            SolverKind::SpanningTree => "spanning-tree",
            SolverKind::SpanningBiclique => "spanning-biclique",
        }
    }
}

impl fmt::Display for SolverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SolverKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        SolverKind::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| format!("unknown solver `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DispatchConfig {
    pub budget: OracleBudget,
    /// Largest hub-side size for which the fixed-`i` spanning biclique
    /// algorithm is preferred over the oracle.
    pub max_hub_size: usize,
    pub solver: SolverKind,
}

impl Default for DispatchConfig {
    fn default() -> Self {
        DispatchConfig { budget: OracleBudget::default(), max_hub_size: 3, solver: SolverKind::Auto }
    }
}

/// A verdict and how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub verdict: Verdict,
    /// Solver name, or `size-mismatch` when the sizes alone decide NO.
    pub solver: &'static str,
    /// Reconfiguration graph size, when the oracle searched one.
    pub nodes: Option<usize>,
    pub edges: Option<usize>,
}

impl Outcome {
    fn plain(verdict: Verdict, solver: SolverKind) -> Outcome {
        Outcome { verdict, solver: solver.name(), nodes: None, edges: None }
    }
}

/// The solver [`dispatch`] uses for `instance` under automatic selection.
pub fn route(instance: &Instance, max_hub_size: usize) -> SolverKind {
    match (instance.variant(), instance.property(), instance.rule()) {
        (Variant::Edge, PropertySpec::Cycle, _) => SolverKind::EdgeCycle,
        (Variant::Edge, PropertySpec::Clique, _) => SolverKind::EdgeClique,
        (Variant::Edge, PropertySpec::Biclique { .. }, _) => SolverKind::EdgeBiclique,
        (Variant::Edge, PropertySpec::Tree, Rule::Tj) => SolverKind::EdgeTree,
        (Variant::Spanning, PropertySpec::Tree, Rule::Tj) => SolverKind::SpanningTree,
        (Variant::Spanning, PropertySpec::Biclique { i, j }, Rule::Tj) if i.min(j) <= max_hub_size => {
            SolverKind::SpanningBiclique
        }
        _ => SolverKind::Oracle,
    }
}

/// Decides `instance` with the configured solver.
///
/// Differing source and target sizes give NO without any search. A
/// specialized solver named explicitly in `config` that does not fit the
/// instance yields [`Error::NotApplicable`].
pub fn dispatch(instance: &Instance, config: &DispatchConfig) -> Result<Outcome> {
    if instance.source().len() != instance.target().len() {
        return Ok(Outcome { verdict: Verdict::No, solver: "size-mismatch", nodes: None, edges: None });
    }
    let kind = match config.solver {
        SolverKind::Auto => route(instance, config.max_hub_size),
        forced => forced,
    };
    let budget = &config.budget;
    let verdict = match kind {
        SolverKind::Auto => unreachable!("route never returns auto"),
        SolverKind::Oracle => {
            let report = oracle::solve_bfs_report(instance, budget)?;
            return Ok(Outcome {
                verdict: report.verdict,
                solver: SolverKind::Oracle.name(),
                nodes: report.nodes,
                edges: report.edges,
            });
        }
        SolverKind::EdgeCycle => solve_edge_cycle(instance)?,
        SolverKind::EdgeClique => solve_edge_clique(instance)?,
        SolverKind::EdgeBiclique => solve_edge_biclique(instance, budget)?,
        SolverKind::EdgeTree => solve_edge_tree_tj(instance)?,
        SolverKind::SpanningTree => solve_spanning_tree_tj(instance)?,
        SolverKind::SpanningBiclique => solve_spanning_biclique_fixed_i(instance, budget)?,
    };
    Ok(Outcome::plain(verdict, kind))
}

fn require(ok: bool, solver: SolverKind, instance: &Instance) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(not_applicable(solver, instance))
    }
}

fn not_applicable(solver: SolverKind, instance: &Instance) -> Error {
    Error::NotApplicable {
        solver: solver.name(),
        reason: format!("{} variant, {} rule, {}", instance.variant(), instance.rule(), instance.property()),
    }
}

/// Edges from `from` to `to` in which consecutive edges are distinct and
/// share an endpoint, following a shortest path between them. `None` when
/// they lie in different components.
fn edge_walk(g: &Graph, from: Edge, to: Edge) -> Option<Vec<Edge>> {
    let (a, b) = from.endpoints();
    let (c, d) = to.endpoints();
    let path = g.shortest_path_between_sets(&[a, b], &[c, d])?;
    let mut walk = vec![from];
    walk.extend(path.windows(2).map(|w| Edge::new(w[0], w[1])));
    walk.push(to);
    walk.dedup();
    Some(walk)
}
