//! Subgraph reconfiguration.
//!
//! Given a graph, a structure property and two same-size solutions (vertex
//! or edge subsets), decide whether one can be transformed into the other
//! by moving one token at a time while every intermediate solution stays
//! feasible, and produce a witness sequence.
//!
//! * [`graph_core`]: graphs, solutions, feasibility and legal moves.
//! * [`oracle`]: the general reconfiguration-graph search, exponential only
//!   in the solution size.
//! * [`solvers`]: polynomial algorithms for the tractable cases and the
//!   dispatcher that picks one.
//! * [`reductions`]: hardness gadgets that turn source problems into
//!   reconfiguration instances.

pub mod error;
pub mod graph_core;
pub mod oracle;
pub mod reductions;
pub mod solvers;
mod verdict;

pub use error::{Error, Result};
pub use graph_core::{
    check_property, is_feasible_move, neighbors, verify_sequence, Edge, Graph, Instance, PropertySpec,
    ReconfigSequence, Rule, Solution, SolutionKind, Variant,
};
pub use oracle::{OracleBudget, ReconfigGraph};
pub use solvers::{dispatch, DispatchConfig, Outcome, SolverKind};
pub use verdict::Verdict;
