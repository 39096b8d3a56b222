use thiserror::Error;

use crate::graph_core::{Edge, SolutionKind};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("edge {0} is not in the graph")]
    MissingEdge(Edge),
    #[error("solution lists element {0} more than once")]
    DuplicateElement(String),
    #[error("expected a {expected} solution, found a {found} solution")]
    KindMismatch { expected: SolutionKind, found: SolutionKind },
    #[error("invalid property: {0}")]
    InvalidProperty(String),
    #[error("source solution is infeasible")]
    InfeasibleSource,
    #[error("target solution is infeasible")]
    InfeasibleTarget,
    #[error("invalid budget: {0}")]
    InvalidBudget(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("solver {solver} does not apply: {reason}")]
    NotApplicable { solver: &'static str, reason: String },
    #[error("invalid source problem: {0}")]
    InvalidSourceProblem(String),
    #[error("vertex {t} is unreachable from vertex {s}")]
    Unreachable { s: usize, t: usize },
}
