//! Graphs, solutions, feasibility predicates for the three variants, legal
//! token moves and the sequence verifier.

mod graph;
mod instance;
mod moves;
mod property;
mod sequence;
mod solution;

pub use graph::{Edge, Graph};
pub use instance::Instance;
pub use moves::{is_feasible_move, neighbors, ElementUniverse, Rule};
pub use property::{check_property, diameter_at_most_two, FeasibilityChecker, PropertySpec, Variant};
pub use sequence::{verify_sequence, ReconfigSequence, SequenceViolation, ViolationReason};
pub(crate) use solution::sorted_difference;
pub use solution::{Solution, SolutionKind};
