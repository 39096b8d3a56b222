use std::fmt;

use super::instance::Instance;
use super::moves::{single_legal_swap, SwapError};
use super::solution::Solution;

/// Ordered list of solutions witnessing reachability.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconfigSequence {
    steps: Vec<Solution>,
}

impl ReconfigSequence {
    pub fn new(steps: Vec<Solution>) -> ReconfigSequence {
        ReconfigSequence { steps }
    }

    /// The zero-move sequence `[sol]`.
    pub fn single(sol: Solution) -> ReconfigSequence {
        ReconfigSequence { steps: vec![sol] }
    }

    /// Drops consecutive repeats, which projections and concatenations
    /// can produce.
    pub fn from_steps_dedup(mut steps: Vec<Solution>) -> ReconfigSequence {
        steps.dedup();
        ReconfigSequence { steps }
    }

    pub fn steps(&self) -> &[Solution] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<Solution> {
        self.steps
    }

    /// Number of token moves.
    pub fn moves(&self) -> usize {
        self.steps.len().saturating_sub(1)
    }

    /// Checks every sequence invariant against `instance`.
    pub fn verify(&self, instance: &Instance) -> Result<(), SequenceViolation> {
        verify_sequence(instance, self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationReason {
    Malformed,
    WrongEndpoints,
    Infeasible,
    IllegalMove,
}

impl fmt::Display for ViolationReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationReason::Malformed => "malformed",
            ViolationReason::WrongEndpoints => "wrong endpoints",
            ViolationReason::Infeasible => "infeasible",
            ViolationReason::IllegalMove => "illegal move",
        })
    }
}

/// First offending step of a rejected sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceViolation {
    pub step: usize,
    pub reason: ViolationReason,
    pub detail: String,
}

impl fmt::Display for SequenceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {}: {} ({})", self.step, self.reason, self.detail)
    }
}

impl std::error::Error for SequenceViolation {}

/// Accepts iff the sequence starts at the source, ends at the target,
/// every step is well formed and feasible, and consecutive steps are one
/// legal token move apart.
pub fn verify_sequence(instance: &Instance, seq: &ReconfigSequence) -> Result<(), SequenceViolation> {
    let violation = |step, reason, detail: String| SequenceViolation { step, reason, detail };
    let steps = seq.steps();
    if steps.is_empty() {
        return Err(violation(0, ViolationReason::WrongEndpoints, "sequence is empty".into()));
    }
    let g = instance.graph();
    let checker = instance.checker();
    let mut prev: Option<Vec<usize>> = None;
    for (i, sol) in steps.iter().enumerate() {
        let expected = instance.variant().solution_kind();
        if sol.kind() != expected {
            return Err(violation(i, ViolationReason::Malformed, format!("expected a {expected}")));
        }
        let idx = sol.element_indices(g).map_err(|e| violation(i, ViolationReason::Malformed, e.to_string()))?;
        if i == 0 && sol != instance.source() {
            return Err(violation(0, ViolationReason::WrongEndpoints, format!("{sol} is not the source")));
        }
        if !checker.check_indices(&idx) {
            return Err(violation(i, ViolationReason::Infeasible, format!("{sol} violates {}", instance.property())));
        }
        if let Some(p) = &prev {
            match single_legal_swap(g, instance.variant(), instance.rule(), p, &idx) {
                Ok(()) => {}
                Err(SwapError::NotSingleSwap { removed, added }) => {
                    return Err(violation(
                        i,
                        ViolationReason::IllegalMove,
                        format!("{removed} tokens removed and {added} added"),
                    ))
                }
                Err(SwapError::NotAdjacent) => {
                    return Err(violation(
                        i,
                        ViolationReason::IllegalMove,
                        "token slid to a non-adjacent element".into(),
                    ))
                }
            }
        }
        prev = Some(idx);
    }
    let last = steps.len() - 1;
    if &steps[last] != instance.target() {
        return Err(violation(last, ViolationReason::WrongEndpoints, format!("{} is not the target", steps[last])));
    }
    Ok(())
}
