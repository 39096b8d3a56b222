use std::fmt;

use crate::graph_core::ReconfigSequence;

/// Answer to a reachability question.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Reachable, with a witness sequence.
    Yes(ReconfigSequence),
    No,
    /// The search would exceed its resource budget; reachability is unknown.
    BudgetExceeded,
}

impl Verdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes(_))
    }

    pub fn sequence(&self) -> Option<&ReconfigSequence> {
        match self {
            Verdict::Yes(seq) => Some(seq),
            _ => None,
        }
    }

    /// `YES`, `NO` or `BUDGET_EXCEEDED`.
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Yes(_) => "YES",
            Verdict::No => "NO",
            Verdict::BudgetExceeded => "BUDGET_EXCEEDED",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Yes(seq) => write!(f, "YES steps={}", seq.moves()),
            other => f.write_str(other.label()),
        }
    }
}
