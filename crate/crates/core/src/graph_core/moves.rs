use std::fmt;

use super::graph::Graph;
use super::property::{FeasibilityChecker, PropertySpec, Variant};
use super::solution::{sorted_difference, Solution, SolutionKind};
use crate::error::{Error, Result};

/// Token move rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    /// Token jumping: a token may move to any unoccupied element.
    Tj,
    /// Token sliding: a token may move only to an adjacent element (an
    /// adjacent vertex, or an edge sharing an endpoint).
    Ts,
}

impl Rule {
    pub const ALL: [Rule; 2] = [Rule::Tj, Rule::Ts];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Tj => "TJ",
            Rule::Ts => "TS",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The element ground set of a variant (vertices or edges of the graph)
/// with precomputed sliding adjacency.
#[derive(Clone, Debug)]
pub struct ElementUniverse {
    kind: SolutionKind,
    slide: Vec<Vec<usize>>,
}

impl ElementUniverse {
    pub fn new(g: &Graph, variant: Variant) -> ElementUniverse {
        let kind = variant.solution_kind();
        let slide = match kind {
            SolutionKind::VertexSet => (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect(),
            SolutionKind::EdgeSet => {
                let mut incident = vec![Vec::new(); g.n()];
                for (i, e) in g.edges().iter().enumerate() {
                    incident[e.u()].push(i);
                    incident[e.v()].push(i);
                }
                g.edges()
                    .iter()
                    .enumerate()
                    .map(|(i, e)| {
                        let mut adj: Vec<usize> =
                            incident[e.u()].iter().chain(&incident[e.v()]).copied().filter(|&x| x != i).collect();
                        adj.sort_unstable();
                        adj.dedup();
                        adj
                    })
                    .collect()
            }
        };
        ElementUniverse { kind, slide }
    }

    pub fn kind(&self) -> SolutionKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.slide.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slide.is_empty()
    }

    /// Elements a token on `x` may slide to.
    pub fn slide_targets(&self, x: usize) -> &[usize] {
        &self.slide[x]
    }

    pub fn are_adjacent(&self, x: usize, y: usize) -> bool {
        self.slide[x].binary_search(&y).is_ok()
    }

    /// Calls `visit` with every candidate reachable from the ascending
    /// index set `cur` by one token move under `rule`, in ascending
    /// lexicographic order. Candidates are not checked for feasibility.
    pub fn for_each_move<F: FnMut(&[usize])>(&self, cur: &[usize], rule: Rule, mut visit: F) {
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for (pos, &x) in cur.iter().enumerate() {
            match rule {
                Rule::Tj => {
                    for y in 0..self.len() {
                        if cur.binary_search(&y).is_err() {
                            pairs.push((pos, y));
                        }
                    }
                }
                Rule::Ts => {
                    for &y in &self.slide[x] {
                        if cur.binary_search(&y).is_err() {
                            pairs.push((pos, y));
                        }
                    }
                }
            }
        }
        let mut cands: Vec<Vec<usize>> = pairs
            .into_iter()
            .map(|(pos, y)| {
                let mut c = cur.to_vec();
                c.remove(pos);
                let at = c.binary_search(&y).unwrap_err();
                c.insert(at, y);
                c
            })
            .collect();
        cands.sort_unstable();
        for c in &cands {
            visit(c);
        }
    }
}

/// All feasible solutions one legal token move away from `sol`, in
/// canonical order.
pub fn neighbors(g: &Graph, sol: &Solution, variant: Variant, rule: Rule, prop: PropertySpec) -> Result<Vec<Solution>> {
    let checker = FeasibilityChecker::new(g, variant, prop)?;
    let kind = variant.solution_kind();
    if sol.kind() != kind {
        return Err(Error::KindMismatch { expected: kind, found: sol.kind() });
    }
    let idx = sol.element_indices(g)?;
    let universe = ElementUniverse::new(g, variant);
    let mut out = Vec::new();
    universe.for_each_move(&idx, rule, |cand| {
        if checker.check_indices(cand) {
            out.push(Solution::from_element_indices(kind, g, cand));
        }
    });
    Ok(out)
}

/// True iff `to` is in `neighbors(from)`: exactly one element swapped,
/// the swap obeys `rule`, and `to` is feasible.
pub fn is_feasible_move(
    g: &Graph,
    from: &Solution,
    to: &Solution,
    variant: Variant,
    rule: Rule,
    prop: PropertySpec,
) -> Result<bool> {
    if from.kind() != to.kind() {
        return Err(Error::KindMismatch { expected: from.kind(), found: to.kind() });
    }
    let checker = FeasibilityChecker::new(g, variant, prop)?;
    if !checker.check(to)? {
        return Ok(false);
    }
    let a = from.element_indices(g)?;
    let b = to.element_indices(g)?;
    Ok(single_legal_swap(g, variant, rule, &a, &b).is_ok())
}

/// Why two index sets are not one legal move apart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum SwapError {
    NotSingleSwap { removed: usize, added: usize },
    NotAdjacent,
}

pub(crate) fn single_legal_swap(
    g: &Graph,
    variant: Variant,
    rule: Rule,
    from: &[usize],
    to: &[usize],
) -> std::result::Result<(), SwapError> {
    let (removed, added) = sorted_difference(from, to);
    if removed.len() != 1 || added.len() != 1 {
        return Err(SwapError::NotSingleSwap { removed: removed.len(), added: added.len() });
    }
    if rule == Rule::Ts {
        let (x, y) = (removed[0], added[0]);
        let adjacent = match variant.solution_kind() {
            SolutionKind::VertexSet => g.has_edge(x, y),
            SolutionKind::EdgeSet => g.edges()[x].is_adjacent(&g.edges()[y]),
        };
        if !adjacent {
            return Err(SwapError::NotAdjacent);
        }
    }
    Ok(())
}
