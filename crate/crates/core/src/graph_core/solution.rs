use std::fmt;

use super::graph::{Edge, Graph};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SolutionKind {
    VertexSet,
    EdgeSet,
}

impl fmt::Display for SolutionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolutionKind::VertexSet => "vertex-set",
            SolutionKind::EdgeSet => "edge-set",
        })
    }
}

/// One node of a reconfiguration graph: a vertex subset or an edge subset,
/// held in ascending order.
///
/// Constructors sort but do not deduplicate; [`Solution::validate`] rejects
/// repeated or foreign elements.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Solution {
    Vertices(Vec<usize>),
    Edges(Vec<Edge>),
}

impl Solution {
    pub fn vertices<I: IntoIterator<Item = usize>>(vs: I) -> Solution {
        let mut v: Vec<usize> = vs.into_iter().collect();
        v.sort_unstable();
        Solution::Vertices(v)
    }

    pub fn edges<I, E>(es: I) -> Solution
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut v: Vec<Edge> = es.into_iter().map(Into::into).collect();
        v.sort_unstable();
        Solution::Edges(v)
    }

    pub fn empty(kind: SolutionKind) -> Solution {
        match kind {
            SolutionKind::VertexSet => Solution::Vertices(Vec::new()),
            SolutionKind::EdgeSet => Solution::Edges(Vec::new()),
        }
    }

    pub fn kind(&self) -> SolutionKind {
        match self {
            Solution::Vertices(_) => SolutionKind::VertexSet,
            Solution::Edges(_) => SolutionKind::EdgeSet,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Solution::Vertices(v) => v.len(),
            Solution::Edges(e) => e.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn as_vertices(&self) -> Option<&[usize]> {
        match self {
            Solution::Vertices(v) => Some(v),
            Solution::Edges(_) => None,
        }
    }

    pub fn as_edges(&self) -> Option<&[Edge]> {
        match self {
            Solution::Edges(e) => Some(e),
            Solution::Vertices(_) => None,
        }
    }

    /// Vertices touched by the solution: the set itself, or the union of
    /// edge endpoints.
    pub fn vertex_span(&self) -> Vec<usize> {
        match self {
            Solution::Vertices(v) => v.clone(),
            Solution::Edges(es) => {
                let mut v: Vec<usize> = es.iter().flat_map(|e| [e.u(), e.v()]).collect();
                v.sort_unstable();
                v.dedup();
                v
            }
        }
    }

    /// Checks that every element exists in `g` and appears once.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        match self {
            Solution::Vertices(vs) => {
                for &v in vs {
                    g.check_vertex(v)?;
                }
                if let Some(w) = vs.windows(2).find(|w| w[0] == w[1]) {
                    return Err(Error::DuplicateElement(w[0].to_string()));
                }
            }
            Solution::Edges(es) => {
                for &e in es {
                    g.check_vertex(e.v())?;
                    if g.edge_index(e).is_none() {
                        return Err(Error::MissingEdge(e));
                    }
                }
                if let Some(w) = es.windows(2).find(|w| w[0] == w[1]) {
                    return Err(Error::DuplicateElement(w[0].to_string()));
                }
            }
        }
        Ok(())
    }

    /// Element indices: vertices as-is, edges as positions in `g.edges()`.
    /// Ascending because the edge list is sorted.
    pub fn element_indices(&self, g: &Graph) -> Result<Vec<usize>> {
        self.validate(g)?;
        Ok(match self {
            Solution::Vertices(vs) => vs.clone(),
            Solution::Edges(es) => es.iter().map(|&e| g.edge_index(e).unwrap()).collect(),
        })
    }

    /// Inverse of [`Solution::element_indices`]; `idx` must be ascending.
    pub fn from_element_indices(kind: SolutionKind, g: &Graph, idx: &[usize]) -> Solution {
        match kind {
            SolutionKind::VertexSet => Solution::Vertices(idx.to_vec()),
            SolutionKind::EdgeSet => Solution::Edges(idx.iter().map(|&i| g.edges()[i]).collect()),
        }
    }

    /// Elements only in `self`, then elements only in `other`; `None` when
    /// the kinds differ.
    pub fn symmetric_difference(&self, other: &Solution) -> Option<(Solution, Solution)> {
        match (self, other) {
            (Solution::Vertices(a), Solution::Vertices(b)) => {
                let (x, y) = sorted_difference(a, b);
                Some((Solution::Vertices(x), Solution::Vertices(y)))
            }
            (Solution::Edges(a), Solution::Edges(b)) => {
                let (x, y) = sorted_difference(a, b);
                Some((Solution::Edges(x), Solution::Edges(y)))
            }
            _ => None,
        }
    }
}

pub(crate) fn sorted_difference<T: Ord + Copy>(a: &[T], b: &[T]) -> (Vec<T>, Vec<T>) {
    let (mut only_a, mut only_b) = (Vec::new(), Vec::new());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                only_a.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                only_b.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    only_a.extend_from_slice(&a[i..]);
    only_b.extend_from_slice(&b[j..]);
    (only_a, only_b)
}

/// Canonical text form: `{0 1 3}` for vertices, `{0-1 1-2}` for edges.
impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        match self {
            Solution::Vertices(vs) => {
                for (i, v) in vs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{v}")?;
                }
            }
            Solution::Edges(es) => {
                for (i, e) in es.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{e}")?;
                }
            }
        }
        f.write_str("}")
    }
}
