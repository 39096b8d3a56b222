use std::collections::VecDeque;
use std::fmt;

use super::graph::{Edge, Graph};
use super::solution::{Solution, SolutionKind};
use crate::error::{Error, Result};

/// How a solution represents a subgraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// Edge subset; the graph formed by the edges must satisfy the property.
    Edge,
    /// Vertex subset; the induced subgraph must satisfy the property.
    Induced,
    /// Vertex subset; the induced subgraph must contain a spanning subgraph
    /// that satisfies the property.
    Spanning,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Edge, Variant::Induced, Variant::Spanning];

    pub fn solution_kind(self) -> SolutionKind {
        match self {
            Variant::Edge => SolutionKind::EdgeSet,
            Variant::Induced | Variant::Spanning => SolutionKind::VertexSet,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::Edge => "edge",
            Variant::Induced => "induced",
            Variant::Spanning => "spanning",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Graph structure property a solution must satisfy.
///
/// Path, cycle, tree and clique carry no size: the size follows from the
/// solution's cardinality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PropertySpec {
    Path,
    Cycle,
    Tree,
    Clique,
    /// Complete bipartite graph with parts of exactly `i` and `j` vertices.
    Biclique {
        i: usize,
        j: usize,
    },
    Edgeless,
    DiameterAtMostTwo,
    /// Vertex set (or edge set) of a shortest `s`-`t` path of the host graph.
    ShortestStPath {
        s: usize,
        t: usize,
    },
}

impl PropertySpec {
    pub fn validate(&self, n: usize) -> Result<()> {
        match *self {
            PropertySpec::Biclique { i, j } if i == 0 || j == 0 => {
                Err(Error::InvalidProperty(format!("biclique part sizes must be positive, got ({i}, {j})")))
            }
            PropertySpec::ShortestStPath { s, t } => {
                if s == t {
                    Err(Error::InvalidProperty(format!("s and t must differ, both are {s}")))
                } else if s >= n || t >= n {
                    Err(Error::InvalidProperty(format!("s={s}, t={t} out of range for {n} vertices")))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            PropertySpec::Path => "path",
            PropertySpec::Cycle => "cycle",
            PropertySpec::Tree => "tree",
            PropertySpec::Clique => "clique",
            PropertySpec::Biclique { .. } => "biclique",
            PropertySpec::Edgeless => "edgeless",
            PropertySpec::DiameterAtMostTwo => "diameter-two",
            PropertySpec::ShortestStPath { .. } => "shortest-st-path",
        }
    }
}

impl fmt::Display for PropertySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PropertySpec::Biclique { i, j } => write!(f, "biclique({i},{j})"),
            PropertySpec::ShortestStPath { s, t } => write!(f, "shortest-st-path({s},{t})"),
            p => f.write_str(p.name()),
        }
    }
}

/// True iff `sol` satisfies `prop` under the semantics of `variant`.
///
/// Conventions for degenerate solutions: an empty edge set is a path, a tree,
/// edgeless and of diameter at most two, but not a cycle, clique or biclique.
/// An empty vertex set additionally counts as a clique.
pub fn check_property(g: &Graph, sol: &Solution, variant: Variant, prop: PropertySpec) -> Result<bool> {
    FeasibilityChecker::new(g, variant, prop)?.check(sol)
}

/// True iff every pair of `vs` is within distance two inside `g[vs]`.
pub fn diameter_at_most_two(g: &Graph, vs: &[usize]) -> Result<bool> {
    let mut sorted = vs.to_vec();
    sorted.sort_unstable();
    Solution::Vertices(sorted.clone()).validate(g)?;
    Ok(Local::induced(g, &sorted).diameter_at_most_two())
}

/// Reusable feasibility test for one `(graph, variant, property)` triple.
///
/// Works on element indices (vertices, or positions in `g.edges()`) so the
/// oracle can test millions of candidates without building `Solution`s.
#[derive(Clone, Debug)]
pub struct FeasibilityChecker<'g> {
    g: &'g Graph,
    variant: Variant,
    prop: PropertySpec,
    st_dist: Option<usize>,
}

impl<'g> FeasibilityChecker<'g> {
    pub fn new(g: &'g Graph, variant: Variant, prop: PropertySpec) -> Result<Self> {
        prop.validate(g.n())?;
        let st_dist = match prop {
            PropertySpec::ShortestStPath { s, t } => g.distances_from(s)[t],
            _ => None,
        };
        Ok(FeasibilityChecker { g, variant, prop, st_dist })
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn property(&self) -> PropertySpec {
        self.prop
    }

    pub fn check(&self, sol: &Solution) -> Result<bool> {
        let expected = self.variant.solution_kind();
        if sol.kind() != expected {
            return Err(Error::KindMismatch { expected, found: sol.kind() });
        }
        let idx = sol.element_indices(self.g)?;
        Ok(self.check_indices(&idx))
    }

    /// `idx` must be ascending, distinct and in range.
    pub fn check_indices(&self, idx: &[usize]) -> bool {
        match self.variant {
            Variant::Edge => {
                if idx.is_empty() {
                    return matches!(
                        self.prop,
                        PropertySpec::Path
                            | PropertySpec::Tree
                            | PropertySpec::Edgeless
                            | PropertySpec::DiameterAtMostTwo
                    );
                }
                let edges: Vec<Edge> = idx.iter().map(|&i| self.g.edges()[i]).collect();
                let local = Local::from_edges(&edges);
                self.formed_graph_satisfies(&local)
            }
            Variant::Induced => {
                let local = Local::induced(self.g, idx);
                self.formed_graph_satisfies(&local)
            }
            Variant::Spanning => {
                let local = Local::induced(self.g, idx);
                self.has_spanning_subgraph(&local)
            }
        }
    }

    fn formed_graph_satisfies(&self, h: &Local) -> bool {
        let n = h.n();
        match self.prop {
            PropertySpec::Path => n == 0 || (h.m == n - 1 && h.max_degree() <= 2 && h.is_connected()),
            PropertySpec::Cycle => n >= 3 && h.m == n && h.all_degrees(2) && h.is_connected(),
            PropertySpec::Tree => n == 0 || (h.m == n - 1 && h.is_connected()),
            PropertySpec::Clique => h.m == n * n.saturating_sub(1) / 2,
            PropertySpec::Biclique { i, j } => {
                n == i + j
                    && h.m == i * j
                    && h.bipartition_sizes().is_some_and(|(a, b)| (a, b) == (i, j) || (a, b) == (j, i))
            }
            PropertySpec::Edgeless => h.m == 0,
            PropertySpec::DiameterAtMostTwo => h.diameter_at_most_two(),
            PropertySpec::ShortestStPath { s, t } => self.is_shortest_st_path(h, s, t),
        }
    }

    fn has_spanning_subgraph(&self, h: &Local) -> bool {
        let n = h.n();
        match self.prop {
            PropertySpec::Path => n == 0 || h.has_hamiltonian_path(),
            PropertySpec::Cycle => n >= 3 && h.has_hamiltonian_cycle(),
            PropertySpec::Tree => n == 0 || h.is_connected(),
            PropertySpec::Biclique { i, j } => n == i + j && h.has_spanning_biclique(i.min(j)),
            PropertySpec::Edgeless => true,
            // Adding edges never breaks these, so spanning and induced agree.
            PropertySpec::Clique | PropertySpec::DiameterAtMostTwo | PropertySpec::ShortestStPath { .. } => {
                self.formed_graph_satisfies(h)
            }
        }
    }

    fn is_shortest_st_path(&self, h: &Local, s: usize, t: usize) -> bool {
        let Some(d) = self.st_dist else { return false };
        h.n() == d + 1
            && h.labels.binary_search(&s).is_ok()
            && h.labels.binary_search(&t).is_ok()
            && h.m == d
            && h.max_degree() <= 2
            && h.is_connected()
    }
}

/// Small relabelled graph: the subgraph under test.
#[derive(Debug)]
struct Local {
    /// Original vertex label of each local vertex, ascending.
    labels: Vec<usize>,
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Local {
    fn induced(g: &Graph, vs: &[usize]) -> Local {
        let mut adj = vec![Vec::new(); vs.len()];
        let mut m = 0;
        for (a, &x) in vs.iter().enumerate() {
            for &y in g.neighbors(x) {
                if y <= x {
                    continue;
                }
                if let Ok(b) = vs.binary_search(&y) {
                    adj[a].push(b);
                    adj[b].push(a);
                    m += 1;
                }
            }
        }
        Local { labels: vs.to_vec(), adj, m }
    }

    fn from_edges(edges: &[Edge]) -> Local {
        let mut labels: Vec<usize> = edges.iter().flat_map(|e| [e.u(), e.v()]).collect();
        labels.sort_unstable();
        labels.dedup();
        let mut adj = vec![Vec::new(); labels.len()];
        for e in edges {
            let a = labels.binary_search(&e.u()).unwrap();
            let b = labels.binary_search(&e.v()).unwrap();
            adj[a].push(b);
            adj[b].push(a);
        }
        Local { labels, adj, m: edges.len() }
    }

    fn n(&self) -> usize {
        self.labels.len()
    }

    fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    fn all_degrees(&self, d: usize) -> bool {
        self.adj.iter().all(|a| a.len() == d)
    }

    fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }

    fn is_connected(&self) -> bool {
        let n = self.n();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == n
    }

    /// Part sizes of a connected bipartite graph; `None` otherwise.
    fn bipartition_sizes(&self) -> Option<(usize, usize)> {
        let n = self.n();
        if n == 0 {
            return None;
        }
        let mut side = vec![u8::MAX; n];
        side[0] = 0;
        let mut queue = VecDeque::from([0]);
        let mut visited = 1;
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if side[y] == u8::MAX {
                    side[y] = 1 - side[x];
                    visited += 1;
                    queue.push_back(y);
                } else if side[y] == side[x] {
                    return None;
                }
            }
        }
        if visited != n {
            return None;
        }
        let zeros = side.iter().filter(|&&s| s == 0).count();
        Some((zeros, n - zeros))
    }

    fn diameter_at_most_two(&self) -> bool {
        let n = self.n();
        let mut mark = vec![usize::MAX; n];
        for u in 0..n {
            mark[u] = u;
            let mut reached = 1;
            for &v in &self.adj[u] {
                if mark[v] != u {
                    mark[v] = u;
                    reached += 1;
                }
                for &w in &self.adj[v] {
                    if mark[w] != u {
                        mark[w] = u;
                        reached += 1;
                    }
                }
            }
            if reached != n {
                return false;
            }
        }
        true
    }

    fn has_hamiltonian_path(&self) -> bool {
        let n = self.n();
        if n <= 1 {
            return true;
        }
        if !self.is_connected() {
            return false;
        }
        let leaves: Vec<usize> = (0..n).filter(|&v| self.adj[v].len() == 1).collect();
        if leaves.len() > 2 {
            return false;
        }
        // A degree-one vertex must be an endpoint, so it is the only start
        // worth trying.
        let starts: Vec<usize> = if leaves.is_empty() { (0..n).collect() } else { vec![leaves[0]] };
        let mut visited = vec![false; n];
        starts.into_iter().any(|s| {
            visited[s] = true;
            let found = self.extend_path(s, 1, &mut visited, None);
            visited[s] = false;
            found
        })
    }

    fn has_hamiltonian_cycle(&self) -> bool {
        let n = self.n();
        if n < 3 || self.adj.iter().any(|a| a.len() < 2) || !self.is_connected() {
            return false;
        }
        let mut visited = vec![false; n];
        visited[0] = true;
        self.extend_path(0, 1, &mut visited, Some(0))
    }

    /// Depth-first extension of a simple path ending at `end` that already
    /// covers `len` vertices. With `close = Some(v)` the full path must also
    /// be adjacent to `v`.
    fn extend_path(&self, end: usize, len: usize, visited: &mut [bool], close: Option<usize>) -> bool {
        if len == self.n() {
            return close.is_none_or(|c| self.has_edge(end, c));
        }
        for &next in &self.adj[end] {
            if visited[next] {
                continue;
            }
            visited[next] = true;
            let found = self.extend_path(next, len + 1, visited, close);
            visited[next] = false;
            if found {
                return true;
            }
        }
        false
    }

    /// Whether some `hubs`-subset is fully joined to all other vertices.
    /// Edges inside either part are allowed.
    fn has_spanning_biclique(&self, hubs: usize) -> bool {
        let n = self.n();
        if hubs == 0 || hubs >= n {
            return false;
        }
        let mut chosen = Vec::with_capacity(hubs);
        self.pick_hubs(0, hubs, &mut chosen)
    }

    fn pick_hubs(&self, from: usize, hubs: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == hubs {
            return (0..self.n()).filter(|v| !chosen.contains(v)).all(|v| chosen.iter().all(|&h| self.has_edge(h, v)));
        }
        let n = self.n();
        // Every hub is adjacent to all non-hubs, so its degree is at least n - hubs.
        for h in from..=(n - (hubs - chosen.len())) {
            if self.adj[h].len() < n - hubs {
                continue;
            }
            chosen.push(h);
            let found = self.pick_hubs(h + 1, hubs, chosen);
            chosen.pop();
            if found {
                return true;
            }
        }
        false
    }
}
