use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// An undirected edge stored with its smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Edge {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn is_incident(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }

    /// True when the two edges are distinct and share an endpoint.
    pub fn is_adjacent(&self, other: &Edge) -> bool {
        self != other && (self.u == other.u || self.u == other.v || self.v == other.u || self.v == other.v)
    }

    pub fn other(&self, w: usize) -> Option<usize> {
        if w == self.u {
            Some(self.v)
        } else if w == self.v {
            Some(self.u)
        } else {
            None
        }
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// A simple undirected graph on the vertices `0..n`.
///
/// Edges are kept sorted, so an edge's position in [`Graph::edges`] is a
/// stable element index for the edge variant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn new<I, E>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut list: Vec<Edge> = Vec::new();
        for e in edges {
            let e = e.into();
            if e.v >= n {
                return Err(Error::VertexOutOfRange { vertex: e.v, n });
            }
            if e.u == e.v {
                return Err(Error::SelfLoop(e.u));
            }
            list.push(e);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0]));
        }
        let mut adj = vec![Vec::new(); n];
        for e in &list {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph { n, edges: list, adj })
    }

    pub fn empty(n: usize) -> Graph {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are valid")
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph edges are valid")
    }

    /// Disjoint union: the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let edges = self.edges.iter().copied().chain(other.edges.iter().map(|e| Edge::new(e.u + off, e.v + off)));
        Graph::new(self.n + other.n, edges).expect("disjoint union of simple graphs is simple")
    }

    /// Returns a copy with the given extra vertices and edges. Edges that
    /// already exist are skipped.
    pub fn extended<I, E>(&self, extra_vertices: usize, extra_edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut edges = self.edges.clone();
        edges.extend(extra_edges.into_iter().map(Into::into));
        edges.sort_unstable();
        edges.dedup();
        Graph::new(self.n + extra_vertices, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    /// Position of `e` in the sorted edge list.
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let ids = self.component_ids();
        let count = ids.iter().max().map_or(0, |&c| c + 1);
        let mut comps = vec![Vec::new(); count];
        for (v, &c) in ids.iter().enumerate() {
            comps[c].push(v);
        }
        comps
    }

    /// Component id per vertex; ids are numbered in order of each
    /// component's smallest vertex.
    pub fn component_ids(&self) -> Vec<usize> {
        let mut ids = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if ids[start] != usize::MAX {
                continue;
            }
            ids[start] = next;
            queue.push_back(start);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if ids[y] == usize::MAX {
                        ids[y] = next;
                        queue.push_back(y);
                    }
                }
            }
            next += 1;
        }
        ids
    }

    /// Unweighted BFS distances from `src`.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap() + 1;
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// A shortest path from any vertex of `from` to any vertex of `to`,
    /// found by multi-source BFS. Neighbors are scanned in ascending order,
    /// so the result is deterministic.
    pub fn shortest_path_between_sets(&self, from: &[usize], to: &[usize]) -> Option<Vec<usize>> {
        let mut is_target = vec![false; self.n];
        for &t in to {
            is_target[t] = true;
        }
        let mut parent = vec![usize::MAX; self.n];
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::new();
        let mut sources = from.to_vec();
        sources.sort_unstable();
        sources.dedup();
        for &s in &sources {
            if is_target[s] {
                return Some(vec![s]);
            }
            seen[s] = true;
            queue.push_back(s);
        }
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if seen[y] {
                    continue;
                }
                seen[y] = true;
                parent[y] = x;
                if is_target[y] {
                    let mut path = vec![y];
                    let mut cur = y;
                    while parent[cur] != usize::MAX {
                        cur = parent[cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(y);
            }
        }
        None
    }

    /// The subgraph induced by `vs`, relabelled to `0..vs.len()` in the
    /// order of `vs`.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Graph {
        let mut edges = Vec::new();
        for (a, &x) in vs.iter().enumerate() {
            for (b, &y) in vs.iter().enumerate().skip(a + 1) {
                if self.has_edge(x, y) {
                    edges.push((a, b));
                }
            }
        }
        Graph::new(vs.len(), edges).expect("induced subgraph of a simple graph is simple")
    }
}
