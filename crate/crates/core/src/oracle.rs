//! The general algorithm: enumerate every feasible candidate of the
//! solution size, connect candidates one token move apart, and search the
//! resulting reconfiguration graph breadth-first.
//!
//! Cost is `O(n^k)` nodes for ground-set size `n` and solution size `k`, so
//! every entry point is guarded by an [`OracleBudget`]. Exceeding it is
//! reported as [`Verdict::BudgetExceeded`] (or [`Error::BudgetExceeded`]
//! from the enumeration functions), never as NO.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph_core::{
    ElementUniverse, FeasibilityChecker, Graph, Instance, PropertySpec, ReconfigSequence, Rule, Solution, Variant,
};
use crate::verdict::Verdict;

/// Resource limits for the exhaustive search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    /// Upper bound on the number of size-`k` candidates, `C(n, k)`.
    pub max_candidates: u64,
    /// Largest solution size the oracle accepts.
    pub max_k: usize,
    /// Above this many feasible nodes the adjacency lists are not stored;
    /// the search generates neighbors on the fly instead.
    pub materialize_limit: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_candidates: Self::DEFAULT_MAX_CANDIDATES,
            max_k: Self::DEFAULT_MAX_K,
            materialize_limit: Self::DEFAULT_MATERIALIZE_LIMIT,
        }
    }
}

impl OracleBudget {
    pub const DEFAULT_MAX_CANDIDATES: u64 = 5_000_000;
    pub const DEFAULT_MAX_K: usize = 12;
    pub const DEFAULT_MATERIALIZE_LIMIT: usize = 1_000_000;

    pub fn new(max_candidates: u64, max_k: usize) -> Result<OracleBudget> {
        if max_candidates == 0 || max_k == 0 {
            return Err(Error::InvalidBudget(format!(
                "max_candidates={max_candidates} and max_k={max_k} must both be positive"
            )));
        }
        Ok(OracleBudget { max_candidates, max_k, ..OracleBudget::default() })
    }

    pub fn with_materialize_limit(self, materialize_limit: usize) -> OracleBudget {
        OracleBudget { materialize_limit, ..self }
    }

    fn admit(&self, universe: usize, k: usize) -> Result<()> {
        if k > self.max_k {
            return Err(Error::BudgetExceeded(format!("solution size {k} exceeds max_k={}", self.max_k)));
        }
        let count = binomial(universe, k);
        if count > u128::from(self.max_candidates) {
            return Err(Error::BudgetExceeded(format!(
                "C({universe}, {k}) = {count} candidates exceeds max_candidates={}",
                self.max_candidates
            )));
        }
        Ok(())
    }
}

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step.
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Feasible candidates stored flat, `k` indices per node, in ascending
/// lexicographic order.
#[derive(Clone, Debug)]
struct NodeSet {
    k: usize,
    count: usize,
    flat: Vec<u32>,
}

impl NodeSet {
    fn get(&self, i: usize) -> &[u32] {
        &self.flat[i * self.k..(i + 1) * self.k]
    }

    fn find(&self, key: &[u32]) -> Option<usize> {
        if self.k == 0 {
            return (self.count == 1).then_some(0);
        }
        let (mut lo, mut hi) = (0, self.count);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(key) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    fn enumerate(checker: &FeasibilityChecker<'_>, universe: usize, k: usize) -> NodeSet {
        if k == 0 {
            let count = usize::from(checker.check_indices(&[]));
            return NodeSet { k, count, flat: Vec::new() };
        }
        if k > universe {
            return NodeSet { k, count: 0, flat: Vec::new() };
        }
        let chunks: Vec<Vec<u32>> = (0..=universe - k)
            .into_par_iter()
            .map(|first| {
                let mut out = Vec::new();
                let mut c: Vec<usize> = (first..first + k).collect();
                loop {
                    if checker.check_indices(&c) {
                        out.extend(c.iter().map(|&x| x as u32));
                    }
                    // Advance positions 1..k; position 0 stays at `first`.
                    let mut i = k - 1;
                    while i > 0 && c[i] == universe - k + i {
                        i -= 1;
                    }
                    if i == 0 {
                        break;
                    }
                    c[i] += 1;
                    for j in i + 1..k {
                        c[j] = c[j - 1] + 1;
                    }
                }
                out
            })
            .collect();
        let flat: Vec<u32> = chunks.concat();
        NodeSet { k, count: flat.len() / k, flat }
    }

    fn to_solutions(&self, g: &Graph, variant: Variant) -> Vec<Solution> {
        let kind = variant.solution_kind();
        (0..self.count)
            .map(|i| {
                let idx: Vec<usize> = self.get(i).iter().map(|&x| x as usize).collect();
                Solution::from_element_indices(kind, g, &idx)
            })
            .collect()
    }

    /// Sorted indices of the nodes one legal move away from node `i`.
    fn neighbors_of(&self, universe: &ElementUniverse, rule: Rule, i: usize) -> Vec<usize> {
        let cur = self.get(i);
        let mut buf: Vec<u32> = Vec::with_capacity(self.k);
        let mut out = Vec::new();
        for pos in 0..self.k {
            let x = cur[pos] as usize;
            let mut try_swap = |y: usize| {
                let y32 = y as u32;
                if cur.binary_search(&y32).is_ok() {
                    return;
                }
                buf.clear();
                buf.extend(cur.iter().copied().filter(|&e| e != cur[pos]));
                let at = buf.binary_search(&y32).unwrap_err();
                buf.insert(at, y32);
                if let Some(j) = self.find(&buf) {
                    out.push(j);
                }
            };
            match rule {
                Rule::Tj => (0..universe.len()).for_each(&mut try_swap),
                Rule::Ts => universe.slide_targets(x).iter().copied().for_each(&mut try_swap),
            }
        }
        out.sort_unstable();
        out
    }
}

/// Exactly the feasible size-`k` candidates, in canonical order.
pub fn enumerate_feasible(
    g: &Graph,
    variant: Variant,
    prop: PropertySpec,
    k: usize,
    budget: &OracleBudget,
) -> Result<Vec<Solution>> {
    let checker = FeasibilityChecker::new(g, variant, prop)?;
    let universe = universe_size(g, variant);
    budget.admit(universe, k)?;
    Ok(NodeSet::enumerate(&checker, universe, k).to_solutions(g, variant))
}

/// Feasible candidates with the size of the instance's source solution.
pub fn enumerate_solutions(instance: &Instance, budget: &OracleBudget) -> Result<Vec<Solution>> {
    enumerate_feasible(instance.graph(), instance.variant(), instance.property(), instance.source().len(), budget)
}

fn universe_size(g: &Graph, variant: Variant) -> usize {
    match variant {
        Variant::Edge => g.m(),
        Variant::Induced | Variant::Spanning => g.n(),
    }
}

/// Explicit reconfiguration graph over all feasible size-`k` solutions.
#[derive(Clone, Debug)]
pub struct ReconfigGraph {
    nodes: Vec<Solution>,
    adjacency: Vec<Vec<usize>>,
    source_idx: Option<usize>,
    target_idx: Option<usize>,
}

impl ReconfigGraph {
    /// Builds the whole reconfiguration graph for one setting, without
    /// designated endpoints.
    pub fn build(
        g: &Graph,
        variant: Variant,
        rule: Rule,
        prop: PropertySpec,
        k: usize,
        budget: &OracleBudget,
    ) -> Result<ReconfigGraph> {
        let checker = FeasibilityChecker::new(g, variant, prop)?;
        let universe = universe_size(g, variant);
        budget.admit(universe, k)?;
        let nodes = NodeSet::enumerate(&checker, universe, k);
        let elements = ElementUniverse::new(g, variant);
        let adjacency: Vec<Vec<usize>> =
            (0..nodes.count).into_par_iter().map(|i| nodes.neighbors_of(&elements, rule, i)).collect();
        Ok(ReconfigGraph { nodes: nodes.to_solutions(g, variant), adjacency, source_idx: None, target_idx: None })
    }

    pub fn nodes(&self) -> &[Solution] {
        &self.nodes
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub fn source_idx(&self) -> Option<usize> {
        self.source_idx
    }

    pub fn target_idx(&self) -> Option<usize> {
        self.target_idx
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn index_of(&self, sol: &Solution) -> Option<usize> {
        self.nodes.binary_search(sol).ok()
    }

    pub fn bfs(&self, from: usize) -> BfsTree {
        let n = self.adjacency.len();
        let mut parent = vec![usize::MAX; n];
        let mut dist = vec![usize::MAX; n];
        dist[from] = 0;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adjacency[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        BfsTree { parent, dist }
    }

    /// A shortest sequence between two nodes, if connected.
    pub fn shortest_sequence(&self, from: usize, to: usize) -> Option<ReconfigSequence> {
        let path = self.bfs(from).path_to(to)?;
        Some(self.sequence_of(&path))
    }

    pub fn sequence_of(&self, path: &[usize]) -> ReconfigSequence {
        ReconfigSequence::new(path.iter().map(|&i| self.nodes[i].clone()).collect())
    }

    /// Connected-component id of every node, numbered by smallest node.
    pub fn component_ids(&self) -> Vec<usize> {
        let n = self.nodes.len();
        let mut ids = vec![usize::MAX; n];
        let mut next = 0;
        for start in 0..n {
            if ids[start] != usize::MAX {
                continue;
            }
            ids[start] = next;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &y in &self.adjacency[x] {
                    if ids[y] == usize::MAX {
                        ids[y] = next;
                        stack.push(y);
                    }
                }
            }
            next += 1;
        }
        ids
    }
}

/// Breadth-first search tree rooted at one node.
#[derive(Clone, Debug)]
pub struct BfsTree {
    parent: Vec<usize>,
    dist: Vec<usize>,
}

impl BfsTree {
    pub fn distance(&self, to: usize) -> Option<usize> {
        (self.dist[to] != usize::MAX).then_some(self.dist[to])
    }

    /// Node indices from the root to `to`.
    pub fn path_to(&self, to: usize) -> Option<Vec<usize>> {
        self.distance(to)?;
        let mut path = vec![to];
        let mut cur = to;
        while self.parent[cur] != usize::MAX {
            cur = self.parent[cur];
            path.push(cur);
        }
        path.reverse();
        Some(path)
    }
}

/// The reconfiguration graph of an instance, with source and target located.
pub fn build_reconfig_graph(instance: &Instance, budget: &OracleBudget) -> Result<ReconfigGraph> {
    let mut rg = ReconfigGraph::build(
        instance.graph(),
        instance.variant(),
        instance.rule(),
        instance.property(),
        instance.source().len(),
        budget,
    )?;
    rg.source_idx = rg.index_of(instance.source());
    rg.target_idx = rg.index_of(instance.target());
    Ok(rg)
}

/// Verdict plus the size of the reconfiguration graph that was searched.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub verdict: Verdict,
    pub nodes: Option<usize>,
    /// `None` when the graph was searched without storing its edges.
    pub edges: Option<usize>,
}

/// Reachability with a shortest witness, by BFS over the reconfiguration graph.
pub fn solve_bfs(instance: &Instance, budget: &OracleBudget) -> Result<Verdict> {
    Ok(solve_bfs_report(instance, budget)?.verdict)
}

pub fn solve_bfs_report(instance: &Instance, budget: &OracleBudget) -> Result<OracleReport> {
    let report = |verdict, nodes, edges| OracleReport { verdict, nodes, edges };
    if instance.source().len() != instance.target().len() {
        return Ok(report(Verdict::No, None, None));
    }
    if instance.source() == instance.target() {
        return Ok(report(Verdict::Yes(ReconfigSequence::single(instance.source().clone())), None, None));
    }
    let g = instance.graph();
    let variant = instance.variant();
    let universe = universe_size(g, variant);
    let k = instance.source().len();
    if budget.admit(universe, k).is_err() {
        return Ok(report(Verdict::BudgetExceeded, None, None));
    }
    let checker = instance.checker();
    let nodes = NodeSet::enumerate(&checker, universe, k);
    let src = nodes.find(&to_u32(&instance.source().element_indices(g)?)).expect("source is feasible");
    let dst = nodes.find(&to_u32(&instance.target().element_indices(g)?)).expect("target is feasible");
    let elements = ElementUniverse::new(g, variant);
    let kind = variant.solution_kind();
    let to_sequence = |path: Vec<usize>| {
        ReconfigSequence::new(
            path.into_iter()
                .map(|i| {
                    let idx: Vec<usize> = nodes.get(i).iter().map(|&x| x as usize).collect();
                    Solution::from_element_indices(kind, g, &idx)
                })
                .collect(),
        )
    };

    if nodes.count <= budget.materialize_limit {
        let adjacency: Vec<Vec<usize>> =
            (0..nodes.count).into_par_iter().map(|i| nodes.neighbors_of(&elements, instance.rule(), i)).collect();
        let edges = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        let rg = ReconfigGraph { nodes: Vec::new(), adjacency, source_idx: Some(src), target_idx: Some(dst) };
        let verdict = match rg.bfs(src).path_to(dst) {
            Some(path) => Verdict::Yes(to_sequence(path)),
            None => Verdict::No,
        };
        return Ok(report(verdict, Some(nodes.count), Some(edges)));
    }

    // Frontier search over the enumerated node set. Neighbors come out in
    // the same sorted order as the stored adjacency lists, so the witness is
    // identical to the materialized search.
    let mut parent = vec![usize::MAX; nodes.count];
    let mut seen = vec![false; nodes.count];
    seen[src] = true;
    let mut queue = VecDeque::from([src]);
    let mut found = false;
    while let Some(x) = queue.pop_front() {
        if x == dst {
            found = true;
            break;
        }
        for y in nodes.neighbors_of(&elements, instance.rule(), x) {
            if !seen[y] {
                seen[y] = true;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let verdict = if found {
        let mut path = vec![dst];
        let mut cur = dst;
        while parent[cur] != usize::MAX {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        Verdict::Yes(to_sequence(path))
    } else {
        Verdict::No
    };
    Ok(report(verdict, Some(nodes.count), None))
}

fn to_u32(idx: &[usize]) -> Vec<u32> {
    idx.iter().map(|&x| x as u32).collect()
}
