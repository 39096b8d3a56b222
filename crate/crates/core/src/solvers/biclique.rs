//! Spanning `(i, j)`-bicliques under token jumping for a small hub side `i`.
//!
//! A solution contains an `(i, j)`-biclique with hub set `H` (the `i`-side)
//! iff it is `H` plus `j` common neighbors of `H`. Solutions sharing a hub
//! set are always mutually reachable, so reachability reduces to
//! connectivity in an auxiliary graph on hub sets.

use std::collections::{BTreeSet, VecDeque};

use rayon::prelude::*;

use super::{not_applicable, SolverKind};
use crate::error::{Error, Result};
use crate::graph_core::{sorted_difference, Graph, Instance, PropertySpec, ReconfigSequence, Rule, Solution, Variant};
use crate::oracle::{self, OracleBudget};
use crate::verdict::Verdict;

/// A hub set `H` and its common neighborhood `C(H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HubNode {
    pub hubs: Vec<usize>,
    /// Vertices outside `H` adjacent to every hub, ascending.
    pub common_neighbors: Vec<usize>,
}

impl HubNode {
    pub fn new(g: &Graph, hubs: Vec<usize>) -> HubNode {
        let mut common: Vec<usize> = match hubs.first() {
            Some(&h) => g.neighbors(h).to_vec(),
            None => (0..g.n()).collect(),
        };
        for &h in hubs.iter().skip(1) {
            common.retain(|v| g.has_edge(h, *v));
        }
        common.retain(|v| hubs.binary_search(v).is_err());
        HubNode { hubs, common_neighbors: common }
    }

    /// `H ∪ C(H)`, ascending.
    pub fn span(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.hubs.iter().chain(&self.common_neighbors).copied().collect();
        s.sort_unstable();
        s
    }

    /// True iff `vs` (ascending) is `H` plus common neighbors only.
    pub fn hosts(&self, vs: &[usize]) -> bool {
        self.hubs.iter().all(|h| vs.binary_search(h).is_ok())
            && vs.iter().all(|v| self.hubs.binary_search(v).is_ok() || self.common_neighbors.binary_search(v).is_ok())
    }
}

/// Whether some solution with hub set `a` and some solution with hub set
/// `b` are at most one move apart, by the four set-size conditions.
/// Both nodes must have at least `j` common neighbors.
pub fn aux_adjacent(a: &HubNode, b: &HubNode, i: usize, j: usize) -> bool {
    let ua = a.span();
    let ub = b.span();
    let shared = ua.iter().filter(|v| ub.binary_search(v).is_ok()).count();
    let cond_a = shared + 1 >= i + j;
    let cond_b = a.hubs.iter().filter(|h| ub.binary_search(h).is_err()).count() <= 1;
    let cond_c = b.hubs.iter().filter(|h| ua.binary_search(h).is_err()).count() <= 1;
    let union: BTreeSet<usize> = a.hubs.iter().chain(&b.hubs).copied().collect();
    let cond_d = union.len() <= i + j + 1;
    assert!(i >= j || cond_d, "|H_a ∪ H_b| <= 2i <= i + j + 1 whenever i < j");
    cond_a && cond_b && cond_c && cond_d
}

/// Solutions `V_a` hosted by `a` and `V_b` hosted by `b` with
/// `|V_a \ V_b| <= 1`, or `None` when no such pair exists.
fn bridge(a: &HubNode, b: &HubNode, i: usize, j: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let ua = a.span();
    let ub = b.span();
    let x: Vec<usize> = ua.iter().copied().filter(|v| ub.binary_search(v).is_ok()).collect();
    let need = i + j - 1;
    let a_out = a.hubs.iter().filter(|h| x.binary_search(h).is_err()).count();
    let b_out = b.hubs.iter().filter(|h| x.binary_search(h).is_err()).count();
    if x.len() < need || a_out > 1 || b_out > 1 {
        return None;
    }
    // Z = the shared core of both solutions; each may leave out one hub.
    let mut z: BTreeSet<usize> = a.hubs.iter().chain(&b.hubs).copied().filter(|v| x.binary_search(v).is_ok()).collect();
    for (own, other, out) in [(a, b, a_out), (b, a, b_out)] {
        if z.len() > need && out == 0 {
            if let Some(h) = own.hubs.iter().find(|h| other.hubs.binary_search(h).is_err()) {
                z.remove(h);
            }
        }
    }
    if z.len() > need {
        return None;
    }
    for &v in &x {
        if z.len() == need {
            break;
        }
        z.insert(v);
    }
    let complete = |node: &HubNode, span: &[usize]| {
        let extra = node
            .hubs
            .iter()
            .find(|h| !z.contains(h))
            .or_else(|| span.iter().find(|v| !z.contains(v)))
            .copied()
            .expect("a hub set with j common neighbors spans i + j vertices");
        let mut v: Vec<usize> = z.iter().copied().collect();
        let at = v.binary_search(&extra).unwrap_err();
        v.insert(at, extra);
        v
    };
    Some((complete(a, &ua), complete(b, &ub)))
}

/// Hub sets with at least `j` common neighbors, connected by
/// [`aux_adjacent`].
#[derive(Clone, Debug)]
pub struct AuxGraph {
    i: usize,
    j: usize,
    nodes: Vec<HubNode>,
    adjacency: Vec<Vec<usize>>,
}

impl AuxGraph {
    /// Nodes are listed in lexicographic order of their hub sets.
    pub fn build(g: &Graph, i: usize, j: usize) -> AuxGraph {
        let mut nodes = Vec::new();
        let mut hubs: Vec<usize> = (0..i).collect();
        if i <= g.n() {
            loop {
                let node = HubNode::new(g, hubs.clone());
                if node.common_neighbors.len() >= j {
                    nodes.push(node);
                }
                let Some(pos) = (0..i).rev().find(|&p| hubs[p] < g.n() - i + p) else { break };
                hubs[pos] += 1;
                for q in pos + 1..i {
                    hubs[q] = hubs[q - 1] + 1;
                }
            }
        }
        let adjacency = (0..nodes.len())
            .into_par_iter()
            .map(|a| (0..nodes.len()).filter(|&b| b != a && aux_adjacent(&nodes[a], &nodes[b], i, j)).collect())
            .collect();
        AuxGraph { i, j, nodes, adjacency }
    }

    pub fn nodes(&self) -> &[HubNode] {
        &self.nodes
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Indices of every hub set that hosts `vs`.
    pub fn hosts_of(&self, vs: &[usize]) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&x| self.nodes[x].hosts(vs)).collect()
    }

    /// Node indices of a shortest path from `from` to `to`.
    pub fn path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.nodes.len()];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &y in &self.adjacency[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// Steps from `src` to `tgt` along an aux path. `src` must be hosted by
    /// the first node of `path` and `tgt` by the last.
    fn realize(&self, path: &[usize], src: &[usize], tgt: &[usize]) -> Vec<Vec<usize>> {
        let mut cur = src.to_vec();
        let mut steps = vec![cur.clone()];
        for w in path.windows(2) {
            let (a, b) = (&self.nodes[w[0]], &self.nodes[w[1]]);
            let (va, vb) = bridge(a, b, self.i, self.j).expect("adjacent hub sets share a move");
            exchange_terminals(&mut cur, &va, &mut steps);
            if vb != cur {
                cur = vb;
                steps.push(cur.clone());
            }
        }
        exchange_terminals(&mut cur, tgt, &mut steps);
        steps
    }
}

/// Moves `cur` to `goal` one vertex at a time; both are hosted by the same
/// hub set, so every intermediate set is too.
fn exchange_terminals(cur: &mut Vec<usize>, goal: &[usize], steps: &mut Vec<Vec<usize>>) {
    let (out, inn) = sorted_difference(cur, goal);
    for (x, y) in out.into_iter().zip(inn) {
        cur.retain(|&v| v != x);
        let at = cur.binary_search(&y).unwrap_err();
        cur.insert(at, y);
        steps.push(cur.clone());
    }
}

/// Fixed hub-side algorithm. When both sides are equal the oracle decides,
/// since then the solution size is bounded as well.
pub fn solve_spanning_biclique_fixed_i(instance: &Instance, budget: &OracleBudget) -> Result<Verdict> {
    let (i, j) = match (instance.variant(), instance.property(), instance.rule()) {
        (Variant::Spanning, PropertySpec::Biclique { i, j }, Rule::Tj) => (i.min(j), i.max(j)),
        _ => return Err(not_applicable(SolverKind::SpanningBiclique, instance)),
    };
    let src = instance.source().as_vertices().expect("vertex variant");
    let tgt = instance.target().as_vertices().expect("vertex variant");
    if src == tgt {
        return Ok(Verdict::Yes(ReconfigSequence::single(instance.source().clone())));
    }
    if i == j {
        return oracle::solve_bfs(instance, budget);
    }
    let aux = AuxGraph::build(instance.graph(), i, j);
    let hs = *aux.hosts_of(src).first().ok_or(Error::InfeasibleSource)?;
    let ht = *aux.hosts_of(tgt).first().ok_or(Error::InfeasibleTarget)?;
    let Some(path) = aux.path(hs, ht) else {
        return Ok(Verdict::No);
    };
    let steps = aux.realize(&path, src, tgt);
    Ok(Verdict::Yes(ReconfigSequence::from_steps_dedup(steps.into_iter().map(Solution::vertices).collect())))
}
