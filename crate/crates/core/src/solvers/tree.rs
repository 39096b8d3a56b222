//! Trees under token jumping: any two trees of the same size in one
//! connected component are reachable, for edge subsets and (through a
//! projection) for spanning vertex subsets.

use std::collections::{BTreeMap, VecDeque};

use super::{edge_walk, require, SolverKind};
use crate::error::Result;
use crate::graph_core::{Edge, Graph, Instance, PropertySpec, ReconfigSequence, Rule, Solution, Variant};
use crate::verdict::Verdict;

pub fn solve_edge_tree_tj(instance: &Instance) -> Result<Verdict> {
    require(
        instance.variant() == Variant::Edge && instance.property() == PropertySpec::Tree && instance.rule() == Rule::Tj,
        SolverKind::EdgeTree,
        instance,
    )?;
    let g = instance.graph();
    let src = instance.source().as_edges().expect("edge variant");
    let tgt = instance.target().as_edges().expect("edge variant");
    if src == tgt {
        return Ok(Verdict::Yes(ReconfigSequence::single(instance.source().clone())));
    }
    if src.len() <= 1 {
        return Ok(Verdict::Yes(ReconfigSequence::new(vec![instance.source().clone(), instance.target().clone()])));
    }
    let comp = g.component_ids();
    if comp[src[0].u()] != comp[tgt[0].u()] {
        return Ok(Verdict::No);
    }
    let steps = exchange_trees(g, src, tgt);
    Ok(Verdict::Yes(ReconfigSequence::new(steps.into_iter().map(Solution::edges).collect())))
}

pub fn solve_spanning_tree_tj(instance: &Instance) -> Result<Verdict> {
    require(
        instance.variant() == Variant::Spanning
            && instance.property() == PropertySpec::Tree
            && instance.rule() == Rule::Tj,
        SolverKind::SpanningTree,
        instance,
    )?;
    let g = instance.graph();
    let src = instance.source().as_vertices().expect("vertex variant");
    let tgt = instance.target().as_vertices().expect("vertex variant");
    if src == tgt {
        return Ok(Verdict::Yes(ReconfigSequence::single(instance.source().clone())));
    }
    if src.len() <= 1 {
        return Ok(Verdict::Yes(ReconfigSequence::new(vec![instance.source().clone(), instance.target().clone()])));
    }
    let comp = g.component_ids();
    if comp[src[0]] != comp[tgt[0]] {
        return Ok(Verdict::No);
    }
    let steps: Vec<Solution> = if src.len() == 2 {
        let walk = edge_walk(g, Edge::new(src[0], src[1]), Edge::new(tgt[0], tgt[1])).expect("same component");
        walk.into_iter().map(|e| Solution::vertices([e.u(), e.v()])).collect()
    } else {
        let ts = dfs_spanning_tree(g, src);
        let tt = dfs_spanning_tree(g, tgt);
        exchange_trees(g, &ts, &tt).iter().map(|es| Solution::vertices(vertex_set(es))).collect()
    };
    Ok(Verdict::Yes(ReconfigSequence::from_steps_dedup(steps)))
}

/// Spanning tree of `g[vs]` found by depth-first search from the smallest
/// vertex, scanning neighbors in ascending order. `g[vs]` must be connected.
fn dfs_spanning_tree(g: &Graph, vs: &[usize]) -> Vec<Edge> {
    let inside = |v: usize| vs.binary_search(&v).is_ok();
    let mut seen = vec![false; g.n()];
    let mut tree = Vec::with_capacity(vs.len().saturating_sub(1));
    let mut stack: Vec<(usize, usize)> = vec![(vs[0], 0)];
    seen[vs[0]] = true;
    while let Some(top) = stack.last_mut() {
        let (v, next) = *top;
        let nbrs = g.neighbors(v);
        match (next..nbrs.len()).find(|&p| inside(nbrs[p]) && !seen[nbrs[p]]) {
            Some(p) => {
                top.1 = p + 1;
                let w = nbrs[p];
                seen[w] = true;
                tree.push(Edge::new(v, w));
                stack.push((w, 0));
            }
            None => {
                stack.pop();
            }
        }
    }
    debug_assert_eq!(tree.len() + 1, vs.len(), "g[vs] must be connected");
    tree.sort_unstable();
    tree
}

/// Sequence of sorted edge sets from tree `src` to tree `tgt` (equal sizes,
/// at least two edges, same component), one edge exchanged per step.
///
/// While the trees are vertex-disjoint, a leaf edge of the current tree is
/// traded for the first edge of a shortest path towards the target. Once
/// they meet, the largest shared subtree grows by one target edge per step.
fn exchange_trees(g: &Graph, src: &[Edge], tgt: &[Edge]) -> Vec<Vec<Edge>> {
    let bound = src.len() + g.n();
    let mut cur = src.to_vec();
    let mut out = vec![cur.clone()];
    while cur != tgt {
        let (remove, add) = next_exchange(g, &cur, tgt);
        cur.retain(|e| *e != remove);
        let at = cur.binary_search(&add).expect_err("added edge is new");
        cur.insert(at, add);
        out.push(cur.clone());
        assert!(out.len() - 1 <= bound, "tree exchange exceeded {bound} moves");
    }
    out
}

fn next_exchange(g: &Graph, cur: &[Edge], tgt: &[Edge]) -> (Edge, Edge) {
    let vc = vertex_set(cur);
    let vt = vertex_set(tgt);
    let deg = degrees(cur);
    let leaf_edge = |keep: &dyn Fn(usize) -> bool| -> Edge {
        *cur.iter()
            .find(|e| [e.u(), e.v()].into_iter().any(|x| deg[&x] == 1 && keep(x)))
            .expect("a tree with two or more edges has two leaves")
    };

    let common: Vec<usize> = vc.iter().copied().filter(|v| vt.binary_search(v).is_ok()).collect();
    if common.is_empty() {
        let path = g.shortest_path_between_sets(&vc, &vt).expect("trees lie in one component");
        let (v0, v1) = (path[0], path[1]);
        return (leaf_edge(&|x| x != v0), Edge::new(v0, v1));
    }

    let shared: Vec<Edge> = cur.iter().copied().filter(|e| tgt.binary_search(e).is_ok()).collect();
    let core = largest_shared_subtree(&common, &shared);
    let in_core = |v: usize| core.binary_search(&v).is_ok();
    let e_t = *tgt
        .iter()
        .find(|e| in_core(e.u()) != in_core(e.v()))
        .expect("the shared subtree is a proper subtree of the target");
    let outer = if in_core(e_t.u()) { e_t.v() } else { e_t.u() };
    if vc.binary_search(&outer).is_ok() {
        let inner = e_t.other(outer).unwrap();
        let cycle = tree_path(cur, inner, outer);
        let remove = *cycle.iter().filter(|e| tgt.binary_search(e).is_err()).min().expect("the target has no cycle");
        (remove, e_t)
    } else {
        (leaf_edge(&|x| !in_core(x)), e_t)
    }
}

/// Vertex set of the component of `(vertices, edges)` with the most edges,
/// ties going to the component with the smallest vertex.
fn largest_shared_subtree(vertices: &[usize], edges: &[Edge]) -> Vec<usize> {
    let mut adj: BTreeMap<usize, Vec<usize>> = vertices.iter().map(|&v| (v, Vec::new())).collect();
    for e in edges {
        adj.get_mut(&e.u()).unwrap().push(e.v());
        adj.get_mut(&e.v()).unwrap().push(e.u());
    }
    let mut seen: BTreeMap<usize, bool> = vertices.iter().map(|&v| (v, false)).collect();
    let mut best: Option<(usize, Vec<usize>)> = None;
    for &start in vertices {
        if seen[&start] {
            continue;
        }
        let mut comp = vec![start];
        seen.insert(start, true);
        let mut i = 0;
        while i < comp.len() {
            for &w in &adj[&comp[i]] {
                if !seen[&w] {
                    seen.insert(w, true);
                    comp.push(w);
                }
            }
            i += 1;
        }
        let size = comp.len() - 1;
        if best.as_ref().is_none_or(|(b, _)| size > *b) {
            comp.sort_unstable();
            best = Some((size, comp));
        }
    }
    best.expect("at least one common vertex").1
}

/// Edges of the unique path between `a` and `b` in the tree `edges`.
fn tree_path(edges: &[Edge], a: usize, b: usize) -> Vec<Edge> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for e in edges {
        adj.entry(e.u()).or_default().push(e.v());
        adj.entry(e.v()).or_default().push(e.u());
    }
    let mut parent: BTreeMap<usize, usize> = BTreeMap::from([(a, a)]);
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            break;
        }
        for &y in &adj[&x] {
            if let std::collections::btree_map::Entry::Vacant(slot) = parent.entry(y) {
                slot.insert(x);
                queue.push_back(y);
            }
        }
    }
    let mut path = Vec::new();
    let mut cur = b;
    while cur != a {
        let p = parent[&cur];
        path.push(Edge::new(p, cur));
        cur = p;
    }
    path
}

fn vertex_set(edges: &[Edge]) -> Vec<usize> {
    let mut vs: Vec<usize> = edges.iter().flat_map(|e| [e.u(), e.v()]).collect();
    vs.sort_unstable();
    vs.dedup();
    vs
}

fn degrees(edges: &[Edge]) -> BTreeMap<usize, usize> {
    let mut deg = BTreeMap::new();
    for e in edges {
        *deg.entry(e.u()).or_insert(0) += 1;
        *deg.entry(e.v()).or_insert(0) += 1;
    }
    deg
}
