//! Edge-variant properties with little or no freedom of movement.

use super::{edge_walk, not_applicable, require, SolverKind};
use crate::error::Result;
use crate::graph_core::{Edge, Instance, PropertySpec, ReconfigSequence, Rule, Solution, Variant};
use crate::oracle::{self, OracleBudget};
use crate::verdict::Verdict;

/// Cycles admit no feasible move at all, so the answer is YES iff the two
/// edge sets are equal.
pub fn solve_edge_cycle(instance: &Instance) -> Result<Verdict> {
    require(
        instance.variant() == Variant::Edge && instance.property() == PropertySpec::Cycle,
        SolverKind::EdgeCycle,
        instance,
    )?;
    Ok(identity_only(instance))
}

/// Same argument as for cycles once there are three edges or more: removing
/// any clique edge leaves a graph that no single added edge turns back into
/// a clique. A lone edge (`K_2`) moves like a `(1, 1)`-biclique.
pub fn solve_edge_clique(instance: &Instance) -> Result<Verdict> {
    require(
        instance.variant() == Variant::Edge && instance.property() == PropertySpec::Clique,
        SolverKind::EdgeClique,
        instance,
    )?;
    if instance.source().len() == 1 && instance.source() != instance.target() {
        let src = instance.source().as_edges().expect("edge variant")[0];
        let tgt = instance.target().as_edges().expect("edge variant")[0];
        return Ok(single_edge(instance, src, tgt));
    }
    Ok(identity_only(instance))
}

/// One edge to another: a jump, or a walk through shared endpoints.
fn single_edge(instance: &Instance, src: Edge, tgt: Edge) -> Verdict {
    match instance.rule() {
        Rule::Tj => Verdict::Yes(ReconfigSequence::new(vec![instance.source().clone(), instance.target().clone()])),
        Rule::Ts => match edge_walk(instance.graph(), src, tgt) {
            Some(walk) => Verdict::Yes(ReconfigSequence::new(walk.into_iter().map(|e| Solution::edges([e])).collect())),
            None => Verdict::No,
        },
    }
}

fn identity_only(instance: &Instance) -> Verdict {
    if instance.source() == instance.target() {
        Verdict::Yes(ReconfigSequence::single(instance.source().clone()))
    } else {
        Verdict::No
    }
}

/// Bicliques with parts `i <= j`:
///
/// * `i, j >= 2`: rigid, YES iff equal.
/// * `i = 1, j >= 3`: stars; the center can never change, leaves can be
///   exchanged freely.
/// * `i = 1, j <= 2`: single edges and two-edge paths, decided by
///   connectivity, except two-edge paths under sliding, which go to the
///   oracle (the solution size is 2).
pub fn solve_edge_biclique(instance: &Instance, budget: &OracleBudget) -> Result<Verdict> {
    let (i, j) = match (instance.variant(), instance.property()) {
        (Variant::Edge, PropertySpec::Biclique { i, j }) => (i.min(j), i.max(j)),
        _ => return Err(not_applicable(SolverKind::EdgeBiclique, instance)),
    };
    let src = instance.source().as_edges().expect("edge variant");
    let tgt = instance.target().as_edges().expect("edge variant");
    if src == tgt {
        return Ok(Verdict::Yes(ReconfigSequence::single(instance.source().clone())));
    }
    let verdict = match (i, j, instance.rule()) {
        (1, 1, _) => single_edge(instance, src[0], tgt[0]),
        (1, 2, Rule::Tj) => cherry_walk(instance, src, tgt),
        (1, 2, Rule::Ts) => oracle::solve_bfs(instance, budget)?,
        (1, _, _) => star_exchange(src, tgt),
        _ => Verdict::No,
    };
    Ok(verdict)
}

/// Two-edge paths under jumping: keep one edge and re-attach the other
/// anywhere along it, so the pair can walk through the line graph to any
/// pair in the same component.
fn cherry_walk(instance: &Instance, src: &[Edge], tgt: &[Edge]) -> Verdict {
    let g = instance.graph();
    let index = |e: &Edge| g.edge_index(*e).expect("solution edges are in the graph");
    let line = line_graph(instance);
    let from: Vec<usize> = src.iter().map(index).collect();
    let to: Vec<usize> = tgt.iter().map(index).collect();
    let Some(path) = line.shortest_path_between_sets(&from, &to) else {
        return Verdict::No;
    };
    let edge = |x: usize| g.edges()[x];
    let x0 = path[0];
    let first_other = if from[0] == x0 { from[1] } else { from[0] };
    let xm = *path.last().unwrap();
    let last_other = if to[0] == xm { to[1] } else { to[0] };
    let mut steps = vec![Solution::edges([edge(x0), edge(first_other)])];
    if path.len() == 1 {
        steps.push(Solution::edges([edge(x0), edge(last_other)]));
    } else {
        steps.extend(path.windows(2).map(|w| Solution::edges([edge(w[0]), edge(w[1])])));
        steps.push(Solution::edges([edge(xm), edge(last_other)]));
    }
    Verdict::Yes(ReconfigSequence::from_steps_dedup(steps))
}

fn line_graph(instance: &Instance) -> crate::graph_core::Graph {
    let g = instance.graph();
    let universe = crate::graph_core::ElementUniverse::new(g, Variant::Edge);
    let mut edges = Vec::new();
    for x in 0..universe.len() {
        edges.extend(universe.slide_targets(x).iter().filter(|&&y| y > x).map(|&y| (x, y)));
    }
    crate::graph_core::Graph::new(universe.len(), edges).expect("line graph is simple")
}

fn star_center(edges: &[Edge]) -> usize {
    let (a, b) = edges[0].endpoints();
    if edges[1].is_incident(a) {
        a
    } else {
        b
    }
}

fn star_exchange(src: &[Edge], tgt: &[Edge]) -> Verdict {
    let center = star_center(src);
    if center != star_center(tgt) {
        return Verdict::No;
    }
    let leaf = |e: &Edge| e.other(center).expect("star edges meet the center");
    let s_leaves: Vec<usize> = src.iter().map(leaf).collect();
    let t_leaves: Vec<usize> = tgt.iter().map(leaf).collect();
    let (out, inn) = crate::graph_core::sorted_difference(&sorted(s_leaves.clone()), &sorted(t_leaves));
    let mut cur = sorted(s_leaves);
    let star = |leaves: &[usize]| Solution::edges(leaves.iter().map(|&l| Edge::new(center, l)));
    let mut steps = vec![star(&cur)];
    for (x, y) in out.into_iter().zip(inn) {
        cur.retain(|&l| l != x);
        cur.push(y);
        steps.push(star(&cur));
    }
    Verdict::Yes(ReconfigSequence::new(steps))
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}
