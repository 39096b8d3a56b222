//! Exact solvers for the source problems of the reductions, used to check a
//! gadget against its origin. All are exponential and meant for small inputs.

use crate::error::Result;
use crate::graph_core::{Graph, Instance, PropertySpec, Rule, Solution, Variant};
use crate::oracle::{self, OracleBudget};
use crate::verdict::Verdict;

/// Whether `g` has a Hamiltonian path from `s` to `t`.
pub fn has_hamiltonian_st_path(g: &Graph, s: usize, t: usize) -> bool {
    fn extend(g: &Graph, v: usize, t: usize, seen: &mut [bool], left: usize) -> bool {
        if left == 0 {
            return v == t;
        }
        if v == t {
            return false;
        }
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                if extend(g, w, t, seen, left - 1) {
                    return true;
                }
                seen[w] = false;
            }
        }
        false
    }
    if s == t {
        return g.n() == 1;
    }
    let mut seen = vec![false; g.n()];
    seen[s] = true;
    extend(g, s, t, &mut seen, g.n() - 1)
}

/// Size of a maximum independent set of `g`.
pub fn independence_number(g: &Graph) -> usize {
    fn best(g: &Graph, cand: &mut Vec<usize>) -> usize {
        let Some(&v) = cand.last() else { return 0 };
        cand.pop();
        // Either v is left out...
        let without = best(g, cand);
        // ...or taken, dropping its neighbors.
        let mut rest: Vec<usize> = cand.iter().copied().filter(|&w| !g.has_edge(v, w)).collect();
        let with = 1 + best(g, &mut rest);
        cand.push(v);
        without.max(with)
    }
    best(g, &mut (0..g.n()).collect())
}

/// Whether `g` contains `K_{k,k}` as a subgraph (`g` bipartite).
pub fn has_balanced_biclique(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    let n = g.n();
    if n < 2 * k {
        return false;
    }
    let mut x: Vec<usize> = (0..k).collect();
    loop {
        let common = (0..n).filter(|&v| x.iter().all(|&h| g.has_edge(h, v))).count();
        if common >= k {
            return true;
        }
        let Some(pos) = (0..k).rev().find(|&p| x[p] < n - k + p) else { return false };
        x[pos] += 1;
        for q in pos + 1..k {
            x[q] = x[q - 1] + 1;
        }
    }
}

/// Shortest-path reconfiguration: can the shortest `s`-`t` path on `vs`
/// become the one on `vt`, changing one vertex at a time?
pub fn shortest_path_reconfiguration(
    g: &Graph,
    s: usize,
    t: usize,
    vs: &[usize],
    vt: &[usize],
    budget: &OracleBudget,
) -> Result<Verdict> {
    let inst = Instance::new(
        g.clone(),
        Variant::Induced,
        Rule::Tj,
        PropertySpec::ShortestStPath { s, t },
        Solution::vertices(vs.iter().copied()),
        Solution::vertices(vt.iter().copied()),
    )?;
    oracle::solve_bfs(&inst, budget)
}

/// Maximum independent set reconfiguration (jumping and sliding coincide).
pub fn max_independent_set_reconfiguration(
    g: &Graph,
    vs: &[usize],
    vt: &[usize],
    budget: &OracleBudget,
) -> Result<Verdict> {
    let inst = Instance::new(
        g.clone(),
        Variant::Induced,
        Rule::Tj,
        PropertySpec::Edgeless,
        Solution::vertices(vs.iter().copied()),
        Solution::vertices(vt.iter().copied()),
    )?;
    oracle::solve_bfs(&inst, budget)
}

/// Clique reconfiguration under token sliding.
pub fn clique_reconfiguration_ts(g: &Graph, vs: &[usize], vt: &[usize], budget: &OracleBudget) -> Result<Verdict> {
    let inst = Instance::new(
        g.clone(),
        Variant::Induced,
        Rule::Ts,
        PropertySpec::Clique,
        Solution::vertices(vs.iter().copied()),
        Solution::vertices(vt.iter().copied()),
    )?;
    oracle::solve_bfs(&inst, budget)
}
