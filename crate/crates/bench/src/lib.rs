//! Seeded instance generators for the benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use subreconf::graph_core::Edge;
use subreconf::oracle::{enumerate_feasible, OracleBudget};
use subreconf::{Graph, Instance, PropertySpec, Rule, Solution, Variant};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("distinct pairs")
}

/// `G(n, p)` plus a random spanning path, so the result is connected.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = order.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))).collect();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::new(n, edges).expect("deduplicated")
}

/// A tree with `k` edges grown from a random vertex, or `None` if the
/// component reached is too small.
pub fn random_subtree(rng: &mut ChaCha8Rng, g: &Graph, k: usize) -> Option<Vec<Edge>> {
    let root = rng.gen_range(0..g.n());
    let mut inside = vec![false; g.n()];
    inside[root] = true;
    let mut tree = Vec::with_capacity(k);
    while tree.len() < k {
        let frontier: Vec<Edge> = g.edges().iter().copied().filter(|e| inside[e.u()] != inside[e.v()]).collect();
        let &e = frontier.choose(rng)?;
        inside[e.u()] = true;
        inside[e.v()] = true;
        tree.push(e);
    }
    Some(tree)
}

/// Edge-variant tree instance with two random `k`-edge trees.
pub fn edge_tree_instance(rng: &mut ChaCha8Rng, g: &Graph, k: usize) -> Option<Instance> {
    let s = random_subtree(rng, g, k)?;
    let t = random_subtree(rng, g, k)?;
    Instance::new(g.clone(), Variant::Edge, Rule::Tj, PropertySpec::Tree, Solution::edges(s), Solution::edges(t)).ok()
}

/// Spanning-variant tree instance: two random connected `k`-vertex sets.
pub fn spanning_tree_instance(rng: &mut ChaCha8Rng, g: &Graph, k: usize) -> Option<Instance> {
    let mut span = || -> Option<Solution> {
        if k == 0 {
            return Some(Solution::vertices([]));
        }
        let tree = random_subtree(rng, g, k - 1)?;
        let vs = Solution::edges(tree).vertex_span();
        Some(Solution::vertices(if vs.is_empty() { vec![rng.gen_range(0..g.n())] } else { vs }))
    };
    let (s, t) = (span()?, span()?);
    Instance::new(g.clone(), Variant::Spanning, Rule::Tj, PropertySpec::Tree, s, t).ok()
}

/// Two feasible solutions picked uniformly from the exhaustive enumeration.
pub fn enumerated_instance(
    rng: &mut ChaCha8Rng,
    g: &Graph,
    variant: Variant,
    rule: Rule,
    prop: PropertySpec,
    k: usize,
) -> Option<Instance> {
    let all = enumerate_feasible(g, variant, prop, k, &OracleBudget::default()).ok()?;
    let s = all.choose(rng)?.clone();
    let t = all.choose(rng)?.clone();
    Instance::new(g.clone(), variant, rule, prop, s, t).ok()
}
