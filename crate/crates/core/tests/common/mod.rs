#![allow(dead_code)]

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use subreconf::{Graph, PropertySpec, Solution, Variant};

/// Graphs on `min..=max` vertices, each pair joined with probability 1/2.
pub fn graphs(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// Graphs on `min..=max` vertices, each pair joined with probability 4/5.
pub fn dense_graphs(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        prop::collection::vec(prop::bool::weighted(0.8), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, edges).unwrap()
}

pub fn properties(n: usize) -> Vec<PropertySpec> {
    let mut ps = vec![
        PropertySpec::Path,
        PropertySpec::Cycle,
        PropertySpec::Tree,
        PropertySpec::Clique,
        PropertySpec::Edgeless,
        PropertySpec::DiameterAtMostTwo,
        PropertySpec::Biclique { i: 1, j: 1 },
        PropertySpec::Biclique { i: 1, j: 2 },
        PropertySpec::Biclique { i: 1, j: 3 },
        PropertySpec::Biclique { i: 2, j: 2 },
    ];
    if n >= 2 {
        ps.push(PropertySpec::ShortestStPath { s: 0, t: n - 1 });
    }
    ps
}

/// Every subset of the variant's ground set with exactly `k` elements.
pub fn all_subsets(g: &Graph, variant: Variant, k: usize) -> Vec<Solution> {
    let universe = match variant {
        Variant::Edge => g.m(),
        _ => g.n(),
    };
    let mut out = Vec::new();
    for mask in 0u32..(1 << universe) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let idx: Vec<usize> = (0..universe).filter(|b| mask >> b & 1 == 1).collect();
        out.push(match variant {
            Variant::Edge => Solution::edges(idx.iter().map(|&i| g.edges()[i])),
            _ => Solution::vertices(idx),
        });
    }
    out
}

/// A shortest-path reconfiguration input: every vertex lies on a shortest
/// `s`-`t` path, layers are independent, `vs` and `vt` are shortest paths.
#[derive(Clone, Debug)]
pub struct SprInput {
    pub g: Graph,
    pub s: usize,
    pub t: usize,
    pub vs: Vec<usize>,
    pub vt: Vec<usize>,
}

pub fn spr_input(seed: u64, max_n: usize) -> SprInput {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = rng.gen_range(2..=4);
    let mut layers = vec![vec![0]];
    let mut next = 1;
    for i in 1..d {
        let room = max_n.saturating_sub(next + (d - i)).max(1);
        let size = rng.gen_range(1..=room.min(3));
        layers.push((next..next + size).collect());
        next += size;
    }
    layers.push(vec![next]);
    let n = next + 1;
    let mut edges = std::collections::BTreeSet::new();
    for w in layers.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        for &x in a {
            for &y in b {
                if rng.gen_bool(0.4) {
                    edges.insert((x, y));
                }
            }
        }
        for &y in b {
            edges.insert((*a.choose(&mut rng).unwrap(), y));
        }
        for &x in a {
            edges.insert((x, *b.choose(&mut rng).unwrap()));
        }
    }
    let g = Graph::new(n, edges).unwrap();
    let walk = |rng: &mut ChaCha8Rng| {
        let mut path = vec![0];
        for layer in &layers[1..] {
            let last = *path.last().unwrap();
            let options: Vec<usize> = layer.iter().copied().filter(|&y| g.has_edge(last, y)).collect();
            path.push(*options.choose(rng).unwrap());
        }
        path
    };
    let vs = walk(&mut rng);
    let vt = walk(&mut rng);
    SprInput { g, s: 0, t: n - 1, vs, vt }
}

/// A random bipartite graph on 2..=`max_n` vertices.
pub fn bipartite(seed: u64, max_n: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=max_n);
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && rng.gen_bool(0.6) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}
