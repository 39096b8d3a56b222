//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Brute-force references here are written independently of the library's
//! search code: their own combination enumeration, move tests, BFS and
//! Floyd-Warshall.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use subreconf::graph_core::{check_property, neighbors};
use subreconf::oracle::{solve_bfs, OracleBudget};
use subreconf::reductions::{self, GadgetOutput, ReductionKind};
use subreconf::solvers::{aux_adjacent, route, AuxGraph};
use subreconf::{
    dispatch, DispatchConfig, Graph, Instance, PropertySpec, ReconfigGraph, ReconfigSequence, Rule, Solution,
    SolverKind, Variant, Verdict,
};
use subreconf_cli::format::{format_sequence, parse_sequence};

const SEED: u64 = 0x5eed_2024;
const RANDOM_GRAPHS: usize = 200;
const RANDOM_MAX_N: usize = 7;
const CANONICAL_MAX_N: usize = 5;
const MAX_K: usize = 4;
const SMALL_RGRAPH: usize = 200;
const RUNTIME_LIMIT_SECS: f64 = 600.0;
/// Pairs sampled per configuration that the router sends to the oracle.
const ORACLE_ROUTE_SAMPLES: usize = 12;
/// Pairs per configuration also decided by calling the oracle directly.
const DIRECT_ORACLE_SAMPLES: usize = 4;
const GADGET_MIN_INSTANCES: usize = 30;

// ---------------------------------------------------------------------------
// Test-side graph helpers

fn pairs_of(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges: Vec<(usize, usize)> =
        pairs_of(n).into_iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, e)| e).collect();
    Graph::new(n, edges).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn own_components(g: &Graph) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for e in g.edges() {
        let (a, b) = (find(&mut parent, e.u()), find(&mut parent, e.v()));
        parent[a] = b;
    }
    (0..g.n()).map(|v| find(&mut parent, v)).collect()
}

/// One representative per isomorphism class: masks that are the smallest
/// among all their relabelings.
fn canonical_graphs(n: usize, connected_only: bool) -> Vec<Graph> {
    let pairs = pairs_of(n);
    let index: BTreeMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let perms = permutations(n);
    let relabel: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            pairs
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                    index[&(a, b)]
                })
                .collect()
        })
        .collect();
    (0u64..1 << pairs.len())
        .into_par_iter()
        .filter(|&mask| {
            relabel.iter().all(|map| {
                let mut image = 0u64;
                for (b, &to) in map.iter().enumerate() {
                    image |= (mask >> b & 1) << to;
                }
                image >= mask
            })
        })
        .map(|mask| graph_from_mask(n, mask))
        .filter(|g| !connected_only || n == 0 || own_components(g).iter().all(|&c| c == own_components(g)[0]))
        .collect()
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = pairs_of(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::new(n, edges).unwrap()
}

fn combinations(items: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, items: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..items {
            if items - x < k - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, items, k, cur, out);
            cur.pop();
        }
    }
    rec(0, items, k, &mut cur, &mut out);
    out
}

fn bfs_dist(g: &Graph, s: usize) -> Vec<Option<usize>> {
    let mut d = vec![None; g.n()];
    d[s] = Some(0);
    let mut q = VecDeque::from([s]);
    while let Some(x) = q.pop_front() {
        for &y in g.neighbors(x) {
            if d[y].is_none() {
                d[y] = Some(d[x].unwrap() + 1);
                q.push_back(y);
            }
        }
    }
    d
}

/// Reachability between two explicit states under a move predicate.
fn brute_reach(states: &[Vec<usize>], adjacent: impl Fn(&[usize], &[usize]) -> bool, s: &[usize], t: &[usize]) -> bool {
    let find = |x: &[usize]| states.iter().position(|y| y == x);
    let (Some(a), Some(b)) = (find(s), find(t)) else { return false };
    let mut seen = vec![false; states.len()];
    seen[a] = true;
    let mut q = VecDeque::from([a]);
    while let Some(x) = q.pop_front() {
        if x == b {
            return true;
        }
        for y in 0..states.len() {
            if !seen[y] && adjacent(&states[x], &states[y]) {
                seen[y] = true;
                q.push_back(y);
            }
        }
    }
    false
}

fn one_swap(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && a.iter().filter(|x| !b.contains(x)).count() == 1
}

// ---------------------------------------------------------------------------
// Criteria

struct Line {
    id: usize,
    name: &'static str,
    pass: bool,
    detail: String,
}

fn properties(n: usize) -> Vec<PropertySpec> {
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

fn element_count(g: &Graph, variant: Variant) -> usize {
    if variant == Variant::Edge {
        g.m()
    } else {
        g.n()
    }
}

fn solution_from(g: &Graph, variant: Variant, idx: &[usize]) -> Solution {
    if variant == Variant::Edge {
        Solution::edges(idx.iter().map(|&i| g.edges()[i]))
    } else {
        Solution::vertices(idx.iter().copied())
    }
}

fn elements_adjacent(g: &Graph, variant: Variant, x: usize, y: usize) -> bool {
    if variant == Variant::Edge {
        let (a, b) = (g.edges()[x], g.edges()[y]);
        a.is_incident(b.u()) || a.is_incident(b.v())
    } else {
        g.has_edge(x, y)
    }
}

/// All-pairs move distances over independently enumerated feasible sets.
fn independent_distances(
    g: &Graph,
    variant: Variant,
    rule: Rule,
    prop: PropertySpec,
    k: usize,
) -> (Vec<Solution>, Vec<Vec<usize>>) {
    let mut states: Vec<(Solution, Vec<usize>)> = combinations(element_count(g, variant), k)
        .into_iter()
        .map(|idx| (solution_from(g, variant, &idx), idx))
        .filter(|(sol, _)| check_property(g, sol, variant, prop).unwrap())
        .collect();
    states.sort();
    let n = states.len();
    const INF: usize = usize::MAX / 4;
    let mut d = vec![vec![INF; n]; n];
    for a in 0..n {
        d[a][a] = 0;
        for b in 0..n {
            let (x, y) = (&states[a].1, &states[b].1);
            let out: Vec<usize> = x.iter().copied().filter(|e| !y.contains(e)).collect();
            let inn: Vec<usize> = y.iter().copied().filter(|e| !x.contains(e)).collect();
            if out.len() == 1 && (rule == Rule::Tj || elements_adjacent(g, variant, out[0], inn[0])) {
                d[a][b] = 1;
            }
        }
    }
    for m in 0..n {
        for a in 0..n {
            for b in 0..n {
                if d[a][m] + d[m][b] < d[a][b] {
                    d[a][b] = d[a][m] + d[m][b];
                }
            }
        }
    }
    (states.into_iter().map(|(s, _)| s).collect(), d)
}

/// The sequence as `solve --emit-sequence` prints it, read back and
/// checked the way `verify` does.
fn verify_via_text(inst: &Instance, seq: &ReconfigSequence) -> bool {
    match parse_sequence(&format_sequence(seq), inst.variant()) {
        Ok(parsed) => parsed == *seq && parsed.verify(inst).is_ok(),
        Err(_) => false,
    }
}

#[derive(Default)]
struct EquivalenceTally {
    configs: usize,
    pairs: usize,
    specialized_pairs: usize,
    disagreements: Vec<String>,
    yes_sequences: usize,
    oracle_sequences: usize,
    bad_sequences: Vec<String>,
    small_configs: usize,
    distance_checks: usize,
    distance_mismatches: Vec<String>,
}

impl EquivalenceTally {
    fn merge(mut self, o: EquivalenceTally) -> EquivalenceTally {
        self.configs += o.configs;
        self.pairs += o.pairs;
        self.specialized_pairs += o.specialized_pairs;
        self.disagreements.extend(o.disagreements);
        self.yes_sequences += o.yes_sequences;
        self.oracle_sequences += o.oracle_sequences;
        self.bad_sequences.extend(o.bad_sequences);
        self.small_configs += o.small_configs;
        self.distance_checks += o.distance_checks;
        self.distance_mismatches.extend(o.distance_mismatches);
        self
    }
}

fn check_config(g: &Graph, variant: Variant, rule: Rule, prop: PropertySpec, k: usize, seed: u64) -> EquivalenceTally {
    let mut t = EquivalenceTally::default();
    let budget = OracleBudget::default();
    let rg = ReconfigGraph::build(g, variant, rule, prop, k, &budget).expect("suite instances fit the default budget");
    let nodes = rg.nodes();
    if nodes.is_empty() {
        return t;
    }
    t.configs = 1;
    let comp = rg.component_ids();
    let label = |a: usize, b: usize| {
        format!("n={} edges={:?} {variant} {rule} {prop} {} -> {}", g.n(), g.edges(), nodes[a], nodes[b])
    };
    let instance =
        |a: usize, b: usize| Instance::new(g.clone(), variant, rule, prop, nodes[a].clone(), nodes[b].clone()).unwrap();
    let kind = route(&instance(0, 0), DispatchConfig::default().max_hub_size);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all: Vec<(usize, usize)> = (0..nodes.len()).flat_map(|a| (0..nodes.len()).map(move |b| (a, b))).collect();
    let pairs: Vec<(usize, usize)> = if kind == SolverKind::Oracle {
        all.choose_multiple(&mut rng, ORACLE_ROUTE_SAMPLES).copied().collect()
    } else {
        t.specialized_pairs = all.len();
        all.clone()
    };
    let config = DispatchConfig::default();
    for &(a, b) in &pairs {
        let inst = instance(a, b);
        let out = dispatch(&inst, &config).unwrap();
        t.pairs += 1;
        if out.verdict.is_yes() != (comp[a] == comp[b]) {
            t.disagreements.push(format!("{} via {}: {}", label(a, b), out.solver, out.verdict.label()));
        }
        if let Verdict::Yes(seq) = &out.verdict {
            t.yes_sequences += 1;
            if !verify_via_text(&inst, seq) {
                t.bad_sequences.push(format!("{} via {}", label(a, b), out.solver));
            }
        }
    }

    // The oracle entry point itself, on a few pairs.
    let direct: Vec<(usize, usize)> = all.choose_multiple(&mut rng, DIRECT_ORACLE_SAMPLES).copied().collect();
    let mut direct_results = Vec::new();
    for &(a, b) in &direct {
        let inst = instance(a, b);
        let v = solve_bfs(&inst, &budget).unwrap();
        if v.is_yes() != (comp[a] == comp[b]) {
            t.disagreements.push(format!("{}: solve_bfs {} vs components", label(a, b), v.label()));
        }
        if let Verdict::Yes(seq) = &v {
            t.oracle_sequences += 1;
            if !verify_via_text(&inst, seq) {
                t.bad_sequences.push(format!("{} via solve_bfs", label(a, b)));
            }
        }
        direct_results.push((a, b, v));
    }

    if nodes.len() >= 2 && nodes.len() <= SMALL_RGRAPH {
        t.small_configs += 1;
        let (states, dist) = independent_distances(g, variant, rule, prop, k);
        if states != nodes {
            t.distance_mismatches.push(format!("n={} {variant} {rule} {prop} k={k}: feasible sets differ", g.n()));
            return t;
        }
        for (a, row) in dist.iter().enumerate() {
            let tree = rg.bfs(a);
            for (b, &d) in row.iter().enumerate() {
                let truth = (d < usize::MAX / 4).then_some(d);
                if tree.distance(b) != truth {
                    t.distance_mismatches.push(format!("{}: bfs {:?} vs {:?}", label(a, b), tree.distance(b), truth));
                }
            }
        }
        for (a, b, v) in &direct_results {
            t.distance_checks += 1;
            let got = v.sequence().map(|s| s.moves());
            let truth = (dist[*a][*b] < usize::MAX / 4).then_some(dist[*a][*b]);
            if got != truth {
                t.distance_mismatches.push(format!(
                    "{}: sequence moves {:?} vs distance {:?}",
                    label(*a, *b),
                    got,
                    truth
                ));
            }
        }
    }
    t
}

fn suite_graphs() -> Vec<Graph> {
    let mut graphs: Vec<Graph> = (1..=CANONICAL_MAX_N).flat_map(|n| canonical_graphs(n, true)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..RANDOM_GRAPHS {
        let n = rng.gen_range(2..=RANDOM_MAX_N);
        graphs.push(random_graph(&mut rng, n, 0.5));
    }
    graphs
}

fn equivalence(suite: &[Graph]) -> EquivalenceTally {
    suite
        .par_iter()
        .enumerate()
        .map(|(gi, g)| {
            let mut t = EquivalenceTally::default();
            let mut ci = 0u64;
            for variant in Variant::ALL {
                for rule in Rule::ALL {
                    for prop in properties(g.n()) {
                        for k in 0..=MAX_K {
                            ci += 1;
                            t = t.merge(check_config(g, variant, rule, prop, k, SEED ^ (gi as u64) << 20 ^ ci));
                        }
                    }
                }
            }
            t
        })
        .reduce(EquivalenceTally::default, EquivalenceTally::merge)
}

fn first(v: &[String]) -> String {
    v.first().cloned().unwrap_or_default()
}

fn criteria_1_to_3(suite: &[Graph], out: &mut Vec<Line>) {
    let start = Instant::now();
    let t = equivalence(suite);
    let secs = start.elapsed().as_secs_f64();
    out.push(Line {
        id: 1,
        name: "oracle equivalence",
        pass: t.disagreements.is_empty() && secs < RUNTIME_LIMIT_SECS,
        detail: format!(
            "{} graphs, {} configurations, {} pairs dispatched ({} on specialized routes), {} disagreements, {:.1}s (limit {RUNTIME_LIMIT_SECS}s) {}",
            suite.len(),
            t.configs,
            t.pairs,
            t.specialized_pairs,
            t.disagreements.len(),
            secs,
            first(&t.disagreements)
        ),
    });
    out.push(Line {
        id: 2,
        name: "sequence validity",
        pass: t.bad_sequences.is_empty() && t.yes_sequences + t.oracle_sequences > 0,
        detail: format!(
            "{} dispatched and {} oracle YES sequences checked, {} rejected {}",
            t.yes_sequences,
            t.oracle_sequences,
            t.bad_sequences.len(),
            first(&t.bad_sequences)
        ),
    });
    out.push(Line {
        id: 3,
        name: "shortest witnesses",
        pass: t.distance_mismatches.is_empty() && t.distance_checks > 0,
        detail: format!(
            "{} configurations with 2..={SMALL_RGRAPH} nodes, all-pairs distances plus {} oracle sequences vs Floyd-Warshall, {} mismatches (tolerance 0) {}",
            t.small_configs,
            t.distance_checks,
            t.distance_mismatches.len(),
            first(&t.distance_mismatches)
        ),
    });
}

fn criterion_4(suite: &[Graph], out: &mut Vec<Line>) {
    let budget = OracleBudget::default();
    let mut checked = 0usize;
    let mut counter: BTreeMap<String, usize> = BTreeMap::new();
    for g in suite {
        for prop in [PropertySpec::Cycle, PropertySpec::Clique, PropertySpec::Biclique { i: 2, j: 2 }] {
            for rule in Rule::ALL {
                for k in 0..=MAX_K {
                    let rg = ReconfigGraph::build(g, Variant::Edge, rule, prop, k, &budget).unwrap();
                    for sol in rg.nodes() {
                        checked += 1;
                        if !neighbors(g, sol, Variant::Edge, rule, prop).unwrap().is_empty() {
                            *counter.entry(format!("{prop} k={k} {rule}")).or_default() += 1;
                        }
                    }
                }
            }
        }
    }
    let total: usize = counter.values().sum();
    out.push(Line {
        id: 4,
        name: "edge-variant rigidity",
        pass: total == 0,
        detail: format!("{checked} feasible solutions, {total} with a neighbor {counter:?}"),
    });
}

fn criterion_5(out: &mut Vec<Line>) {
    let graphs: Vec<Graph> = (1..=6).flat_map(|n| canonical_graphs(n, false)).collect();
    let budget = OracleBudget::default();
    let config = DispatchConfig::default();
    let (pairs, bad) = graphs
        .par_iter()
        .map(|g| {
            let comp = own_components(g);
            let mut pairs = 0usize;
            let mut bad = Vec::new();
            for variant in [Variant::Edge, Variant::Spanning] {
                for k in 0..=element_count(g, variant).min(g.n()) {
                    let rg = ReconfigGraph::build(g, variant, Rule::Tj, PropertySpec::Tree, k, &budget).unwrap();
                    let ids = rg.component_ids();
                    let nodes = rg.nodes();
                    for a in 0..nodes.len() {
                        for b in 0..nodes.len() {
                            pairs += 1;
                            let span: Vec<usize> =
                                nodes[a].vertex_span().into_iter().chain(nodes[b].vertex_span()).collect();
                            let condition = k <= 1 || span.iter().all(|&v| comp[v] == comp[span[0]]);
                            let inst = Instance::new(
                                g.clone(),
                                variant,
                                Rule::Tj,
                                PropertySpec::Tree,
                                nodes[a].clone(),
                                nodes[b].clone(),
                            )
                            .unwrap();
                            let got = dispatch(&inst, &config).unwrap();
                            if got.verdict.is_yes() != condition || condition != (ids[a] == ids[b]) {
                                bad.push(format!("{variant} edges={:?} {} -> {}", g.edges(), nodes[a], nodes[b]));
                            }
                        }
                    }
                }
            }
            (pairs, bad)
        })
        .reduce(
            || (0, Vec::new()),
            |(p, mut b), (q, c)| {
                b.extend(c);
                (p + q, b)
            },
        );
    out.push(Line {
        id: 5,
        name: "tree characterization",
        pass: bad.is_empty(),
        detail: format!(
            "{} graphs up to isomorphism (n <= 6), {pairs} pairs, {} disagreements {}",
            graphs.len(),
            bad.len(),
            first(&bad)
        ),
    });
}

fn criterion_6(out: &mut Vec<Line>) {
    let graphs: Vec<Graph> = (1..=6).flat_map(|n| canonical_graphs(n, false)).collect();
    let (pairs, bad) = graphs
        .par_iter()
        .map(|g| {
            let mut pairs = 0usize;
            let mut bad = Vec::new();
            for i in [1, 2] {
                for j in [2, 3] {
                    let aux = AuxGraph::build(g, i, j);
                    // Hosted solutions, from a common neighborhood computed here.
                    let hosted: Vec<Vec<Vec<usize>>> = aux
                        .nodes()
                        .iter()
                        .map(|node| {
                            let common: Vec<usize> = (0..g.n())
                                .filter(|v| !node.hubs.contains(v) && node.hubs.iter().all(|&h| g.has_edge(h, *v)))
                                .collect();
                            combinations(common.len(), j)
                                .into_iter()
                                .map(|c| {
                                    let mut s: Vec<usize> =
                                        c.iter().map(|&x| common[x]).chain(node.hubs.iter().copied()).collect();
                                    s.sort_unstable();
                                    s
                                })
                                .collect()
                        })
                        .collect();
                    let total_hubs = combinations(g.n(), i)
                        .into_iter()
                        .filter(|h| {
                            (0..g.n()).filter(|v| !h.contains(v) && h.iter().all(|&x| g.has_edge(x, *v))).count() >= j
                        })
                        .count();
                    if total_hubs != aux.nodes().len() {
                        bad.push(format!(
                            "edges={:?} ({i},{j}): {} hub sets, expected {total_hubs}",
                            g.edges(),
                            aux.nodes().len()
                        ));
                    }
                    for (a, na) in aux.nodes().iter().enumerate() {
                        for (b, nb) in aux.nodes().iter().enumerate() {
                            pairs += 1;
                            let brute = hosted[a]
                                .iter()
                                .any(|x| hosted[b].iter().any(|y| x.iter().filter(|v| !y.contains(v)).count() <= 1));
                            if aux_adjacent(na, nb, i, j) != brute {
                                bad.push(format!(
                                    "edges={:?} ({i},{j}) {:?} {:?}: brute {brute}",
                                    g.edges(),
                                    na.hubs,
                                    nb.hubs
                                ));
                            }
                        }
                    }
                }
            }
            (pairs, bad)
        })
        .reduce(
            || (0, Vec::new()),
            |(p, mut b), (q, c)| {
                b.extend(c);
                (p + q, b)
            },
        );
    out.push(Line {
        id: 6,
        name: "aux-graph adjacency",
        pass: bad.is_empty(),
        detail: format!(
            "{} graphs up to isomorphism (n <= 6), i in {{1,2}}, j in {{2,3}}, {pairs} hub pairs, {} disagreements {}",
            graphs.len(),
            bad.len(),
            first(&bad)
        ),
    });
}

// ---------------------------------------------------------------------------
// Reduction soundness

struct SprCase {
    g: Graph,
    s: usize,
    t: usize,
    vs: Vec<usize>,
    vt: Vec<usize>,
}

fn spr_case(rng: &mut ChaCha8Rng, max_n: usize) -> SprCase {
    // Parallel strands with few crossings give disconnected instances.
    let strands = rng.gen_bool(0.5);
    let d = rng.gen_range(3..=4);
    let mut layers = vec![vec![0]];
    let mut next = 1;
    for i in 1..d {
        let room = max_n.saturating_sub(next + (d - i)).max(1);
        let size = if strands { room.min(2) } else { rng.gen_range(1..=room.min(2)) };
        layers.push((next..next + size).collect());
        next += size;
    }
    layers.push(vec![next]);
    let n = next + 1;
    let mut edges = BTreeSet::new();
    for w in layers.windows(2) {
        let cross = if strands { 0.1 } else { 0.4 };
        for &x in &w[0] {
            for &y in &w[1] {
                if rng.gen_bool(cross) {
                    edges.insert((x, y));
                }
            }
        }
        for (p, &y) in w[1].iter().enumerate() {
            let x = if strands { w[0][p.min(w[0].len() - 1)] } else { *w[0].choose(rng).unwrap() };
            edges.insert((x, y));
        }
        for (p, &x) in w[0].iter().enumerate() {
            let y = if strands { w[1][p.min(w[1].len() - 1)] } else { *w[1].choose(rng).unwrap() };
            edges.insert((x, y));
        }
    }
    let g = Graph::new(n, edges).unwrap();
    let mut walk = || {
        let mut p = vec![0];
        for layer in &layers[1..] {
            let last = *p.last().unwrap();
            let opts: Vec<usize> = layer.iter().copied().filter(|&y| g.has_edge(last, y)).collect();
            p.push(*opts.choose(rng).unwrap());
        }
        p.sort_unstable();
        p
    };
    let (vs, vt) = if strands {
        let strand = |pick: fn(&Vec<usize>) -> usize| {
            let mut p: Vec<usize> = layers.iter().map(pick).collect();
            p.sort_unstable();
            p
        };
        (strand(|l| l[0]), strand(|l| l[l.len() - 1]))
    } else {
        (walk(), walk())
    };
    SprCase { g, s: 0, t: n - 1, vs, vt }
}

/// Every shortest `s`-`t` path of `g`, as sorted vertex lists.
fn shortest_paths(g: &Graph, s: usize, t: usize) -> Vec<Vec<usize>> {
    let ds = bfs_dist(g, s);
    let d = ds[t].unwrap();
    let mut out = Vec::new();
    fn extend(g: &Graph, ds: &[Option<usize>], t: usize, d: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        if path.len() == d + 1 {
            if last == t {
                let mut p = path.clone();
                p.sort_unstable();
                out.push(p);
            }
            return;
        }
        for &y in g.neighbors(last) {
            if ds[y] == Some(path.len()) {
                path.push(y);
                extend(g, ds, t, d, path, out);
                path.pop();
            }
        }
    }
    extend(g, &ds, t, d, &mut vec![s], &mut out);
    out
}

fn spr_brute(c: &SprCase) -> bool {
    brute_reach(&shortest_paths(&c.g, c.s, c.t), one_swap, &c.vs, &c.vt)
}

/// Edges needed to turn every distance layer from `s` into a clique.
fn layer_pairs(g: &Graph, s: usize) -> usize {
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for d in bfs_dist(g, s) {
        *sizes.entry(d.unwrap()).or_default() += 1;
    }
    sizes.values().map(|&c| c * (c - 1) / 2).sum()
}

fn hamiltonian_brute(g: &Graph, s: usize, t: usize) -> bool {
    let n = g.n();
    permutations(n).into_iter().any(|p| p[0] == s && p[n - 1] == t && p.windows(2).all(|w| g.has_edge(w[0], w[1])))
}

fn independent_sets(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    combinations(g.n(), k)
        .into_iter()
        .filter(|c| c.iter().all(|&a| c.iter().all(|&b| a == b || !g.has_edge(a, b))))
        .collect()
}

fn cliques(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    combinations(g.n(), k)
        .into_iter()
        .filter(|c| c.iter().all(|&a| c.iter().all(|&b| a == b || g.has_edge(a, b))))
        .collect()
}

fn balanced_biclique_brute(g: &Graph, k: usize) -> bool {
    combinations(g.n(), k)
        .into_iter()
        .any(|x| (0..g.n()).filter(|v| !x.contains(v) && x.iter().all(|&h| g.has_edge(h, *v))).count() >= k)
}

#[derive(Default)]
struct GadgetTally {
    instances: usize,
    yes: usize,
    disagreements: Vec<String>,
    size_errors: Vec<String>,
}

impl GadgetTally {
    fn record(&mut self, what: String, source: bool, out: &GadgetOutput, sizes: (usize, usize, usize)) {
        self.instances += 1;
        let reduced = solve_bfs(&out.instance, &OracleBudget::default()).unwrap();
        assert_ne!(reduced, Verdict::BudgetExceeded, "{what}");
        self.yes += usize::from(source);
        if reduced.is_yes() != source {
            self.disagreements.push(format!("{what}: source {source}, reduced {}", reduced.label()));
        }
        let h = out.instance.graph();
        let got = (h.n(), h.m(), out.instance.source().len());
        if got != sizes {
            self.size_errors.push(format!("{what}: (n, m, k) = {got:?}, expected {sizes:?}"));
        }
    }
}

fn criterion_7(out: &mut Vec<Line>) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    let mut tallies: BTreeMap<&'static str, GadgetTally> = BTreeMap::new();

    // Hamiltonian path: every s < t on connected graphs with n <= 4, and a
    // sample on n = 5.
    {
        let t = tallies.entry(ReductionKind::HampathEdgePath.name()).or_default();
        let mut cases = Vec::new();
        for n in 2..=4 {
            for g in canonical_graphs(n, false) {
                for (s, tt) in pairs_of(n) {
                    cases.push((g.clone(), s, tt));
                }
            }
        }
        let five = canonical_graphs(5, true);
        for g in five.choose_multiple(&mut rng, 8) {
            cases.push((g.clone(), 0, 4));
        }
        for (g, s, tt) in cases {
            let o = reductions::reduce_hampath_to_edge_path(&g, s, tt).unwrap();
            let n = g.n();
            t.record(
                format!("edges={:?} {s}-{tt}", g.edges()),
                hamiltonian_brute(&g, s, tt),
                &o,
                (3 * n + 5, g.m() + 2 * n + 5, n + 3),
            );
        }
    }

    // Shortest-path reconfiguration, n <= 6.
    let spr_kinds = [
        ReductionKind::SprPath,
        ReductionKind::SprCycle,
        ReductionKind::SprPathTs,
        ReductionKind::SprCycleTs,
        ReductionKind::SprSpanTreeTs,
    ];
    for c in 0..40 {
        let case = spr_case(&mut rng, 6);
        let (g, s, tt) = (&case.g, case.s, case.t);
        let truth = spr_brute(&case);
        let d = bfs_dist(g, s)[tt].unwrap();
        let closing = layer_pairs(g, s);
        let variant = if c % 2 == 0 { Variant::Induced } else { Variant::Spanning };
        for kind in spr_kinds {
            let (o, sizes) = match kind {
                ReductionKind::SprPath => (
                    reductions::reduce_spr_to_path(g, s, tt, &case.vs, &case.vt, variant),
                    (g.n() + 4, g.m() + 4, d + 5),
                ),
                ReductionKind::SprCycle => (
                    reductions::reduce_spr_to_cycle(g, s, tt, &case.vs, &case.vt, variant),
                    (g.n() + 2, g.m() + 3, d + 3),
                ),
                ReductionKind::SprPathTs => (
                    reductions::reduce_spr_to_path_ts(g, s, tt, &case.vs, &case.vt, variant),
                    (g.n() + 4, g.m() + 4 + closing, d + 5),
                ),
                ReductionKind::SprCycleTs => (
                    reductions::reduce_spr_to_cycle_ts(g, s, tt, &case.vs, &case.vt, variant),
                    (g.n() + 2, g.m() + 3 + closing, d + 3),
                ),
                _ => (
                    reductions::reduce_spr_to_spanning_tree_ts(g, s, tt, &case.vs, &case.vt),
                    (g.n() + 4, g.m() + 4 + closing, d + 5),
                ),
            };
            let what = format!("{kind} {variant} edges={:?} {:?} -> {:?}", g.edges(), case.vs, case.vt);
            tallies.entry(kind.name()).or_default().record(what, truth, &o.unwrap(), sizes);
        }
    }

    // Maximum independent sets, n <= 6.
    {
        let t = tallies.entry(ReductionKind::MisrIndBiclique.name()).or_default();
        let mut graphs: Vec<Graph> = (2..=5).flat_map(|n| canonical_graphs(n, false)).collect();
        graphs.extend((0..10).map(|_| random_graph(&mut rng, 6, 0.4)));
        graphs.shuffle(&mut rng);
        // Even cycles and balanced complete bipartite graphs have two
        // isolated maximum independent sets.
        let k33 = Graph::new(6, [(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
        let rigid = [Graph::cycle(4), Graph::cycle(6), k33, Graph::cycle(4).disjoint_union(&Graph::empty(1))];
        graphs.splice(0..0, rigid.into_iter().flat_map(|g| [g.clone(), g]));
        for g in graphs.iter().take(40) {
            let alpha = (1..=g.n()).rev().find(|&k| !independent_sets(g, k).is_empty()).unwrap();
            let maxima = independent_sets(g, alpha);
            let vs = maxima.choose(&mut rng).unwrap().clone();
            let vt = if t.instances.is_multiple_of(2) {
                maxima.choose(&mut rng).unwrap().clone()
            } else {
                maxima.iter().max_by_key(|m| m.iter().filter(|v| !vs.contains(v)).count()).unwrap().clone()
            };
            let truth = brute_reach(&maxima, one_swap, &vs, &vt);
            let i = [1, 2, alpha + 1][t.instances % 3];
            let o = reductions::reduce_misr_to_induced_biclique(g, &vs, &vt, i).unwrap();
            let sizes = (g.n() + i + 1, g.m() + i * (g.n() + 1), alpha + 1 + i);
            t.record(format!("edges={:?} i={i} {vs:?} -> {vt:?}", g.edges()), truth, &o, sizes);
        }
    }

    // Balanced complete bipartite subgraphs, k <= 2, n <= 6.
    {
        let t = tallies.entry(ReductionKind::BcbsSpanBiclique.name()).or_default();
        for c in 0..40 {
            let n = rng.gen_range(2..=6);
            let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
            let edges: Vec<(usize, usize)> =
                pairs_of(n).into_iter().filter(|&(u, v)| side[u] != side[v] && rng.gen_bool(0.6)).collect();
            let g = Graph::new(n, edges).unwrap();
            let k = 1 + c % 2;
            let o = reductions::reduce_bcbs_to_spanning_biclique(&g, k, None).unwrap();
            let sizes = (n + 4 * k, g.m() + 2 * k * k + k * n, 2 * k);
            t.record(format!("edges={:?} k={k}", g.edges()), balanced_biclique_brute(&g, k), &o, sizes);
        }
    }

    // Clique reconfiguration under sliding, n <= 5.
    {
        let t = tallies.entry(ReductionKind::CliquerDiam2.name()).or_default();
        let mut cases = Vec::new();
        for n in 2..=5 {
            for g in canonical_graphs(n, false) {
                for k in 2..=3 {
                    let cs = cliques(&g, k);
                    if !cs.is_empty() {
                        cases.push((g.clone(), k, cs));
                    }
                }
            }
        }
        cases.shuffle(&mut rng);
        for (g, k, cs) in cases.into_iter().take(40) {
            let vs = cs.choose(&mut rng).unwrap().clone();
            let vt = cs.choose(&mut rng).unwrap().clone();
            let slide = |a: &[usize], b: &[usize]| {
                one_swap(a, b) && {
                    let x = a.iter().find(|v| !b.contains(v)).unwrap();
                    let y = b.iter().find(|v| !a.contains(v)).unwrap();
                    g.has_edge(*x, *y)
                }
            };
            let truth = brute_reach(&cs, slide, &vs, &vt);
            let o = reductions::reduce_cliquer_to_diam2(&g, &vs, &vt).unwrap();
            let sizes = (2 * g.n(), 2 * g.m() + g.n(), 2 * k - 1);
            t.record(format!("edges={:?} {vs:?} -> {vt:?}", g.edges()), truth, &o, sizes);
        }
    }

    let mut pass = tallies.len() == ReductionKind::ALL.len();
    let mut parts = Vec::new();
    let mut problems = Vec::new();
    for kind in ReductionKind::ALL {
        let t = tallies.get(kind.name());
        let (n, yes) = t.map_or((0, 0), |t| (t.instances, t.yes));
        pass &= n >= GADGET_MIN_INSTANCES;
        if let Some(t) = t {
            pass &= t.disagreements.is_empty() && t.size_errors.is_empty();
            problems.extend(t.disagreements.iter().chain(&t.size_errors).cloned());
        }
        parts.push(format!("{kind} {n} ({yes} yes)"));
    }
    out.push(Line {
        id: 7,
        name: "reduction soundness",
        pass,
        detail: format!("{}; {} problems {}", parts.join(", "), problems.len(), first(&problems)),
    });
}

// ---------------------------------------------------------------------------
// Determinism of the command-line reports

fn criterion_8(out: &mut Vec<Line>) {
    let exe = env!("CARGO_BIN_EXE_subreconf");
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let run = |args: &[&str]| -> Vec<u8> {
        let o = Command::new(exe).args(args).env_remove("RECONFIG_BUDGET").output().unwrap();
        let mut bytes = o.stdout;
        bytes.extend(format!("exit={:?}\n", o.status.code()).bytes());
        bytes
    };
    let mut files: Vec<String> = std::fs::read_dir(&golden)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .map(|p| p.to_string_lossy().into_owned())
        .collect();
    files.sort();
    let full_run = || {
        let mut bytes = run(&["bench", golden.to_str().unwrap(), "--no-timing"]);
        bytes.extend(run(&["bench", golden.to_str().unwrap(), "--no-timing", "--csv"]));
        for f in &files {
            bytes.extend(run(&["solve", f, "--emit-sequence"]));
        }
        bytes
    };
    let (a, b) = (full_run(), full_run());

    let expected: HashSet<String> = std::fs::read_to_string(golden.join("expected.txt"))
        .unwrap()
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.replacen(' ', ".json ", 1))
        .collect();
    let csv = String::from_utf8(run(&["bench", golden.to_str().unwrap(), "--no-timing", "--csv"])).unwrap();
    let got: HashSet<String> = csv
        .lines()
        .skip(1)
        .filter(|l| !l.starts_with("exit="))
        .map(|l| {
            let cells: Vec<&str> = l.split(',').collect();
            format!("{} {}", cells[0], cells[2])
        })
        .collect();
    out.push(Line {
        id: 8,
        name: "determinism",
        pass: a == b && got == expected,
        detail: format!(
            "{} golden instances, two runs {} ({} bytes), verdicts {} committed expectations",
            files.len(),
            if a == b { "byte-identical" } else { "DIFFER" },
            a.len(),
            if got == expected { "match" } else { "DO NOT match" }
        ),
    });
}

fn main() {
    let started = Instant::now();
    let suite = suite_graphs();
    let mut lines = Vec::new();
    criteria_1_to_3(&suite, &mut lines);
    criterion_4(&suite, &mut lines);
    criterion_5(&mut lines);
    criterion_6(&mut lines);
    criterion_7(&mut lines);
    criterion_8(&mut lines);
    lines.sort_by_key(|l| l.id);
    let mut failed = 0;
    for l in &lines {
        println!("{} {} {}: {}", if l.pass { "PASS" } else { "FAIL" }, l.id, l.name, l.detail);
        failed += usize::from(!l.pass);
    }
    println!(
        "acceptance: {} of {} criteria pass in {:.1}s",
        lines.len() - failed,
        lines.len(),
        started.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
