//! Gadget constructors that turn instances of known hard problems into
//! reconfiguration instances with the same answer.
//!
//! Input vertices keep their labels; gadget vertices are appended as
//! `n, n + 1, ...` and listed by name in [`GadgetOutput::annotation`].

mod layers;
pub mod source;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

pub use layers::{layer_shape, make_layers_cliques, shortest_path_layers, LayerShape, Layers};

use crate::error::{Error, Result};
use crate::graph_core::{FeasibilityChecker, Graph, Instance, PropertySpec, Rule, Solution, Variant};

/// A constructed instance plus where everything ended up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetOutput {
    pub instance: Instance,
    /// Gadget vertex of each source-problem vertex.
    pub vertex_map: Vec<usize>,
    /// Named groups of gadget vertices, covering every added vertex.
    pub annotation: BTreeMap<String, Vec<usize>>,
}

/// The gadget families, by command-line name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionKind {
    HampathEdgePath,
    SprPath,
    SprCycle,
    SprPathTs,
    SprCycleTs,
    SprSpanTreeTs,
    MisrIndBiclique,
    BcbsSpanBiclique,
    CliquerDiam2,
}

impl ReductionKind {
    pub const ALL: [ReductionKind; 9] = [
        ReductionKind::HampathEdgePath,
        ReductionKind::SprPath,
        ReductionKind::SprCycle,
        ReductionKind::SprPathTs,
        ReductionKind::SprCycleTs,
        ReductionKind::SprSpanTreeTs,
        ReductionKind::MisrIndBiclique,
        ReductionKind::BcbsSpanBiclique,
        ReductionKind::CliquerDiam2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReductionKind::HampathEdgePath => "hampath-edgepath",
            ReductionKind::SprPath => "spr-path",
            ReductionKind::SprCycle => "spr-cycle",
            ReductionKind::SprPathTs => "spr-path-ts",
            ReductionKind::SprCycleTs => "spr-cycle-ts",
            ReductionKind::SprSpanTreeTs => "spr-spantree-ts",
            ReductionKind::MisrIndBiclique => "misr-indbiclique",
            ReductionKind::BcbsSpanBiclique => "bcbs-spanbiclique",
            ReductionKind::CliquerDiam2 => "cliquer-diam2",
        }
    }
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ReductionKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        ReductionKind::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| format!("unknown reduction `{s}`"))
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidSourceProblem(msg.into())
}

fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// Hamiltonian `s`-`t` path to edge-variant path reconfiguration (jumping).
///
/// Adds `v`, `x`, `w`, edges `xv`, `vs`, `tw`, and two tails of `n + 1`
/// edges hanging from `x`. The source takes one tail plus `xv, vs`, the
/// target the other tail plus the same two edges.
pub fn reduce_hampath_to_edge_path(g: &Graph, s: usize, t: usize) -> Result<GadgetOutput> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(invalid(format!("s and t must differ, both are {s}")));
    }
    let n = g.n();
    let (v, x, w) = (n, n + 1, n + 2);
    let s_tail: Vec<usize> = (n + 3..2 * n + 4).collect();
    let t_tail: Vec<usize> = (2 * n + 4..3 * n + 5).collect();
    let tail_edges = |tail: &[usize]| -> Vec<(usize, usize)> {
        let mut es: Vec<(usize, usize)> = tail.windows(2).map(|p| (p[0], p[1])).collect();
        es.push((*tail.last().unwrap(), x));
        es
    };
    let es_tail = tail_edges(&s_tail);
    let et_tail = tail_edges(&t_tail);
    let mut extra = vec![(x, v), (v, s), (t, w)];
    extra.extend(&es_tail);
    extra.extend(&et_tail);
    let graph = g.extended(2 * n + 5, extra)?;
    let source = Solution::edges(es_tail.iter().copied().chain([(x, v), (v, s)]));
    let target = Solution::edges(et_tail.iter().copied().chain([(x, v), (v, s)]));
    let instance = Instance::new(graph, Variant::Edge, Rule::Tj, PropertySpec::Path, source, target)?;
    let annotation = BTreeMap::from([
        ("v".to_string(), vec![v]),
        ("x".to_string(), vec![x]),
        ("w".to_string(), vec![w]),
        ("s_tail".to_string(), s_tail),
        ("t_tail".to_string(), t_tail),
    ]);
    Ok(GadgetOutput { instance, vertex_map: identity(n), annotation })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Closure {
    Path,
    Cycle,
}

/// Validated shortest-path reconfiguration input.
struct Spr {
    layers: Layers,
    vs: Vec<usize>,
    vt: Vec<usize>,
}

fn check_spr(g: &Graph, s: usize, t: usize, vs: &[usize], vt: &[usize], rule: Rule) -> Result<Spr> {
    let layers = shortest_path_layers(g, s, t)?;
    // The sliding forms close the layers themselves, so they also take
    // inputs that are already closed.
    if layer_shape(g, &layers)? == LayerShape::Cliques
        && rule == Rule::Tj
        && layers.layers().iter().any(|l| l.len() > 1)
    {
        return Err(invalid("the jumping gadgets need independent layers"));
    }
    let checker = FeasibilityChecker::new(g, Variant::Induced, PropertySpec::ShortestStPath { s, t })?;
    let mut sets = Vec::new();
    for (name, set) in [("source", vs), ("target", vt)] {
        let sol = Solution::vertices(set.iter().copied());
        sol.validate(g)?;
        if !checker.check(&sol)? {
            return Err(invalid(format!("{name} {sol} is not a shortest {s}-{t} path")));
        }
        sets.push(sol.as_vertices().unwrap().to_vec());
    }
    let vt = sets.pop().unwrap();
    let vs = sets.pop().unwrap();
    Ok(Spr { layers, vs, vt })
}

#[allow(clippy::too_many_arguments)]
fn spr_gadget(
    g: &Graph,
    s: usize,
    t: usize,
    vs: &[usize],
    vt: &[usize],
    variant: Variant,
    rule: Rule,
    property: PropertySpec,
    closure: Closure,
) -> Result<GadgetOutput> {
    if variant == Variant::Edge {
        return Err(invalid("shortest-path gadgets use the induced or spanning variant"));
    }
    let spr = check_spr(g, s, t, vs, vt, rule)?;
    let base = match rule {
        Rule::Tj => g.clone(),
        Rule::Ts => make_layers_cliques(g, &spr.layers),
    };
    let n = g.n();
    let (added, edges, names): (Vec<usize>, Vec<(usize, usize)>, Vec<&str>) = match closure {
        Closure::Path => {
            let (s1, s2, t1, t2) = (n, n + 1, n + 2, n + 3);
            (vec![s1, s2, t1, t2], vec![(s2, s1), (s1, s), (t, t1), (t1, t2)], vec!["s1", "s2", "t1", "t2"])
        }
        Closure::Cycle => {
            let (s1, t1) = (n, n + 1);
            (vec![s1, t1], vec![(s, s1), (s1, t1), (t1, t)], vec!["s1", "t1"])
        }
    };
    let graph = base.extended(added.len(), edges)?;
    let source = Solution::vertices(spr.vs.iter().chain(&added).copied());
    let target = Solution::vertices(spr.vt.iter().chain(&added).copied());
    let instance = Instance::new(graph, variant, rule, property, source, target)?;
    let annotation = names.into_iter().map(String::from).zip(added.into_iter().map(|v| vec![v])).collect();
    Ok(GadgetOutput { instance, vertex_map: identity(n), annotation })
}

/// Shortest-path reconfiguration to path reconfiguration under jumping:
/// pendant paths `s2 s1 s` and `t t1 t2` pin both ends.
pub fn reduce_spr_to_path(
    g: &Graph,
    s: usize,
    t: usize,
    vs: &[usize],
    vt: &[usize],
    variant: Variant,
) -> Result<GadgetOutput> {
    spr_gadget(g, s, t, vs, vt, variant, Rule::Tj, PropertySpec::Path, Closure::Path)
}

/// As [`reduce_spr_to_path`], but closing `s` and `t` into a cycle through
/// `s1` and `t1`.
pub fn reduce_spr_to_cycle(
    g: &Graph,
    s: usize,
    t: usize,
    vs: &[usize],
    vt: &[usize],
    variant: Variant,
) -> Result<GadgetOutput> {
    spr_gadget(g, s, t, vs, vt, variant, Rule::Tj, PropertySpec::Cycle, Closure::Cycle)
}

/// Sliding form of [`reduce_spr_to_path`]: each layer is made a clique so
/// that every exchange inside a layer is a slide.
pub fn reduce_spr_to_path_ts(
    g: &Graph,
    s: usize,
    t: usize,
    vs: &[usize],
    vt: &[usize],
    variant: Variant,
) -> Result<GadgetOutput> {
    spr_gadget(g, s, t, vs, vt, variant, Rule::Ts, PropertySpec::Path, Closure::Path)
}

/// Sliding form of [`reduce_spr_to_cycle`].
pub fn reduce_spr_to_cycle_ts(
    g: &Graph,
    s: usize,
    t: usize,
    vs: &[usize],
    vt: &[usize],
    variant: Variant,
) -> Result<GadgetOutput> {
    spr_gadget(g, s, t, vs, vt, variant, Rule::Ts, PropertySpec::Cycle, Closure::Cycle)
}

/// The sliding path gadget read as spanning trees: with `s2` and `t2`
/// pinned, every reachable tree is a path.
pub fn reduce_spr_to_spanning_tree_ts(
    g: &Graph,
    s: usize,
    t: usize,
    vs: &[usize],
    vt: &[usize],
) -> Result<GadgetOutput> {
    spr_gadget(g, s, t, vs, vt, Variant::Spanning, Rule::Ts, PropertySpec::Tree, Closure::Path)
}

/// Maximum independent set reconfiguration to induced `(i, |V_s| + 1)`
/// biclique reconfiguration under jumping.
///
/// Adds `i` vertices `L` complete to `V(g)` and to one more vertex `R`.
/// Choosing `i = |V_s| + 1` gives a balanced biclique.
pub fn reduce_misr_to_induced_biclique(g: &Graph, vs: &[usize], vt: &[usize], i: usize) -> Result<GadgetOutput> {
    if i == 0 {
        return Err(invalid("the hub side needs at least one vertex"));
    }
    let alpha = source::independence_number(g);
    let checker = FeasibilityChecker::new(g, Variant::Induced, PropertySpec::Edgeless)?;
    let mut sets = Vec::new();
    for (name, set) in [("source", vs), ("target", vt)] {
        let sol = Solution::vertices(set.iter().copied());
        sol.validate(g)?;
        if !checker.check(&sol)? || sol.len() != alpha {
            return Err(invalid(format!("{name} {sol} is not a maximum independent set (size {alpha})")));
        }
        sets.push(sol);
    }
    let n = g.n();
    let l: Vec<usize> = (n..n + i).collect();
    let r = n + i;
    let mut extra = Vec::new();
    for &h in &l {
        extra.extend((0..n).map(|v| (h, v)));
        extra.push((h, r));
    }
    let graph = g.extended(i + 1, extra)?;
    let lift = |sol: &Solution| {
        Solution::vertices(sol.as_vertices().unwrap().iter().copied().chain(l.iter().copied()).chain([r]))
    };
    let property = PropertySpec::Biclique { i, j: alpha + 1 };
    let instance = Instance::new(graph, Variant::Induced, Rule::Tj, property, lift(&sets[0]), lift(&sets[1]))?;
    let annotation = BTreeMap::from([("L".to_string(), l), ("R".to_string(), vec![r])]);
    Ok(GadgetOutput { instance, vertex_map: identity(n), annotation })
}

/// Sides of a bipartite graph: `side_a` if given (checked), else a
/// 2-coloring putting each component's smallest vertex on side A.
fn bipartition(g: &Graph, side_a: Option<&[usize]>) -> Result<(Vec<usize>, Vec<usize>)> {
    let n = g.n();
    let in_a: Vec<bool> = match side_a {
        Some(a) => {
            let mut mark = vec![false; n];
            for &v in a {
                g.check_vertex(v)?;
                mark[v] = true;
            }
            mark
        }
        None => {
            let mut color: Vec<Option<bool>> = vec![None; n];
            for start in 0..n {
                if color[start].is_some() {
                    continue;
                }
                color[start] = Some(true);
                let mut stack = vec![start];
                while let Some(x) = stack.pop() {
                    for &y in g.neighbors(x) {
                        if color[y].is_none() {
                            color[y] = Some(!color[x].unwrap());
                            stack.push(y);
                        }
                    }
                }
            }
            color.into_iter().map(Option::unwrap).collect()
        }
    };
    if let Some(e) = g.edges().iter().find(|e| in_a[e.u()] == in_a[e.v()]) {
        return Err(invalid(format!("edge {e} does not cross the bipartition")));
    }
    let a = (0..n).filter(|&v| in_a[v]).collect();
    let b = (0..n).filter(|&v| !in_a[v]).collect();
    Ok((a, b))
}

/// Balanced complete bipartite subgraph to spanning `(k, k)`-biclique
/// reconfiguration under jumping.
///
/// Adds two `(k, k)`-bicliques `(A1, B1)` and `(A2, B2)`, joins `B1` to the
/// side `A` of `g` and `B` to `A2`. The source is `A1 ∪ B1`, the target
/// `A2 ∪ B2`.
pub fn reduce_bcbs_to_spanning_biclique(g: &Graph, k: usize, side_a: Option<&[usize]>) -> Result<GadgetOutput> {
    if k == 0 {
        return Err(invalid("k must be positive"));
    }
    let (a, b) = bipartition(g, side_a)?;
    let n = g.n();
    let a1: Vec<usize> = (n..n + k).collect();
    let b1: Vec<usize> = (n + k..n + 2 * k).collect();
    let a2: Vec<usize> = (n + 2 * k..n + 3 * k).collect();
    let b2: Vec<usize> = (n + 3 * k..n + 4 * k).collect();
    let complete = |xs: &[usize], ys: &[usize]| -> Vec<(usize, usize)> {
        xs.iter().flat_map(|&x| ys.iter().map(move |&y| (x, y))).collect()
    };
    let mut extra = complete(&a1, &b1);
    extra.extend(complete(&a2, &b2));
    extra.extend(complete(&b1, &a));
    extra.extend(complete(&b, &a2));
    let graph = g.extended(4 * k, extra)?;
    let source = Solution::vertices(a1.iter().chain(&b1).copied());
    let target = Solution::vertices(a2.iter().chain(&b2).copied());
    let instance =
        Instance::new(graph, Variant::Spanning, Rule::Tj, PropertySpec::Biclique { i: k, j: k }, source, target)?;
    let annotation = BTreeMap::from([
        ("A1".to_string(), a1),
        ("B1".to_string(), b1),
        ("A2".to_string(), a2),
        ("B2".to_string(), b2),
    ]);
    Ok(GadgetOutput { instance, vertex_map: identity(n), annotation })
}

/// Clique reconfiguration under sliding to induced diameter-two
/// reconfiguration under sliding.
///
/// Two copies `L` and `R` of `g` joined by a perfect matching `l_i r_i`. A
/// clique `V` maps to both copies of `V` minus the right copy of its
/// smallest vertex, which leaves exactly one exposed vertex.
pub fn reduce_cliquer_to_diam2(g: &Graph, vs: &[usize], vt: &[usize]) -> Result<GadgetOutput> {
    let checker = FeasibilityChecker::new(g, Variant::Induced, PropertySpec::Clique)?;
    let mut sets = Vec::new();
    for (name, set) in [("source", vs), ("target", vt)] {
        let sol = Solution::vertices(set.iter().copied());
        sol.validate(g)?;
        if !checker.check(&sol)? {
            return Err(invalid(format!("{name} {sol} is not a clique")));
        }
        if sol.len() < 2 {
            return Err(invalid(format!("{name} {sol} must have at least two vertices")));
        }
        sets.push(sol);
    }
    if sets[0].len() != sets[1].len() {
        return Err(invalid("source and target cliques differ in size"));
    }
    let n = g.n();
    let mut extra: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u() + n, e.v() + n)).collect();
    extra.extend((0..n).map(|v| (v, v + n)));
    let graph = g.extended(n, extra)?;
    let lift = |sol: &Solution| {
        let vs = sol.as_vertices().unwrap();
        let exposed = vs[0] + n;
        Solution::vertices(vs.iter().copied().chain(vs.iter().map(|&v| v + n)).filter(move |&v| v != exposed))
    };
    let instance = Instance::new(
        graph,
        Variant::Induced,
        Rule::Ts,
        PropertySpec::DiameterAtMostTwo,
        lift(&sets[0]),
        lift(&sets[1]),
    )?;
    let annotation = BTreeMap::from([("L".to_string(), identity(n)), ("R".to_string(), (n..2 * n).collect())]);
    Ok(GadgetOutput { instance, vertex_map: identity(n), annotation })
}
