use crate::error::{Error, Result};
use crate::graph_core::Graph;

/// Distance layers of the shortest `s`-`t` paths: `L_i` holds the vertices
/// lying on some shortest path at distance `i` from `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layers {
    layers: Vec<Vec<usize>>,
}

impl Layers {
    pub fn layers(&self) -> &[Vec<usize>] {
        &self.layers
    }

    /// Length `d` of a shortest path; there are `d + 1` layers.
    pub fn distance(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn layer_of(&self, v: usize) -> Option<usize> {
        self.layers.iter().position(|l| l.binary_search(&v).is_ok())
    }
}

/// `v ∈ L_i` iff `dist(s, v) = i` and `dist(v, t) = d - i`.
pub fn shortest_path_layers(g: &Graph, s: usize, t: usize) -> Result<Layers> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(Error::InvalidSourceProblem(format!("s and t must differ, both are {s}")));
    }
    let from_s = g.distances_from(s);
    let from_t = g.distances_from(t);
    let d = from_s[t].ok_or(Error::Unreachable { s, t })?;
    let mut layers = vec![Vec::new(); d + 1];
    for v in 0..g.n() {
        if let (Some(a), Some(b)) = (from_s[v], from_t[v]) {
            if a + b == d {
                layers[a].push(v);
            }
        }
    }
    Ok(Layers { layers })
}

/// How the edges inside layers look in a shortest-path source instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LayerShape {
    /// Every layer is an independent set.
    Independent,
    /// Every layer is a clique.
    Cliques,
}

/// Checks that every vertex lies on a shortest path and that layers are
/// either all independent or all cliques.
pub fn layer_shape(g: &Graph, layers: &Layers) -> Result<LayerShape> {
    let stray: Vec<usize> = (0..g.n()).filter(|&v| layers.layer_of(v).is_none()).collect();
    if !stray.is_empty() {
        return Err(Error::InvalidSourceProblem(format!(
            "vertices {stray:?} lie on no shortest path between the endpoints"
        )));
    }
    let mut inside = 0usize;
    let mut possible = 0usize;
    for l in layers.layers() {
        possible += l.len() * l.len().saturating_sub(1) / 2;
        for (a, &x) in l.iter().enumerate() {
            inside += l[a + 1..].iter().filter(|&&y| g.has_edge(x, y)).count();
        }
    }
    match inside {
        0 => Ok(LayerShape::Independent),
        k if k == possible => Ok(LayerShape::Cliques),
        k => Err(Error::InvalidSourceProblem(format!(
            "layers must have no inner edges or all {possible} of them, found {k}"
        ))),
    }
}

/// `g` plus every missing edge inside each layer.
pub fn make_layers_cliques(g: &Graph, layers: &Layers) -> Graph {
    let mut extra = Vec::new();
    for l in layers.layers() {
        for (a, &x) in l.iter().enumerate() {
            extra.extend(l[a + 1..].iter().map(|&y| (x, y)));
        }
    }
    g.extended(0, extra).expect("layer vertices are in range")
}
