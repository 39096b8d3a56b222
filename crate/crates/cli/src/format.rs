//! File formats: instance JSON, reduction source JSON and the canonical
//! one-solution-per-line sequence text.

use std::fs;
use std::path::Path;

use serde::{de::DeserializeOwned, Deserialize, Serialize};
use subreconf::{Edge, Graph, Instance, PropertySpec, ReconfigSequence, Rule, Solution, Variant};

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphSpec {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphSpec {
    pub fn from_graph(g: &Graph) -> GraphSpec {
        GraphSpec { n: g.n(), edges: g.edges().iter().map(|e| [e.u(), e.v()]).collect() }
    }

    pub fn to_graph(&self) -> CliResult<Graph> {
        Graph::new(self.n, self.edges.iter().map(|&[u, v]| (u, v))).map_err(|e| CliError::Data(format!("graph: {e}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VariantName {
    Edge,
    Induced,
    Spanning,
}

impl From<VariantName> for Variant {
    fn from(v: VariantName) -> Variant {
        match v {
            VariantName::Edge => Variant::Edge,
            VariantName::Induced => Variant::Induced,
            VariantName::Spanning => Variant::Spanning,
        }
    }
}

impl From<Variant> for VariantName {
    fn from(v: Variant) -> VariantName {
        match v {
            Variant::Edge => VariantName::Edge,
            Variant::Induced => VariantName::Induced,
            Variant::Spanning => VariantName::Spanning,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RuleName {
    Tj,
    Ts,
}

impl From<RuleName> for Rule {
    fn from(r: RuleName) -> Rule {
        match r {
            RuleName::Tj => Rule::Tj,
            RuleName::Ts => Rule::Ts,
        }
    }
}

impl From<Rule> for RuleName {
    fn from(r: Rule) -> RuleName {
        match r {
            Rule::Tj => RuleName::Tj,
            Rule::Ts => RuleName::Ts,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawProperty", into = "RawProperty")]
pub enum PropertyField {
    Path,
    Cycle,
    Tree,
    Clique,
    Biclique { i: usize, j: usize },
    Edgeless,
    DiameterAtMostTwo,
    ShortestStPath { s: usize, t: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum PropertyKind {
    Path,
    Cycle,
    Tree,
    Clique,
    Biclique,
    Edgeless,
    DiameterAtMostTwo,
    ShortestStPath,
}

/// Flat wire form of a property, so that parameters the kind does not take
/// are rejected like any other unknown field.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProperty {
    kind: PropertyKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    i: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    j: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    s: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    t: Option<usize>,
}

impl TryFrom<RawProperty> for PropertyField {
    type Error = String;

    fn try_from(raw: RawProperty) -> Result<Self, String> {
        let takes: &[&str] = match raw.kind {
            PropertyKind::Biclique => &["i", "j"],
            PropertyKind::ShortestStPath => &["s", "t"],
            _ => &[],
        };
        for (name, value) in [("i", raw.i), ("j", raw.j), ("s", raw.s), ("t", raw.t)] {
            match (takes.contains(&name), value) {
                (true, None) => return Err(format!("property {:?} needs `{name}`", raw.kind)),
                (false, Some(_)) => return Err(format!("property {:?} does not take `{name}`", raw.kind)),
                _ => {}
            }
        }
        Ok(match raw.kind {
            PropertyKind::Path => PropertyField::Path,
            PropertyKind::Cycle => PropertyField::Cycle,
            PropertyKind::Tree => PropertyField::Tree,
            PropertyKind::Clique => PropertyField::Clique,
            PropertyKind::Biclique => PropertyField::Biclique { i: raw.i.unwrap(), j: raw.j.unwrap() },
            PropertyKind::Edgeless => PropertyField::Edgeless,
            PropertyKind::DiameterAtMostTwo => PropertyField::DiameterAtMostTwo,
            PropertyKind::ShortestStPath => PropertyField::ShortestStPath { s: raw.s.unwrap(), t: raw.t.unwrap() },
        })
    }
}

impl From<PropertyField> for RawProperty {
    fn from(p: PropertyField) -> RawProperty {
        let bare = |kind| RawProperty { kind, i: None, j: None, s: None, t: None };
        match p {
            PropertyField::Path => bare(PropertyKind::Path),
            PropertyField::Cycle => bare(PropertyKind::Cycle),
            PropertyField::Tree => bare(PropertyKind::Tree),
            PropertyField::Clique => bare(PropertyKind::Clique),
            PropertyField::Biclique { i, j } => RawProperty { i: Some(i), j: Some(j), ..bare(PropertyKind::Biclique) },
            PropertyField::Edgeless => bare(PropertyKind::Edgeless),
            PropertyField::DiameterAtMostTwo => bare(PropertyKind::DiameterAtMostTwo),
            PropertyField::ShortestStPath { s, t } => {
                RawProperty { s: Some(s), t: Some(t), ..bare(PropertyKind::ShortestStPath) }
            }
        }
    }
}

impl From<PropertyField> for PropertySpec {
    fn from(p: PropertyField) -> PropertySpec {
        match p {
            PropertyField::Path => PropertySpec::Path,
            PropertyField::Cycle => PropertySpec::Cycle,
            PropertyField::Tree => PropertySpec::Tree,
            PropertyField::Clique => PropertySpec::Clique,
            PropertyField::Biclique { i, j } => PropertySpec::Biclique { i, j },
            PropertyField::Edgeless => PropertySpec::Edgeless,
            PropertyField::DiameterAtMostTwo => PropertySpec::DiameterAtMostTwo,
            PropertyField::ShortestStPath { s, t } => PropertySpec::ShortestStPath { s, t },
        }
    }
}

impl From<PropertySpec> for PropertyField {
    fn from(p: PropertySpec) -> PropertyField {
        match p {
            PropertySpec::Path => PropertyField::Path,
            PropertySpec::Cycle => PropertyField::Cycle,
            PropertySpec::Tree => PropertyField::Tree,
            PropertySpec::Clique => PropertyField::Clique,
            PropertySpec::Biclique { i, j } => PropertyField::Biclique { i, j },
            PropertySpec::Edgeless => PropertyField::Edgeless,
            PropertySpec::DiameterAtMostTwo => PropertyField::DiameterAtMostTwo,
            PropertySpec::ShortestStPath { s, t } => PropertyField::ShortestStPath { s, t },
        }
    }
}

/// Solution elements: vertex labels, or `[u, v]` pairs for the edge variant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Elements {
    Vertices(Vec<usize>),
    Edges(Vec<[usize; 2]>),
}

impl Elements {
    /// Empty solutions of either kind become `Vertices([])`, the form `[]`
    /// parses back to.
    pub fn from_solution(sol: &Solution) -> Elements {
        match sol {
            Solution::Edges(es) if es.is_empty() => Elements::Vertices(Vec::new()),
            Solution::Vertices(vs) => Elements::Vertices(vs.clone()),
            Solution::Edges(es) => Elements::Edges(es.iter().map(|e| [e.u(), e.v()]).collect()),
        }
    }

    /// `[]` parses as a vertex list, so emptiness is resolved by `variant`.
    fn to_solution(&self, variant: Variant) -> Solution {
        match (self, variant) {
            (Elements::Vertices(vs), Variant::Edge) if vs.is_empty() => Solution::edges(Vec::<(usize, usize)>::new()),
            (Elements::Vertices(vs), _) => Solution::vertices(vs.iter().copied()),
            (Elements::Edges(es), _) => Solution::edges(es.iter().map(|&[u, v]| (u, v))),
        }
    }
}

/// The on-disk instance document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub graph: GraphSpec,
    pub variant: VariantName,
    pub rule: RuleName,
    pub property: PropertyField,
    pub source: Elements,
    pub target: Elements,
}

impl InstanceFile {
    pub fn from_instance(inst: &Instance) -> InstanceFile {
        InstanceFile {
            graph: GraphSpec::from_graph(inst.graph()),
            variant: inst.variant().into(),
            rule: inst.rule().into(),
            property: inst.property().into(),
            source: Elements::from_solution(inst.source()),
            target: Elements::from_solution(inst.target()),
        }
    }

    pub fn to_instance(&self) -> CliResult<Instance> {
        let g = self.graph.to_graph()?;
        let variant: Variant = self.variant.into();
        let source = self.source.to_solution(variant);
        let target = self.target.to_solution(variant);
        for (name, sol) in [("source", &source), ("target", &target)] {
            sol.validate(&g).map_err(|e| CliError::Data(format!("{name}: {e}")))?;
        }
        Ok(Instance::new(g, variant, self.rule.into(), self.property.into(), source, target)?)
    }

    pub fn parse(text: &str) -> CliResult<InstanceFile> {
        parse_json(text)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("instance files always serialize");
        s.push('\n');
        s
    }
}

/// Deserializes `text`, naming the offending field and position on failure.
pub fn parse_json<T: DeserializeOwned>(text: &str) -> CliResult<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        CliError::Data(format!("field `{path}`: {inner}"))
    })
}

pub fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::NoInput(format!("{}: {e}", path.display())))
}

pub fn load_instance(path: &Path) -> CliResult<Instance> {
    let text = read_file(path)?;
    let file = InstanceFile::parse(&text).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    file.to_instance().map_err(|e| match e {
        CliError::Data(m) => CliError::Data(format!("{}: {m}", path.display())),
        other => other,
    })
}

/// Parses one canonical solution, `{0 1 3}` or `{0-1 1-2}`.
pub fn parse_solution(line: &str, variant: Variant) -> Result<Solution, String> {
    let inner = line
        .trim()
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| format!("expected `{{...}}`, found `{}`", line.trim()))?;
    let number = |s: &str| s.parse::<usize>().map_err(|_| format!("`{s}` is not a vertex"));
    let tokens: Vec<&str> = inner.split_whitespace().collect();
    if variant == Variant::Edge {
        let mut edges = Vec::new();
        for tok in tokens {
            let (u, v) = tok.split_once('-').ok_or_else(|| format!("`{tok}` is not an edge `u-v`"))?;
            let (u, v) = (number(u)?, number(v)?);
            if u == v {
                return Err(format!("`{tok}` is a self-loop"));
            }
            edges.push(Edge::new(u, v));
        }
        Ok(Solution::edges(edges))
    } else {
        let vs = tokens.into_iter().map(number).collect::<Result<Vec<_>, _>>()?;
        Ok(Solution::vertices(vs))
    }
}

/// Reads a sequence file. Blank lines, `#` comments and the header lines
/// printed by `solve` are skipped, so its output can be fed back as is.
pub fn parse_sequence(text: &str, variant: Variant) -> CliResult<ReconfigSequence> {
    let mut steps = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let l = line.trim();
        if l.is_empty() || l.starts_with('#') || l.starts_with("YES") || l.starts_with("solver=") {
            continue;
        }
        let sol = parse_solution(l, variant).map_err(|e| CliError::Data(format!("line {}: {e}", no + 1)))?;
        steps.push(sol);
    }
    Ok(ReconfigSequence::new(steps))
}

pub fn format_sequence(seq: &ReconfigSequence) -> String {
    seq.steps().iter().map(|s| format!("{s}\n")).collect()
}
