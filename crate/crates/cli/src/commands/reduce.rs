use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use subreconf::oracle::solve_bfs;
use subreconf::reductions::source::{
    clique_reconfiguration_ts, has_balanced_biclique, has_hamiltonian_st_path, max_independent_set_reconfiguration,
    shortest_path_reconfiguration,
};
use subreconf::reductions::{self, GadgetOutput, ReductionKind};
use subreconf::{OracleBudget, Variant, Verdict};

use super::Output;
use crate::error::{exit, CliError, CliResult};
use crate::format::{parse_json, read_file, GraphSpec, InstanceFile, VariantName};

/// Input of `reduce`: a graph plus the fields its reduction kind needs.
///
/// * `hampath-edgepath`: `s`, `t`
/// * `spr-*`: `s`, `t`, `source`, `target` (shortest `s`-`t` paths)
/// * `misr-indbiclique`: `source`, `target` (maximum independent sets),
///   optional `i` (default `|source| + 1`)
/// * `bcbs-spanbiclique`: `k`, optional `side_a`
/// * `cliquer-diam2`: `source`, `target` (cliques)
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SourceFile {
    pub graph: GraphSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side_a: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Default)]
pub struct ReduceOptions {
    /// Induced or spanning; only the shortest-path kinds take one.
    pub variant: Option<VariantName>,
    pub out: Option<PathBuf>,
    pub annotation: Option<PathBuf>,
    pub check: bool,
    pub budget: OracleBudget,
}

#[derive(Serialize)]
struct AnnotationFile<'a> {
    vertex_map: &'a [usize],
    annotation: &'a BTreeMap<String, Vec<usize>>,
}

fn need<T: Clone>(field: &Option<T>, name: &str, kind: ReductionKind) -> CliResult<T> {
    field.clone().ok_or_else(|| CliError::Data(format!("{kind} needs the field `{name}`")))
}

fn is_spr(kind: ReductionKind) -> bool {
    matches!(
        kind,
        ReductionKind::SprPath
            | ReductionKind::SprCycle
            | ReductionKind::SprPathTs
            | ReductionKind::SprCycleTs
            | ReductionKind::SprSpanTreeTs
    )
}

/// Builds the gadget and, with `check`, the brute-force source verdict.
fn build(kind: ReductionKind, src: &SourceFile, variant: Variant) -> CliResult<GadgetOutput> {
    let g = src.graph.to_graph()?;
    let out = match kind {
        ReductionKind::HampathEdgePath => {
            reductions::reduce_hampath_to_edge_path(&g, need(&src.s, "s", kind)?, need(&src.t, "t", kind)?)
        }
        ReductionKind::MisrIndBiclique => {
            let vs = need(&src.source, "source", kind)?;
            let i = src.i.unwrap_or(vs.len() + 1);
            reductions::reduce_misr_to_induced_biclique(&g, &vs, &need(&src.target, "target", kind)?, i)
        }
        ReductionKind::BcbsSpanBiclique => {
            reductions::reduce_bcbs_to_spanning_biclique(&g, need(&src.k, "k", kind)?, src.side_a.as_deref())
        }
        ReductionKind::CliquerDiam2 => reductions::reduce_cliquer_to_diam2(
            &g,
            &need(&src.source, "source", kind)?,
            &need(&src.target, "target", kind)?,
        ),
        spr => {
            let (s, t) = (need(&src.s, "s", kind)?, need(&src.t, "t", kind)?);
            let (vs, vt) = (need(&src.source, "source", kind)?, need(&src.target, "target", kind)?);
            match spr {
                ReductionKind::SprPath => reductions::reduce_spr_to_path(&g, s, t, &vs, &vt, variant),
                ReductionKind::SprCycle => reductions::reduce_spr_to_cycle(&g, s, t, &vs, &vt, variant),
                ReductionKind::SprPathTs => reductions::reduce_spr_to_path_ts(&g, s, t, &vs, &vt, variant),
                ReductionKind::SprCycleTs => reductions::reduce_spr_to_cycle_ts(&g, s, t, &vs, &vt, variant),
                ReductionKind::SprSpanTreeTs => reductions::reduce_spr_to_spanning_tree_ts(&g, s, t, &vs, &vt),
                _ => unreachable!("all other kinds are matched above"),
            }
        }
    };
    Ok(out?)
}

/// Answer to the source problem by exhaustive search; `None` when the
/// search ran out of budget.
fn source_answer(kind: ReductionKind, src: &SourceFile, budget: &OracleBudget) -> CliResult<Option<bool>> {
    let g = src.graph.to_graph()?;
    let answer = |v: Verdict| match v {
        Verdict::BudgetExceeded => None,
        v => Some(v.is_yes()),
    };
    let v = match kind {
        ReductionKind::HampathEdgePath => {
            Some(has_hamiltonian_st_path(&g, need(&src.s, "s", kind)?, need(&src.t, "t", kind)?))
        }
        ReductionKind::MisrIndBiclique => answer(max_independent_set_reconfiguration(
            &g,
            &need(&src.source, "source", kind)?,
            &need(&src.target, "target", kind)?,
            budget,
        )?),
        ReductionKind::BcbsSpanBiclique => Some(has_balanced_biclique(&g, need(&src.k, "k", kind)?)),
        ReductionKind::CliquerDiam2 => answer(clique_reconfiguration_ts(
            &g,
            &need(&src.source, "source", kind)?,
            &need(&src.target, "target", kind)?,
            budget,
        )?),
        _ => answer(shortest_path_reconfiguration(
            &g,
            need(&src.s, "s", kind)?,
            need(&src.t, "t", kind)?,
            &need(&src.source, "source", kind)?,
            &need(&src.target, "target", kind)?,
            budget,
        )?),
    };
    Ok(v)
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// Writes the gadget instance to `--out` (or stdout) and a summary of its
/// size and named vertices.
pub fn reduce(kind: ReductionKind, source_path: &Path, opts: &ReduceOptions) -> CliResult<Output> {
    let variant = match (is_spr(kind) && kind != ReductionKind::SprSpanTreeTs, opts.variant) {
        (true, None) => Variant::Induced,
        (true, Some(VariantName::Edge)) => {
            return Err(CliError::Usage(format!("{kind} takes --variant induced or spanning")))
        }
        (true, Some(v)) => v.into(),
        (false, None) => Variant::Induced,
        (false, Some(_)) => return Err(CliError::Usage(format!("{kind} does not take --variant"))),
    };
    let text = read_file(source_path)?;
    let src: SourceFile = parse_json(&text).map_err(|e| CliError::Data(format!("{}: {e}", source_path.display())))?;
    let gadget = build(kind, &src, variant)?;
    let inst = &gadget.instance;

    let mut summary = format!(
        "reduced {kind}: vertices={} edges={} solution_size={} variant={} rule={} property={}\n",
        inst.graph().n(),
        inst.graph().m(),
        inst.source().len(),
        inst.variant(),
        inst.rule(),
        inst.property()
    );
    for (name, vs) in &gadget.annotation {
        let list: Vec<String> = vs.iter().map(ToString::to_string).collect();
        summary.push_str(&format!("annotation {name}={}\n", list.join(",")));
    }
    let mut code = 0;
    if opts.check {
        let expected = source_answer(kind, &src, &opts.budget)?;
        let got = solve_bfs(inst, &opts.budget)?;
        let label = |a: Option<bool>| match a {
            Some(true) => "YES",
            Some(false) => "NO",
            None => "BUDGET_EXCEEDED",
        };
        summary.push_str(&format!("check source={} reduced={}", label(expected), got.label()));
        if expected.is_none() || got == Verdict::BudgetExceeded {
            summary.push_str(" inconclusive\n");
            code = exit::BUDGET;
        } else if expected == Some(got.is_yes()) {
            summary.push_str(" agree\n");
        } else {
            summary.push_str(" DISAGREE\n");
            code = exit::SOFTWARE;
        }
    }

    let json = InstanceFile::from_instance(inst).to_json();
    if let Some(path) = &opts.annotation {
        let doc = AnnotationFile { vertex_map: &gadget.vertex_map, annotation: &gadget.annotation };
        write(path, &(serde_json::to_string_pretty(&doc).expect("annotations serialize") + "\n"))?;
    }
    Ok(match &opts.out {
        Some(path) => {
            write(path, &json)?;
            Output { stdout: summary, stderr: String::new(), code }
        }
        None => Output { stdout: json, stderr: summary, code },
    })
}
