use std::path::Path;

use super::Output;
use crate::error::{exit, CliResult};
use crate::format::{load_instance, parse_sequence, read_file};

/// Checks a sequence file against an instance: `ACCEPT steps=<m>`, or
/// `REJECT step=<i> reason=<reason>` at the first violation.
pub fn verify(instance_path: &Path, sequence_path: &Path) -> CliResult<Output> {
    let inst = load_instance(instance_path)?;
    let text = read_file(sequence_path)?;
    let seq = parse_sequence(&text, inst.variant())?;
    Ok(match seq.verify(&inst) {
        Ok(()) => Output::new(format!("ACCEPT steps={}\n", seq.moves()), exit::YES),
        Err(v) => Output::new(format!("REJECT step={} reason={}: {}\n", v.step, v.reason, v.detail), exit::NO),
    })
}
