//! Shared file loading helpers.

use std::path::{Path, PathBuf};

use ireval::trec::{AssessmentSet, Qrels, Run};

use crate::errors::{CliError, CliResult};

pub fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::io(&format!("reading {}", path.display()), e))
}

/// Loads every regular file in `dir` (sorted by name) as a run file.
pub fn load_runs_dir(dir: &Path) -> CliResult<Vec<Run>> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| CliError::io(&format!("reading directory {}", dir.display()), e))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && !is_hidden(p))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(CliError::Precondition(format!(
            "no run files in {}",
            dir.display()
        )));
    }
    let mut runs = Vec::with_capacity(paths.len());
    for path in &paths {
        let text = read_file(path)?;
        let run = Run::parse(&text)
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        runs.push(run);
    }
    let mut ids: Vec<&str> = runs.iter().map(Run::run_id).collect();
    ids.sort_unstable();
    if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
        return Err(CliError::Precondition(format!(
            "duplicate run id '{}' across files",
            w[0]
        )));
    }
    Ok(runs)
}

pub fn load_qrels(path: &Path, lenient: bool) -> CliResult<Qrels> {
    let text = read_file(path)?;
    let opts = if lenient {
        ireval::trec::ParseOptions {
            allow_extra_fields: true,
            allow_three_columns: true,
        }
    } else {
        ireval::trec::ParseOptions::default()
    };
    Qrels::parse_with(&text, opts).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

/// Loads an assessor label file; the assessor id is the file stem.
pub fn load_assessments(path: &Path) -> CliResult<AssessmentSet> {
    let id = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("assessor");
    let text = read_file(path)?;
    AssessmentSet::parse(id, &text)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn is_hidden(path: &Path) -> bool {
    path.file_name()
        .and_then(|n| n.to_str())
        .is_some_and(|n| n.starts_with('.'))
}

/// Seed from the flag, or an entropy-derived one; the caller must echo the
/// chosen seed in the report header.
pub fn resolve_seed(flag: Option<u64>) -> u64 {
    flag.unwrap_or_else(|| {
        use std::time::{SystemTime, UNIX_EPOCH};
        let nanos = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_nanos() as u64)
            .unwrap_or(0);
        nanos ^ (std::process::id() as u64).rotate_left(32)
    })
}
