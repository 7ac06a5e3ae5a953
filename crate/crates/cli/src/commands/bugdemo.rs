//! `bug-demo`: show how a rank-keyed join against the wrong pool version
//! scrambles labels.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::Args;
use ireval::pooling::{join_assessments, JoinMode};
use ireval::trec::tsv::{write_tsv_report, Cell, Table};
use ireval::trec::parse_pools;

use crate::errors::{CliError, CliResult};
use crate::io_util::read_file;

#[derive(Debug, Args)]
pub struct BugDemoArgs {
    /// Pool stream the assessor actually saw.
    #[arg(long)]
    pub pool: PathBuf,
    /// Pool stream the backend wrongly resolved ranks against (same topics
    /// and document sets, different order).
    #[arg(long)]
    pub reference: PathBuf,
    /// Raw labels: `topic pool_rank level` per line, levels 0..=2.
    #[arg(long)]
    pub labels: PathBuf,
}

pub fn run(args: &BugDemoArgs) -> CliResult<String> {
    let pools = parse_pools(&read_file(&args.pool)?)
        .map_err(|e| CliError::Parse(format!("{}: {e}", args.pool.display())))?;
    let references = parse_pools(&read_file(&args.reference)?)
        .map_err(|e| CliError::Parse(format!("{}: {e}", args.reference.display())))?;
    let labels = parse_labels(&read_file(&args.labels)?)?;

    let ref_by_topic: BTreeMap<&str, _> = references
        .iter()
        .map(|p| (p.topic_id.as_str(), p))
        .collect();

    let mut table = Table::new(vec!["topic", "doc", "correct", "buggy"]);
    let mut total_docs = 0usize;
    let mut divergent = 0usize;
    for pool in &pools {
        let reference = ref_by_topic.get(pool.topic_id.as_str()).ok_or_else(|| {
            CliError::Precondition(format!(
                "topic '{}' missing from the reference pool",
                pool.topic_id
            ))
        })?;
        let raw = labels.get(&pool.topic_id).ok_or_else(|| {
            CliError::Precondition(format!("no labels for topic '{}'", pool.topic_id))
        })?;
        let correct = join_assessments(pool, raw, JoinMode::ByDocId, reference, "assessor")?;
        let buggy = join_assessments(pool, raw, JoinMode::ByRankBuggy, reference, "assessor")?;
        total_docs += pool.len();
        for doc in pool.doc_set() {
            let c = correct.label(&pool.topic_id, doc).unwrap();
            let b = buggy.label(&pool.topic_id, doc).unwrap();
            if c != b {
                divergent += 1;
                table.push(vec![
                    Cell::text(&pool.topic_id),
                    Cell::text(doc),
                    Cell::Int(c as i64),
                    Cell::Int(b as i64),
                ]);
            }
        }
    }
    let mut out = format!(
        "# bug-demo topics={} docs={} divergent={}\n",
        pools.len(),
        total_docs,
        divergent
    );
    out.push_str(&write_tsv_report(&table));
    Ok(out)
}

fn parse_labels(text: &str) -> CliResult<BTreeMap<String, Vec<(u32, u8)>>> {
    let mut map: BTreeMap<String, Vec<(u32, u8)>> = BTreeMap::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(CliError::Parse(format!(
                "labels line {}: expected 3 fields, got {}",
                idx + 1,
                fields.len()
            )));
        }
        let rank: u32 = fields[1].parse().map_err(|_| {
            CliError::Parse(format!("labels line {}: bad rank '{}'", idx + 1, fields[1]))
        })?;
        let level: u8 = fields[2].trim_start_matches('L').parse().map_err(|_| {
            CliError::Parse(format!("labels line {}: bad level '{}'", idx + 1, fields[2]))
        })?;
        map.entry(fields[0].to_string()).or_default().push((rank, level));
    }
    Ok(map)
}
