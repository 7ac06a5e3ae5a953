//! Report assembly shared by commands.

use ireval::measures::{Measure, ALL_MEASURES};
use ireval::trec::tsv::{format_fixed, write_tsv_report, Cell, Table};
use ireval::trec::ScoreMatrix;

use crate::errors::{CliError, CliResult};

/// Parses `--measure` values; empty means all four.
pub fn parse_measures(names: &[String]) -> CliResult<Vec<Measure>> {
    if names.is_empty() {
        return Ok(ALL_MEASURES.to_vec());
    }
    let mut out = Vec::with_capacity(names.len());
    for name in names {
        let m = Measure::parse(name).map_err(CliError::from)?;
        if out.contains(&m) {
            return Err(CliError::Precondition(format!(
                "measure '{name}' listed twice"
            )));
        }
        out.push(m);
    }
    Ok(out)
}

/// (run id, mean score) pairs sorted by mean descending, ties broken by run
/// id ascending.
pub fn ranked_means(matrix: &ScoreMatrix) -> Vec<(String, f64)> {
    let mut rows: Vec<(String, f64)> = matrix
        .systems()
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), matrix.column_mean(i)))
        .collect();
    rows.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then_with(|| a.0.cmp(&b.0)));
    rows
}

/// Leaderboard table for one measure.
pub fn leaderboard(matrix: &ScoreMatrix, measure: Measure, cutoff: u32) -> Table {
    let mut table = Table::new(vec![
        "run".to_string(),
        format!("{}@{}", measure.label(), cutoff),
    ]);
    for (run, mean) in ranked_means(matrix) {
        table.push(vec![Cell::Text(run), Cell::Fixed4(mean)]);
    }
    table
}

pub fn render(table: &Table) -> String {
    write_tsv_report(table)
}

pub fn fixed4(x: f64) -> String {
    format_fixed(x, 4)
}

pub fn fixed6(x: f64) -> String {
    format_fixed(x, 6)
}
