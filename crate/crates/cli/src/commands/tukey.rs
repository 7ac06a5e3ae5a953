//! `tukey`: randomised Tukey HSD report over a score matrix.

use std::path::PathBuf;

use clap::Args;
use ireval::stats::{randomized_tukey_hsd_with, TukeyResult};
use ireval::trec::tsv::{write_tsv_report, Cell, Table};
use ireval::trec::ScoreMatrix;
use ireval::Exec;

use crate::errors::{CliError, CliResult};
use crate::io_util::{read_file, resolve_seed};
use crate::report::{fixed4, fixed6};

#[derive(Debug, Args)]
pub struct TukeyArgs {
    /// Per-topic score matrix TSV (topic rows, system columns).
    #[arg(long)]
    pub matrix: PathBuf,
    /// Permutation trials B.
    #[arg(long, default_value_t = 10_000)]
    pub trials: u32,
    /// RNG seed; chosen from entropy and echoed in the header when omitted.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Significance level.
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
}

pub fn run(args: &TukeyArgs, exec: Exec) -> CliResult<String> {
    if !(args.alpha > 0.0 && args.alpha < 1.0) {
        return Err(CliError::Precondition(format!(
            "alpha must be in (0, 1), got {}",
            args.alpha
        )));
    }
    let text = read_file(&args.matrix)?;
    let matrix = ScoreMatrix::parse_tsv(&text)
        .map_err(|e| CliError::Parse(format!("{}: {e}", args.matrix.display())))?;
    let seed = resolve_seed(args.seed);
    let result = randomized_tukey_hsd_with(&matrix, args.trials, seed, exec)?;
    Ok(render_report(&result, args.alpha))
}

/// The three-section report: significant pairs, p-value matrix, effect
/// sizes. Shared with the collection-specific significance commands.
pub fn render_report(result: &TukeyResult, alpha: f64) -> String {
    let mut out = format!(
        "# tukey trials={} seed={} alpha={} v_e2={}\n",
        result.trials(),
        result.seed(),
        fixed4(alpha),
        fixed6(result.v_e2())
    );

    out.push_str(&format!("# significant pairs at alpha={}\n", fixed4(alpha)));
    let mut pair_table = Table::new(vec!["system", "mean", "outperforms"]);
    let pairs = result.significant_pairs(alpha);
    let mut order: Vec<usize> = (0..result.n_systems()).collect();
    order.sort_by(|&a, &b| {
        result
            .system_mean(b)
            .partial_cmp(&result.system_mean(a))
            .unwrap()
            .then_with(|| result.systems()[a].cmp(&result.systems()[b]))
    });
    for &i in &order {
        let mut beaten: Vec<usize> = pairs
            .iter()
            .filter(|(winner, _, _, _)| *winner == i)
            .map(|(_, loser, _, _)| *loser)
            .collect();
        if beaten.is_empty() {
            continue;
        }
        beaten.sort_by(|&a, &b| {
            result
                .system_mean(b)
                .partial_cmp(&result.system_mean(a))
                .unwrap()
                .then_with(|| result.systems()[a].cmp(&result.systems()[b]))
        });
        let names: Vec<&str> = beaten.iter().map(|&j| result.systems()[j].as_str()).collect();
        pair_table.push(vec![
            Cell::text(&result.systems()[i]),
            Cell::Fixed4(result.system_mean(i)),
            Cell::text(names.join(",")),
        ]);
    }
    out.push_str(&write_tsv_report(&pair_table));

    out.push_str("# p-values\n");
    out.push_str(&matrix_section(result, |r, i, j| Cell::PValue(r.p_value(i, j))));
    out.push_str("# effect sizes ES_E2\n");
    out.push_str(&matrix_section(result, |r, i, j| {
        Cell::Fixed4(r.effect_size(i, j))
    }));
    out
}

fn matrix_section<F>(result: &TukeyResult, cell: F) -> String
where
    F: Fn(&TukeyResult, usize, usize) -> Cell,
{
    let mut header = vec!["system".to_string()];
    header.extend(result.systems().iter().cloned());
    let mut table = Table::new(header);
    for i in 0..result.n_systems() {
        let mut row = vec![Cell::text(&result.systems()[i])];
        for j in 0..result.n_systems() {
            row.push(cell(result, i, j));
        }
        table.push(row);
    }
    write_tsv_report(&table)
}
