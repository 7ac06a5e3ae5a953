//! `compare-rankings`: Kendall's tau grid between qrels-variant rankings.

use std::path::PathBuf;

use clap::Args;
use ireval::measures::{score_matrix_with, GainMap, MeasureConfig};
use ireval::stats::kendall_tau_ci_with;
use ireval::trec::tsv::{write_tsv_report, Cell, Table};
use ireval::Exec;

use crate::errors::{CliError, CliResult};
use crate::io_util::{load_qrels, load_runs_dir, resolve_seed};
use crate::report::parse_measures;

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Directory of run files; every variant is evaluated over these runs.
    #[arg(long)]
    pub runs: PathBuf,
    /// Named qrels variants as name=path; at least two.
    #[arg(long = "variant", required = true)]
    pub variants: Vec<String>,
    /// Measures to compare (default: all four).
    #[arg(long = "measure", value_delimiter = ',')]
    pub measures: Vec<String>,
    #[arg(long, default_value_t = 10)]
    pub cutoff: u32,
    #[arg(long, default_value_t = 0.99)]
    pub persistence: f64,
    /// Bootstrap resamples for the tau confidence intervals.
    #[arg(long, default_value_t = 10_000)]
    pub boot: u32,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub lenient_qrels: bool,
}

pub fn run(args: &CompareArgs, exec: Exec) -> CliResult<String> {
    let measures = parse_measures(&args.measures)?;
    let cfg = MeasureConfig::new(args.cutoff, args.persistence)?;
    let seed = resolve_seed(args.seed);

    let mut variants: Vec<(String, PathBuf)> = Vec::new();
    for spec in &args.variants {
        let (name, path) = spec.split_once('=').ok_or_else(|| {
            CliError::Precondition(format!("variant '{spec}' must be name=path"))
        })?;
        if variants.iter().any(|(n, _)| n == name) {
            return Err(CliError::Precondition(format!(
                "variant name '{name}' given twice"
            )));
        }
        variants.push((name.to_string(), PathBuf::from(path)));
    }
    if variants.len() < 2 {
        return Err(CliError::Precondition(
            "need at least two --variant name=path arguments".into(),
        ));
    }

    let runs = load_runs_dir(&args.runs)?;

    // Mean score per system, per variant, per measure; systems are aligned
    // because every matrix sorts them by run id.
    let mut means: Vec<Vec<Vec<f64>>> = Vec::with_capacity(variants.len());
    for (_, path) in &variants {
        let qrels = load_qrels(path, args.lenient_qrels)?;
        let gains = GainMap::linear(qrels.lmax().max(1));
        let mut per_measure = Vec::with_capacity(measures.len());
        for &measure in &measures {
            let matrix = score_matrix_with(&runs, &qrels, measure, &gains, &cfg, exec)?;
            per_measure.push(matrix.system_means());
        }
        means.push(per_measure);
    }

    let mut out = format!(
        "# compare-rankings cutoff={} boot={} seed={} runs={}\n",
        args.cutoff,
        args.boot,
        seed,
        runs.len()
    );
    let mut table = Table::new(vec![
        "measure", "variant_a", "variant_b", "tau", "ci_low", "ci_high",
    ]);
    for (mi, measure) in measures.iter().enumerate() {
        for a in 0..variants.len() {
            for b in (a + 1)..variants.len() {
                let tau =
                    kendall_tau_ci_with(&means[a][mi], &means[b][mi], args.boot, seed, exec)?;
                table.push(vec![
                    Cell::text(measure.name()),
                    Cell::text(&variants[a].0),
                    Cell::text(&variants[b].0),
                    Cell::Fixed4(tau.tau),
                    Cell::Fixed4(tau.ci_low),
                    Cell::Fixed4(tau.ci_high),
                ]);
            }
        }
    }
    out.push_str(&write_tsv_report(&table));
    Ok(out)
}
