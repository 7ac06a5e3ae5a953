//! `repro` and `repro-ranks`: reproducibility/replicability reports.

use std::path::{Path, PathBuf};

use clap::Args;
use ireval::measures::{score_matrix_with, GainMap, Measure, MeasureConfig};
use ireval::repro::{kendall_tau_union, rbo, RepliPair, ReproPair};
use ireval::stats::{paired_ttest, unpaired_ttest, unpaired_ttest_welch};
use ireval::trec::tsv::{write_tsv_report, Cell, Table};
use ireval::trec::{Qrels, Run};
use ireval::Exec;

use crate::errors::{CliError, CliResult};
use crate::io_util::{load_qrels, read_file};
use crate::report::parse_measures;

#[derive(Debug, Args)]
pub struct ReproArgs {
    /// Original advanced run (A-run).
    #[arg(long)]
    pub orig_a: PathBuf,
    /// Original baseline run (B-run).
    #[arg(long)]
    pub orig_b: PathBuf,
    /// Reproduced/replicated A-run.
    #[arg(long)]
    pub rep_a: PathBuf,
    /// Reproduced/replicated B-run.
    #[arg(long)]
    pub rep_b: PathBuf,
    /// Qrels for the original runs (and for the reproduced ones unless
    /// --rep-qrels switches to replicability mode).
    #[arg(long)]
    pub qrels: PathBuf,
    /// Qrels for the replicated runs' own topic set; enables replicability
    /// mode, where RMSE-style measures do not apply.
    #[arg(long)]
    pub rep_qrels: Option<PathBuf>,
    #[arg(long = "measure", value_delimiter = ',')]
    pub measures: Vec<String>,
    #[arg(long, default_value_t = 10)]
    pub cutoff: u32,
    #[arg(long, default_value_t = 0.99)]
    pub persistence: f64,
    /// Use Welch's t-test instead of the pooled-variance test
    /// (replicability mode only).
    #[arg(long)]
    pub welch: bool,
    #[arg(long)]
    pub lenient_qrels: bool,
}

pub fn run(args: &ReproArgs, exec: Exec) -> CliResult<String> {
    let measures = parse_measures(&args.measures)?;
    let cfg = MeasureConfig::new(args.cutoff, args.persistence)?;
    let orig_a = load_run(&args.orig_a)?;
    let orig_b = load_run(&args.orig_b)?;
    let rep_a = load_run(&args.rep_a)?;
    let rep_b = load_run(&args.rep_b)?;
    let qrels = load_qrels(&args.qrels, args.lenient_qrels)?;

    let mut header = vec!["metric".to_string(), "run".to_string()];
    header.extend(measures.iter().map(|m| m.label().to_string()));
    let mut table = Table::new(header);

    let out_header;
    match &args.rep_qrels {
        None => {
            out_header = format!(
                "# repro mode=reproducibility cutoff={} persistence={}\n",
                args.cutoff, args.persistence
            );
            // Per measure, all four runs scored over the same topics.
            let mut pairs = Vec::with_capacity(measures.len());
            for &measure in &measures {
                let oa = per_topic_scores(&orig_a, &qrels, measure, &cfg, exec)?;
                let ob = per_topic_scores(&orig_b, &qrels, measure, &cfg, exec)?;
                let ra = per_topic_scores(&rep_a, &qrels, measure, &cfg, exec)?;
                let rb = per_topic_scores(&rep_b, &qrels, measure, &cfg, exec)?;
                pairs.push(ReproPair::new(oa, ob, ra, rb)?);
            }
            push_row(&mut table, "rmse_abs", rep_a.run_id(), &pairs, |p| {
                Ok(Cell::Fixed4(p.rmse_abs_a()))
            })?;
            push_row(&mut table, "rmse_abs", rep_b.run_id(), &pairs, |p| {
                Ok(Cell::Fixed4(p.rmse_abs_b()))
            })?;
            push_row(&mut table, "pvalue_paired", rep_a.run_id(), &pairs, |p| {
                Ok(Cell::PValue(paired_ttest(&p.orig_a, &p.rep_a)?))
            })?;
            push_row(&mut table, "pvalue_paired", rep_b.run_id(), &pairs, |p| {
                Ok(Cell::PValue(paired_ttest(&p.orig_b, &p.rep_b)?))
            })?;
            push_row(&mut table, "rmse_delta", "pair", &pairs, |p| {
                Ok(Cell::Fixed4(p.rmse_delta()))
            })?;
            push_row(&mut table, "effect_ratio", "pair", &pairs, |p| {
                Ok(Cell::Fixed4(p.effect_ratio()?))
            })?;
            push_row(&mut table, "delta_ri", "pair", &pairs, |p| {
                Ok(Cell::Fixed4(p.delta_ri()?))
            })?;
        }
        Some(rep_qrels_path) => {
            out_header = format!(
                "# repro mode=replicability cutoff={} persistence={} welch={}\n",
                args.cutoff, args.persistence, args.welch
            );
            let rep_qrels = load_qrels(rep_qrels_path, args.lenient_qrels)?;
            let mut pairs = Vec::with_capacity(measures.len());
            for &measure in &measures {
                let oa = per_topic_scores(&orig_a, &qrels, measure, &cfg, exec)?;
                let ob = per_topic_scores(&orig_b, &qrels, measure, &cfg, exec)?;
                let ra = per_topic_scores(&rep_a, &rep_qrels, measure, &cfg, exec)?;
                let rb = per_topic_scores(&rep_b, &rep_qrels, measure, &cfg, exec)?;
                pairs.push(RepliPair::new(oa, ob, ra, rb)?);
            }
            let ttest = |a: &[f64], b: &[f64]| {
                if args.welch {
                    unpaired_ttest_welch(a, b)
                } else {
                    unpaired_ttest(a, b)
                }
            };
            push_row(&mut table, "pvalue_unpaired", rep_a.run_id(), &pairs, |p| {
                Ok(Cell::PValue(ttest(&p.orig_a, &p.rep_a)?))
            })?;
            push_row(&mut table, "pvalue_unpaired", rep_b.run_id(), &pairs, |p| {
                Ok(Cell::PValue(ttest(&p.orig_b, &p.rep_b)?))
            })?;
            push_row(&mut table, "effect_ratio", "pair", &pairs, |p| {
                Ok(Cell::Fixed4(p.effect_ratio()?))
            })?;
            push_row(&mut table, "delta_ri", "pair", &pairs, |p| {
                Ok(Cell::Fixed4(p.delta_ri()?))
            })?;
        }
    }
    Ok(format!("{out_header}{}", write_tsv_report(&table)))
}

fn push_row<P, F>(
    table: &mut Table,
    metric: &str,
    run: &str,
    pairs: &[P],
    cell: F,
) -> CliResult<()>
where
    F: Fn(&P) -> CliResult<Cell>,
{
    let mut row = vec![Cell::text(metric), Cell::text(run)];
    for p in pairs {
        row.push(cell(p)?);
    }
    table.push(row);
    Ok(())
}

pub fn load_run(path: &Path) -> CliResult<Run> {
    let text = read_file(path)?;
    Run::parse(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

/// Per-topic scores of one run over the qrels' topics, in topic order.
pub fn per_topic_scores(
    run: &Run,
    qrels: &Qrels,
    measure: Measure,
    cfg: &MeasureConfig,
    exec: Exec,
) -> CliResult<Vec<f64>> {
    let gains = GainMap::linear(qrels.lmax().max(1));
    let matrix = score_matrix_with(std::slice::from_ref(run), qrels, measure, &gains, cfg, exec)?;
    Ok(matrix.column(0))
}

#[derive(Debug, Args)]
pub struct ReproRanksArgs {
    /// Original run file.
    #[arg(long)]
    pub orig: PathBuf,
    /// Reproduced run file.
    #[arg(long)]
    pub rep: PathBuf,
    /// Cutoff for the tau-union comparison.
    #[arg(long, default_value_t = 10)]
    pub cutoff: u32,
    /// RBO persistence.
    #[arg(long = "rbo-p", default_value_t = 0.8)]
    pub rbo_p: f64,
}

/// Ranking-only comparison (no qrels): per-topic Kendall's tau union and
/// rank-biased overlap, plus their means.
pub fn run_ranks(args: &ReproRanksArgs) -> CliResult<String> {
    let orig = load_run(&args.orig)?;
    let rep = load_run(&args.rep)?;
    let topics: Vec<&str> = orig
        .topics()
        .filter(|t| rep.ranking(t).is_some())
        .collect();
    if topics.is_empty() {
        return Err(CliError::Precondition(
            "the two runs share no topics".into(),
        ));
    }
    let mut table = Table::new(vec!["topic", "ktu", "rbo"]);
    let mut ktu_sum = 0.0;
    let mut rbo_sum = 0.0;
    for topic in &topics {
        let a = orig.doc_ids(topic).unwrap();
        let b = rep.doc_ids(topic).unwrap();
        let ktu = kendall_tau_union(&a, &b, args.cutoff as usize)?;
        let overlap = rbo(&a, &b, args.rbo_p)?;
        ktu_sum += ktu;
        rbo_sum += overlap;
        table.push(vec![
            Cell::text(*topic),
            Cell::Fixed4(ktu),
            Cell::Fixed4(overlap),
        ]);
    }
    let n = topics.len() as f64;
    table.push(vec![
        Cell::text("mean"),
        Cell::Fixed4(ktu_sum / n),
        Cell::Fixed4(rbo_sum / n),
    ]);
    let mut out = format!(
        "# repro-ranks cutoff={} rbo_p={} topics={}\n",
        args.cutoff,
        args.rbo_p,
        topics.len()
    );
    out.push_str(&write_tsv_report(&table));
    Ok(out)
}
