//! `eval`: leaderboards and per-topic score matrices for a run directory.

use std::path::PathBuf;

use clap::Args;
use ireval::measures::{score_matrix_with, GainMap, MeasureConfig};
use ireval::Exec;

use crate::errors::{CliError, CliResult};
use crate::io_util::{load_qrels, load_runs_dir};
use crate::report::{leaderboard, parse_measures, render};

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Directory of run files (one run per file).
    #[arg(long)]
    pub runs: PathBuf,
    /// Qrels file.
    #[arg(long)]
    pub qrels: PathBuf,
    /// Measures to report (ndcg, q, nerr, irbu); defaults to all four.
    #[arg(long = "measure", value_delimiter = ',')]
    pub measures: Vec<String>,
    /// Rank cutoff k.
    #[arg(long, default_value_t = 10)]
    pub cutoff: u32,
    /// iRBU persistence.
    #[arg(long, default_value_t = 0.99)]
    pub persistence: f64,
    /// Directory for per-topic matrix TSVs (matrix_<measure>.tsv).
    #[arg(long)]
    pub matrix_out: Option<PathBuf>,
    /// Tolerate nonstandard qrels lines (extra fields, 3-column form).
    #[arg(long)]
    pub lenient_qrels: bool,
}

pub fn run(args: &EvalArgs, exec: Exec) -> CliResult<String> {
    let measures = parse_measures(&args.measures)?;
    let qrels = load_qrels(&args.qrels, args.lenient_qrels)?;
    let runs = load_runs_dir(&args.runs)?;
    let gains = GainMap::linear(qrels.lmax().max(1));
    let cfg = MeasureConfig::new(args.cutoff, args.persistence)?;

    if let Some(dir) = &args.matrix_out {
        std::fs::create_dir_all(dir)
            .map_err(|e| CliError::io(&format!("creating {}", dir.display()), e))?;
    }

    let mut out = String::new();
    for measure in measures {
        let matrix = score_matrix_with(&runs, &qrels, measure, &gains, &cfg, exec)?;
        out.push_str(&format!(
            "# leaderboard measure={} cutoff={} topics={}\n",
            measure.name(),
            args.cutoff,
            matrix.n_topics()
        ));
        out.push_str(&render(&leaderboard(&matrix, measure, args.cutoff)));
        if let Some(dir) = &args.matrix_out {
            let path = dir.join(format!("matrix_{}.tsv", measure.name()));
            std::fs::write(&path, matrix.to_tsv())
                .map_err(|e| CliError::io(&format!("writing {}", path.display()), e))?;
        }
    }
    Ok(out)
}
