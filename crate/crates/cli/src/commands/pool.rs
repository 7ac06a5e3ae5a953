//! `pool`: build depth-k pools from runs.

use std::collections::BTreeSet;
use std::path::PathBuf;

use clap::Args;
use ireval::pooling::{build_pool, PoolSpec};
use ireval::trec::{serialize_pools, PoolOrdering};

use crate::errors::CliResult;
use crate::io_util::{load_runs_dir, resolve_seed};

#[derive(Debug, Args)]
pub struct PoolArgs {
    /// Directory of run files.
    #[arg(long)]
    pub runs: PathBuf,
    /// Pool depth k.
    #[arg(long)]
    pub depth: u32,
    /// Presentation order: pri or rnd.
    #[arg(long)]
    pub ordering: String,
    /// Shuffle seed (rnd only). Chosen from entropy and recorded in the
    /// output header when omitted.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Topics to pool; defaults to every topic present in any run.
    #[arg(long = "topic")]
    pub topics: Vec<String>,
}

pub fn run(args: &PoolArgs) -> CliResult<String> {
    let ordering = PoolOrdering::parse(&args.ordering)?;
    let runs = load_runs_dir(&args.runs)?;
    let spec = match ordering {
        PoolOrdering::Pri => PoolSpec::pri(args.depth)?,
        PoolOrdering::Rnd => PoolSpec::rnd(args.depth, resolve_seed(args.seed))?,
    };
    let topics: Vec<String> = if args.topics.is_empty() {
        let set: BTreeSet<String> = runs
            .iter()
            .flat_map(|r| r.topics().map(str::to_string))
            .collect();
        set.into_iter().collect()
    } else {
        args.topics.clone()
    };
    let mut pools = Vec::with_capacity(topics.len());
    for topic in &topics {
        pools.push(build_pool(&runs, topic, &spec)?);
    }
    Ok(serialize_pools(&pools))
}
