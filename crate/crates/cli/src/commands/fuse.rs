//! `fuse` and `variant`: combine assessor label files into graded qrels.

use std::path::PathBuf;

use clap::Args;
use ireval::fusion::{make_variant, FusionScheme, VariantKind};
use ireval::trec::AssessmentSet;

use crate::errors::CliResult;
use crate::io_util::load_assessments;

#[derive(Debug, Args)]
pub struct FuseArgs {
    /// Fusion scheme: sum or log.
    #[arg(long)]
    pub scheme: String,
    /// Assessor label files (3-point scale, qrels format); the assessor id
    /// is the file stem.
    #[arg(required = true)]
    pub files: Vec<PathBuf>,
}

pub fn run_fuse(args: &FuseArgs) -> CliResult<String> {
    let scheme = FusionScheme::parse(&args.scheme)?;
    let sets = load_all(&args.files)?;
    let qrels = scheme.fuse(&sets)?;
    Ok(qrels.serialize())
}

#[derive(Debug, Args)]
pub struct VariantArgs {
    /// Fusion scheme: sum or log.
    #[arg(long)]
    pub scheme: String,
    /// Variant to build: good+noise, good+corrected, or good+null.
    #[arg(long)]
    pub kind: String,
    /// Label files of the unaffected assessors.
    #[arg(long = "good", required = true)]
    pub good: Vec<PathBuf>,
    /// Label files of the bug-affected assessors, as delivered.
    #[arg(long = "noisy")]
    pub noisy: Vec<PathBuf>,
    /// Corrected counterparts of the noisy files (same assessors).
    #[arg(long = "corrected")]
    pub corrected: Vec<PathBuf>,
}

pub fn run_variant(args: &VariantArgs) -> CliResult<String> {
    let scheme = FusionScheme::parse(&args.scheme)?;
    let kind = VariantKind::parse(&args.kind)?;
    let good = load_all(&args.good)?;
    let noisy = load_all(&args.noisy)?;
    let corrected = load_all(&args.corrected)?;
    let qrels = make_variant(&good, &noisy, &corrected, scheme, kind)?;
    Ok(qrels.serialize())
}

fn load_all(paths: &[PathBuf]) -> CliResult<Vec<AssessmentSet>> {
    paths.iter().map(|p| load_assessments(p)).collect()
}
