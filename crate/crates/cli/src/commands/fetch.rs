//! `fetch`: download manifest artifacts into the cache, verifying digests.

use std::path::{Path, PathBuf};

use clap::Args;
use sha2::{Digest, Sha256};

use crate::errors::{CliError, CliResult};
use crate::manifest::{Artifact, Manifest};

#[derive(Debug, Args)]
pub struct FetchArgs {
    /// Manifest file; defaults to the built-in one.
    #[arg(long)]
    pub manifest: Option<PathBuf>,
    /// Artifacts to fetch; defaults to every artifact in the manifest.
    #[arg(long = "artifact")]
    pub artifacts: Vec<String>,
    /// Cache directory (overrides IREVAL_CACHE_ROOT and the manifest).
    #[arg(long)]
    pub cache_root: Option<PathBuf>,
}

pub fn run(args: &FetchArgs) -> CliResult<String> {
    let manifest = match &args.manifest {
        Some(path) => Manifest::load(path)?,
        None => Manifest::builtin(),
    };
    let cache_root = manifest.resolve_cache_root(args.cache_root.as_deref());
    let names: Vec<String> = if args.artifacts.is_empty() {
        manifest.artifacts.keys().cloned().collect()
    } else {
        args.artifacts.clone()
    };

    let mut out = String::from("artifact\tstatus\tpath\n");
    for name in &names {
        let artifact = manifest.artifact(name)?;
        let (status, path) = fetch_one(name, artifact, &cache_root)?;
        out.push_str(&format!("{name}\t{status}\t{}\n", path.display()));
    }
    Ok(out)
}

fn fetch_one(name: &str, artifact: &Artifact, cache_root: &Path) -> CliResult<(&'static str, PathBuf)> {
    let target = cache_root.join(&artifact.path);
    if target.exists() {
        match verify_digest(&target, artifact.sha256.as_deref()) {
            Ok(()) => return Ok(("cached", target)),
            Err(e) => {
                quarantine(&target)?;
                return Err(e);
            }
        }
    }
    eprintln!("fetching {name} from {}", artifact.url);
    let bytes = download(&artifact.url)?;
    if let Some(expected) = artifact.sha256.as_deref() {
        let actual = hex_digest(&bytes);
        if !actual.eq_ignore_ascii_case(expected) {
            let q = target.with_extension("quarantine");
            write_atomic(&q, &bytes)?;
            return Err(CliError::Digest(format!(
                "artifact '{name}': expected sha256 {expected}, got {actual} (kept at {})",
                q.display()
            )));
        }
    }
    write_atomic(&target, &bytes)?;
    Ok(("fetched", target))
}

fn download(url: &str) -> CliResult<Vec<u8>> {
    let client = reqwest::blocking::Client::builder()
        .timeout(std::time::Duration::from_secs(120))
        .build()
        .map_err(|e| CliError::io("building http client", e))?;
    let response = client
        .get(url)
        .send()
        .map_err(|e| CliError::io(&format!("downloading {url}"), e))?;
    if !response.status().is_success() {
        return Err(CliError::Io(format!(
            "downloading {url}: http status {}",
            response.status()
        )));
    }
    response
        .bytes()
        .map(|b| b.to_vec())
        .map_err(|e| CliError::io(&format!("reading body of {url}"), e))
}

fn verify_digest(path: &Path, expected: Option<&str>) -> CliResult<()> {
    let Some(expected) = expected else {
        return Ok(());
    };
    let bytes =
        std::fs::read(path).map_err(|e| CliError::io(&format!("reading {}", path.display()), e))?;
    let actual = hex_digest(&bytes);
    if actual.eq_ignore_ascii_case(expected) {
        Ok(())
    } else {
        Err(CliError::Digest(format!(
            "cached file {}: expected sha256 {expected}, got {actual}",
            path.display()
        )))
    }
}

fn quarantine(path: &Path) -> CliResult<()> {
    let q = path.with_extension("quarantine");
    std::fs::rename(path, &q)
        .map_err(|e| CliError::io(&format!("quarantining {}", path.display()), e))
}

fn hex_digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn write_atomic(path: &Path, bytes: &[u8]) -> CliResult<()> {
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent)
            .map_err(|e| CliError::io(&format!("creating {}", parent.display()), e))?;
    }
    let tmp = path.with_extension("part");
    std::fs::write(&tmp, bytes)
        .map_err(|e| CliError::io(&format!("writing {}", tmp.display()), e))?;
    std::fs::rename(&tmp, path)
        .map_err(|e| CliError::io(&format!("renaming to {}", path.display()), e))
}
