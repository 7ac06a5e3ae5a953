//! Dataset manifests: named artifacts mapped to URLs and cache paths.
//!
//! The published archive layout may change; the manifest keeps file names
//! remappable without code changes. Cache root precedence: `--cache-root`
//! flag, then the `IREVAL_CACHE_ROOT` environment variable, then the
//! manifest's `cache_root`, then `.ireval-cache`.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::errors::{CliError, CliResult};

pub const CACHE_ROOT_ENV: &str = "IREVAL_CACHE_ROOT";

#[derive(Debug, Clone, Deserialize)]
pub struct Manifest {
    pub cache_root: Option<String>,
    #[serde(default)]
    pub artifacts: BTreeMap<String, Artifact>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Artifact {
    pub url: String,
    /// Hex SHA-256 of the artifact; verified when present.
    pub sha256: Option<String>,
    /// Path of the cached copy, relative to the cache root.
    pub path: String,
}

impl Manifest {
    pub fn load(path: &Path) -> CliResult<Manifest> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::io(&format!("reading {}", path.display()), e))?;
        toml::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
    }

    /// The manifest shipped with the toolkit, targeting the published
    /// corrected-data archive.
    pub fn builtin() -> Manifest {
        toml::from_str(DEFAULT_MANIFEST).expect("builtin manifest must parse")
    }

    pub fn artifact(&self, name: &str) -> CliResult<&Artifact> {
        self.artifacts.get(name).ok_or_else(|| {
            CliError::Precondition(format!("artifact '{name}' not in manifest"))
        })
    }

    pub fn resolve_cache_root(&self, flag: Option<&Path>) -> PathBuf {
        if let Some(p) = flag {
            return p.to_path_buf();
        }
        if let Ok(env) = std::env::var(CACHE_ROOT_ENV) {
            if !env.is_empty() {
                return PathBuf::from(env);
            }
        }
        if let Some(root) = &self.cache_root {
            return PathBuf::from(root);
        }
        PathBuf::from(".ireval-cache")
    }
}

/// Default artifact map for the corrected qrels/runs archive. The paths
/// mirror the layout the `paper` commands expect under a data root.
pub const DEFAULT_MANIFEST: &str = r#"
[artifacts.www2-qrels]
url = "http://sakailab.com/www234corrected/www2e.qrels"
path = "www2/www2e.qrels"

[artifacts.www2-runs]
url = "http://sakailab.com/www234corrected/www2e-runs.tar.gz"
path = "www2/runs.tar.gz"

[artifacts.www3-qrels]
url = "http://sakailab.com/www234corrected/www3e.qrels"
path = "www3/www3e.qrels"

[artifacts.www3-runs]
url = "http://sakailab.com/www234corrected/www3e-runs.tar.gz"
path = "www3/runs.tar.gz"

[artifacts.www4-gold-qrels]
url = "http://sakailab.com/www234corrected/www4-gold.qrels"
path = "www4/gold.qrels"

[artifacts.www4-runs]
url = "http://sakailab.com/www234corrected/www4-runs.tar.gz"
path = "www4/runs.tar.gz"

[artifacts.www4-gold-labels]
url = "http://sakailab.com/www234corrected/www4-gold.labels"
path = "www4/gold.labels"

[artifacts.www4-waseda-labels]
url = "http://sakailab.com/www234corrected/www4-bronzeW.labels"
path = "www4/bronzeW.labels"

[artifacts.www4-tsinghua-labels]
url = "http://sakailab.com/www234corrected/www4-bronzeT.labels"
path = "www4/bronzeT.labels"
"#;
