//! Pool files: the ordered document list per topic shown to an assessor.
//!
//! Line format: `topic pool_rank docid`, optionally preceded by a comment
//! recording how the ordering was produced: `# seed=<n> ordering=<PRI|RND>`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Presentation order of a pool.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoolOrdering {
    /// Prioritised: likely-relevant documents first.
    Pri,
    /// Randomised (seeded shuffle).
    Rnd,
}

impl PoolOrdering {
    pub fn as_str(&self) -> &'static str {
        match self {
            PoolOrdering::Pri => "PRI",
            PoolOrdering::Rnd => "RND",
        }
    }

    pub fn parse(s: &str) -> Result<PoolOrdering> {
        match s.to_ascii_uppercase().as_str() {
            "PRI" => Ok(PoolOrdering::Pri),
            "RND" => Ok(PoolOrdering::Rnd),
            _ => Err(Error::InvalidParameter {
                msg: format!("unknown pool ordering '{s}'"),
            }),
        }
    }
}

/// One topic's pool: documents in presentation order (rank = position + 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoolFile {
    pub topic_id: String,
    pub ordering: PoolOrdering,
    pub seed: Option<u64>,
    entries: Vec<String>,
}

impl PoolFile {
    pub fn new(
        topic_id: &str,
        ordering: PoolOrdering,
        seed: Option<u64>,
        entries: Vec<String>,
    ) -> Result<PoolFile> {
        let unique: BTreeSet<&String> = entries.iter().collect();
        if unique.len() != entries.len() {
            return Err(Error::PoolMismatch {
                msg: format!("duplicate doc id in pool for topic '{topic_id}'"),
            });
        }
        Ok(PoolFile {
            topic_id: topic_id.to_string(),
            ordering,
            seed,
            entries,
        })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Doc at 1-based pool rank.
    pub fn doc_at(&self, pool_rank: u32) -> Result<&str> {
        if pool_rank == 0 || pool_rank as usize > self.entries.len() {
            return Err(Error::RankOutOfRange {
                rank: pool_rank,
                size: self.entries.len(),
            });
        }
        Ok(&self.entries[pool_rank as usize - 1])
    }

    pub fn doc_ids(&self) -> &[String] {
        &self.entries
    }

    pub fn doc_set(&self) -> BTreeSet<&str> {
        self.entries.iter().map(String::as_str).collect()
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(&header_line(self.ordering, self.seed));
        for (i, doc) in self.entries.iter().enumerate() {
            out.push_str(&format!("{} {} {}\n", self.topic_id, i + 1, doc));
        }
        out
    }

    /// Parses a single-topic pool file.
    pub fn parse(text: &str) -> Result<PoolFile> {
        let mut pools = parse_pools(text)?;
        match pools.len() {
            1 => Ok(pools.remove(0)),
            0 => Err(Error::Malformed {
                line: 0,
                msg: "empty pool file".into(),
            }),
            n => Err(Error::Malformed {
                line: 0,
                msg: format!("expected a single topic, found {n}"),
            }),
        }
    }
}

fn header_line(ordering: PoolOrdering, seed: Option<u64>) -> String {
    match seed {
        Some(s) => format!("# seed={} ordering={}\n", s, ordering.as_str()),
        None => format!("# ordering={}\n", ordering.as_str()),
    }
}

/// Serializes several topics into one stream sharing a single header.
pub fn serialize_pools(pools: &[PoolFile]) -> String {
    let mut out = String::new();
    if let Some(first) = pools.first() {
        out.push_str(&header_line(first.ordering, first.seed));
    }
    for pool in pools {
        for (i, doc) in pool.entries.iter().enumerate() {
            out.push_str(&format!("{} {} {}\n", pool.topic_id, i + 1, doc));
        }
    }
    out
}

/// Parses a pool stream holding one or more topics. Ranks must be 1..n and
/// contiguous within each topic; a topic's lines must be consecutive.
pub fn parse_pools(text: &str) -> Result<Vec<PoolFile>> {
    let mut ordering = PoolOrdering::Pri;
    let mut seed: Option<u64> = None;
    let mut pools: Vec<PoolFile> = Vec::new();
    let mut current: Option<(String, Vec<String>)> = None;
    let mut finished: BTreeSet<String> = BTreeSet::new();

    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            for token in comment.split_whitespace() {
                if let Some(v) = token.strip_prefix("seed=") {
                    seed = Some(v.parse().map_err(|_| Error::Malformed {
                        line: line_no,
                        msg: format!("invalid seed '{v}'"),
                    })?);
                } else if let Some(v) = token.strip_prefix("ordering=") {
                    ordering = PoolOrdering::parse(v)?;
                }
            }
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(Error::Malformed {
                line: line_no,
                msg: format!("expected 3 fields, got {}", fields.len()),
            });
        }
        let topic = fields[0];
        let rank: u32 = fields[1].parse().map_err(|_| Error::Malformed {
            line: line_no,
            msg: format!("invalid pool rank '{}'", fields[1]),
        })?;
        let doc = fields[2];

        let start_new = match &current {
            Some((t, _)) => t != topic,
            None => true,
        };
        if start_new {
            if let Some((t, entries)) = current.take() {
                finished.insert(t.clone());
                pools.push(PoolFile::new(&t, ordering, seed, entries)?);
            }
            if finished.contains(topic) {
                return Err(Error::Malformed {
                    line: line_no,
                    msg: format!("topic '{topic}' appears in two separate blocks"),
                });
            }
            current = Some((topic.to_string(), Vec::new()));
        }
        let (_, entries) = current.as_mut().unwrap();
        if rank as usize != entries.len() + 1 {
            return Err(Error::Malformed {
                line: line_no,
                msg: format!("pool rank {} out of sequence (expected {})", rank, entries.len() + 1),
            });
        }
        entries.push(doc.to_string());
    }
    if let Some((t, entries)) = current.take() {
        pools.push(PoolFile::new(&t, ordering, seed, entries)?);
    }
    Ok(pools)
}
