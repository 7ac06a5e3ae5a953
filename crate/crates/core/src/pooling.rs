//! Depth-k pool construction and assessment joining.
//!
//! Pools are built as the union of each run's top-`depth` documents for a
//! topic and presented either prioritised (PRI) or randomised (RND). The
//! join step attaches an assessor's rank-keyed labels back to documents; the
//! `ByRankBuggy` mode reproduces the defect where the backend resolved a
//! (topic, rank) pair against the wrong pool version.

use std::collections::BTreeMap;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::trec::{AssessmentSet, PoolFile, PoolOrdering, Run};

/// How to build a pool for one topic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PoolSpec {
    pub depth: u32,
    pub ordering: PoolOrdering,
    /// Shuffle seed; required for RND, ignored for PRI.
    pub seed: Option<u64>,
}

impl PoolSpec {
    pub fn pri(depth: u32) -> Result<PoolSpec> {
        Self::validate_depth(depth)?;
        Ok(PoolSpec {
            depth,
            ordering: PoolOrdering::Pri,
            seed: None,
        })
    }

    pub fn rnd(depth: u32, seed: u64) -> Result<PoolSpec> {
        Self::validate_depth(depth)?;
        Ok(PoolSpec {
            depth,
            ordering: PoolOrdering::Rnd,
            seed: Some(seed),
        })
    }

    fn validate_depth(depth: u32) -> Result<()> {
        if depth == 0 {
            return Err(Error::InvalidParameter {
                msg: "pool depth must be >= 1".into(),
            });
        }
        Ok(())
    }
}

/// How rank-keyed labels are resolved to documents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JoinMode {
    /// Resolve against the pool the assessor actually saw (correct).
    ByDocId,
    /// Resolve against a reference pool, assuming (topic, rank) alone
    /// determines the document (the defect).
    ByRankBuggy,
}

/// Builds the depth-`k` pool of `topic` over `runs`.
///
/// PRI order: by number of runs retrieving the document within the depth
/// (descending), then by the sum of its ranks in those runs (ascending),
/// then by doc id (ascending). RND order: Fisher-Yates shuffle of the
/// doc-id-sorted union, driven by ChaCha12 keyed with the seed; the swap
/// index at position `i` is `next_u64() % (i + 1)`.
pub fn build_pool(runs: &[Run], topic: &str, spec: &PoolSpec) -> Result<PoolFile> {
    PoolSpec::validate_depth(spec.depth)?;
    // doc -> (runs retrieving it within depth, rank sum across those runs)
    let mut hits: BTreeMap<&str, (u32, u64)> = BTreeMap::new();
    for run in runs {
        if let Some(ranking) = run.ranking(topic) {
            for doc in ranking.iter().take(spec.depth as usize) {
                let entry = hits.entry(doc.doc_id.as_str()).or_insert((0, 0));
                entry.0 += 1;
                entry.1 += doc.rank as u64;
            }
        }
    }
    if hits.is_empty() {
        return Err(Error::TopicNotInRuns {
            topic: topic.to_string(),
        });
    }
    let mut docs: Vec<String> = hits.keys().map(|d| d.to_string()).collect();
    match spec.ordering {
        PoolOrdering::Pri => {
            docs.sort_by(|a, b| {
                let (ca, sa) = hits[a.as_str()];
                let (cb, sb) = hits[b.as_str()];
                cb.cmp(&ca).then(sa.cmp(&sb)).then(a.cmp(b))
            });
            PoolFile::new(topic, PoolOrdering::Pri, None, docs)
        }
        PoolOrdering::Rnd => {
            let seed = spec.seed.ok_or(Error::InvalidParameter {
                msg: "RND pools require a seed".into(),
            })?;
            // docs is already sorted ascending (BTreeMap keys).
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            for i in (1..docs.len()).rev() {
                let j = (rng.next_u64() % (i as u64 + 1)) as usize;
                docs.swap(i, j);
            }
            PoolFile::new(topic, PoolOrdering::Rnd, Some(seed), docs)
        }
    }
}

/// Attaches rank-keyed raw labels to documents.
///
/// `raw` must label each of the pool's ranks exactly once, and
/// `reference_pool` must cover the same topic and document set. With
/// `ByDocId` the label for rank r goes to the document at rank r of `pool`;
/// with `ByRankBuggy` it goes to the document at rank r of `reference_pool`.
pub fn join_assessments(
    pool: &PoolFile,
    raw: &[(u32, u8)],
    mode: JoinMode,
    reference_pool: &PoolFile,
    assessor_id: &str,
) -> Result<AssessmentSet> {
    if reference_pool.topic_id != pool.topic_id {
        return Err(Error::PoolMismatch {
            msg: format!(
                "topics differ: '{}' vs '{}'",
                pool.topic_id, reference_pool.topic_id
            ),
        });
    }
    if reference_pool.doc_set() != pool.doc_set() {
        return Err(Error::PoolMismatch {
            msg: format!("document sets differ for topic '{}'", pool.topic_id),
        });
    }
    if raw.len() != pool.len() {
        return Err(Error::CoverageMismatch {
            msg: format!(
                "{} labels for a pool of {} documents",
                raw.len(),
                pool.len()
            ),
        });
    }
    let mut covered = vec![false; pool.len()];
    let mut set = AssessmentSet::new(assessor_id);
    for &(rank, level) in raw {
        let doc = match mode {
            JoinMode::ByDocId => pool.doc_at(rank)?,
            JoinMode::ByRankBuggy => reference_pool.doc_at(rank)?,
        };
        if std::mem::replace(&mut covered[rank as usize - 1], true) {
            return Err(Error::CoverageMismatch {
                msg: format!("rank {rank} labelled twice"),
            });
        }
        set.insert(&pool.topic_id, doc, level)?;
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(tag: &str, docs: &[&str]) -> Run {
        let scored: Vec<(String, f64)> = docs
            .iter()
            .enumerate()
            .map(|(i, d)| (d.to_string(), (docs.len() - i) as f64))
            .collect();
        Run::from_scores(tag, vec![("0001".to_string(), scored)]).unwrap()
    }

    #[test]
    fn pri_orders_by_count_then_ranksum_then_docid() {
        let runs = vec![run("A", &["d1", "d2"]), run("B", &["d2", "d3"])];
        let spec = PoolSpec::pri(2).unwrap();
        let pool = build_pool(&runs, "0001", &spec).unwrap();
        assert_eq!(pool.doc_ids(), &["d2", "d1", "d3"]);
    }

    #[test]
    fn single_run_top_k() {
        let runs = vec![run("A", &["d1", "d2", "d3"])];
        let pool = build_pool(&runs, "0001", &PoolSpec::pri(2).unwrap()).unwrap();
        assert_eq!(pool.doc_ids(), &["d1", "d2"]);
    }

    #[test]
    fn rnd_is_deterministic_per_seed() {
        let runs = vec![run("A", &["d1", "d2", "d3", "d4", "d5"])];
        let spec = PoolSpec::rnd(5, 7).unwrap();
        let a = build_pool(&runs, "0001", &spec).unwrap();
        let b = build_pool(&runs, "0001", &spec).unwrap();
        assert_eq!(a, b);
        let c = build_pool(&runs, "0001", &PoolSpec::rnd(5, 8).unwrap()).unwrap();
        assert_eq!(a.doc_set(), c.doc_set());
        assert_ne!(a.doc_ids(), c.doc_ids());
    }

    #[test]
    fn missing_topic_errors() {
        let runs = vec![run("A", &["d1"])];
        assert!(matches!(
            build_pool(&runs, "0002", &PoolSpec::pri(2).unwrap()),
            Err(Error::TopicNotInRuns { .. })
        ));
    }

    fn pool_of(docs: &[&str]) -> PoolFile {
        PoolFile::new(
            "0001",
            PoolOrdering::Pri,
            None,
            docs.iter().map(|d| d.to_string()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn join_by_docid() {
        let pool = pool_of(&["dA", "dB"]);
        let set =
            join_assessments(&pool, &[(1, 2), (2, 0)], JoinMode::ByDocId, &pool, "a1").unwrap();
        assert_eq!(set.label("0001", "dA"), Some(2));
        assert_eq!(set.label("0001", "dB"), Some(0));
    }

    #[test]
    fn buggy_join_misattributes_by_rank() {
        let pool = pool_of(&["dA", "dB"]);
        let reference = pool_of(&["dB", "dA"]);
        let set = join_assessments(
            &pool,
            &[(1, 2), (2, 0)],
            JoinMode::ByRankBuggy,
            &reference,
            "a1",
        )
        .unwrap();
        assert_eq!(set.label("0001", "dB"), Some(2));
        assert_eq!(set.label("0001", "dA"), Some(0));
    }

    #[test]
    fn modes_agree_on_identical_pools() {
        let pool = pool_of(&["dA", "dB", "dC"]);
        let raw = [(1, 1), (2, 0), (3, 2)];
        let by_doc = join_assessments(&pool, &raw, JoinMode::ByDocId, &pool, "a1").unwrap();
        let by_rank = join_assessments(&pool, &raw, JoinMode::ByRankBuggy, &pool, "a1").unwrap();
        assert_eq!(by_doc, by_rank);
    }

    #[test]
    fn join_rejects_mismatched_docsets() {
        let pool = pool_of(&["dA", "dB"]);
        let reference = pool_of(&["dA", "dC"]);
        assert!(matches!(
            join_assessments(&pool, &[(1, 0), (2, 0)], JoinMode::ByRankBuggy, &reference, "a1"),
            Err(Error::PoolMismatch { .. })
        ));
    }

    #[test]
    fn join_rejects_out_of_range_rank() {
        let pool = pool_of(&["dA"]);
        assert!(matches!(
            join_assessments(&pool, &[(2, 0)], JoinMode::ByDocId, &pool, "a1"),
            Err(Error::RankOutOfRange { .. })
        ));
    }
}
