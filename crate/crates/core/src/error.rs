//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by parsing, validation, and computation.
#[derive(Debug, Error)]
pub enum Error {
    /// A line of an input file violates the expected format.
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },

    /// A document appears twice within one topic of a run.
    #[error("duplicate document '{doc}' in topic '{topic}'")]
    DuplicateDoc { topic: String, doc: String },

    /// Run lines carry more than one tag.
    #[error("line {line}: inconsistent run tag '{found}' (expected '{expected}')")]
    InconsistentTag {
        line: usize,
        found: String,
        expected: String,
    },

    /// A (topic, doc) pair is judged twice.
    #[error("duplicate (topic, doc) pair ('{topic}', '{doc}')")]
    DuplicatePair { topic: String, doc: String },

    /// A relevance level is outside the allowed scale.
    #[error("invalid relevance level {level} (allowed 0..={max})")]
    InvalidLevel { level: i64, max: u8 },

    /// A requested topic is absent from every run.
    #[error("topic '{topic}' not found in any run")]
    TopicNotInRuns { topic: String },

    /// A pool rank is outside 1..=n.
    #[error("pool rank {rank} out of range (pool size {size})")]
    RankOutOfRange { rank: u32, size: usize },

    /// Two pools that must cover the same documents do not.
    #[error("pool mismatch: {msg}")]
    PoolMismatch { msg: String },

    /// Assessment sets do not cover the same (topic, doc) universe.
    #[error("assessment coverage mismatch: {msg}")]
    CoverageMismatch { msg: String },

    /// Qrels fragments that must be disjoint share an assessor.
    #[error("fragment overlap: {msg}")]
    FragmentOverlap { msg: String },

    /// A variant needs at least one good assessment set.
    #[error("empty good fragment")]
    EmptyGoodFragment,

    /// A topic has no relevant documents, so graded measures are undefined.
    #[error("topic '{topic}' has no relevant documents")]
    NoRelevantDocs { topic: String },

    /// A parameter is outside its documented domain.
    #[error("invalid parameter: {msg}")]
    InvalidParameter { msg: String },

    /// Input too small for the requested statistic.
    #[error("degenerate input: {msg}")]
    Degenerate { msg: String },

    /// No runs were supplied.
    #[error("empty run set")]
    EmptyRunSet,

    /// A measure name did not match any known measure.
    #[error("unknown measure '{name}'")]
    UnknownMeasure { name: String },
}

impl Error {
    /// True for errors caused by malformed input text rather than by
    /// violated preconditions.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::Malformed { .. }
                | Error::DuplicateDoc { .. }
                | Error::InconsistentTag { .. }
                | Error::DuplicatePair { .. }
                | Error::InvalidLevel { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
