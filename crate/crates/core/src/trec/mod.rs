//! Parsing and serialization of the whitespace-delimited evaluation formats:
//! runs (`topic Q0 docid rank score tag`), qrels (`topic 0 docid level`),
//! pool files (`topic pool_rank docid`), score matrices (TSV), and report
//! tables.
//!
//! All readers tolerate CRLF; all writers emit UTF-8 with LF endings.
//! Parsing and serialization are pure and safe to run concurrently over
//! independent files.

mod assessment;
mod matrix;
mod pool;
mod qrels;
mod run;
pub mod tsv;

pub use assessment::{AssessmentSet, RAW_LEVEL_MAX};
pub use matrix::ScoreMatrix;
pub use pool::{parse_pools, serialize_pools, PoolFile, PoolOrdering};
pub use qrels::{ParseOptions, Qrels, QrelsStats};
pub use run::{RankedDoc, Run};
pub use tsv::{write_tsv_report, Cell, Table};
