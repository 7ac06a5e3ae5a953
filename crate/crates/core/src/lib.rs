#![warn(missing_debug_implementations, rust_2018_idioms)]
//! Evaluation toolkit for pooled retrieval test collections.
//!
//! The crate covers the full pipeline used by the NTCIR WWW-style English
//! subtask evaluations:
//!
//! * [`trec`] — parsing and serialization of runs, qrels, pool files, and
//!   score matrices;
//! * [`pooling`] — depth-k pool construction (prioritised or randomised) and
//!   joining rank-keyed assessments back to documents, including a mode that
//!   reproduces the (topic, rank) join defect;
//! * [`fusion`] — combining multiple assessors' 3-point labels into graded
//!   qrels, and assembling qrels variants from provenance fragments;
//! * [`measures`] — nDCG@k, Q@k, nERR@k, and iRBU@k with score-matrix
//!   construction;
//! * [`stats`] — randomised Tukey HSD with effect sizes, two-way ANOVA
//!   residual variance, t-tests, Kendall's tau-b with bootstrap CIs, and
//!   quadratic weighted Cohen's kappa;
//! * [`repro`] — reproducibility/replicability measures (RMSE variants,
//!   effect ratio, delta of relative improvements, tau union, RBO).
//!
//! Randomized computations take explicit 64-bit seeds and derive one RNG
//! stream per work item, so results are bit-identical whether they run
//! sequentially or in parallel (the `parallel` feature, on by default,
//! enables rayon; [`Exec`] selects the strategy at runtime).

pub mod error;
mod exec;
pub mod fusion;
pub mod measures;
pub mod pooling;
pub mod repro;
pub mod stats;
pub mod trec;

pub use error::{Error, Result};
pub use exec::Exec;
