//! Execution strategy for data-parallel inner loops.
//!
//! Every randomized computation derives one independent RNG stream per work
//! item, so sequential and parallel execution produce bit-identical results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How to run embarrassingly parallel loops (score-matrix cells, permutation
/// trials, bootstrap resamples).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    /// Plain sequential iteration.
    Sequential,
    /// Rayon work-stealing. Falls back to sequential when the crate is built
    /// without the `parallel` feature.
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

/// Maps `0..n` through `f`, preserving index order in the output.
pub(crate) fn map_indexed<R, F>(n: usize, exec: Exec, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    match exec {
        Exec::Sequential => (0..n).map(f).collect(),
        #[cfg(feature = "parallel")]
        Exec::Parallel => (0..n).into_par_iter().map(f).collect(),
        #[cfg(not(feature = "parallel"))]
        Exec::Parallel => (0..n).map(f).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_indexed_preserves_order() {
        let seq = map_indexed(100, Exec::Sequential, |i| i * i);
        let par = map_indexed(100, Exec::Parallel, |i| i * i);
        assert_eq!(seq, par);
        assert_eq!(seq[7], 49);
    }
}
