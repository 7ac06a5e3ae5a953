//! Randomised Tukey HSD test over a topics-by-systems score matrix.
//!
//! Each trial permutes the system scores independently within every topic
//! row; the trial statistic is the range of the resulting system means. The
//! p-value of a pair is the fraction of trials whose statistic reaches the
//! pair's observed absolute mean difference, ties counting as exceeding
//! (which keeps p conservative).
//!
//! Determinism contract: trial `b` draws from a ChaCha12 generator keyed by
//! the seed on stream `b`, and every row is sorted before it is shuffled, so
//! results are bit-identical across serial/parallel execution and across
//! input column orderings.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::exec::{map_indexed, Exec};
use crate::stats::residual_variance;
use crate::trec::ScoreMatrix;

/// Outcome of the randomised Tukey HSD test.
#[derive(Debug, Clone)]
pub struct TukeyResult {
    systems: Vec<String>,
    /// Row-major m x m matrices.
    p_values: Vec<f64>,
    mean_diffs: Vec<f64>,
    effect_sizes: Vec<f64>,
    system_means: Vec<f64>,
    v_e2: f64,
    trials: u32,
    seed: u64,
}

impl TukeyResult {
    pub fn systems(&self) -> &[String] {
        &self.systems
    }

    pub fn n_systems(&self) -> usize {
        self.systems.len()
    }

    /// p-value for the (i, j) system pair; symmetric with unit diagonal.
    pub fn p_value(&self, i: usize, j: usize) -> f64 {
        self.p_values[i * self.systems.len() + j]
    }

    /// Signed observed difference `mean_i - mean_j`.
    pub fn mean_diff(&self, i: usize, j: usize) -> f64 {
        self.mean_diffs[i * self.systems.len() + j]
    }

    /// `|mean_i - mean_j| / sqrt(V_E2)`.
    pub fn effect_size(&self, i: usize, j: usize) -> f64 {
        self.effect_sizes[i * self.systems.len() + j]
    }

    pub fn system_mean(&self, i: usize) -> f64 {
        self.system_means[i]
    }

    pub fn v_e2(&self) -> f64 {
        self.v_e2
    }

    pub fn trials(&self) -> u32 {
        self.trials
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Pairs significant at `alpha`, as (better, worse, p, effect size),
    /// ordered by the better system's mean descending then the worse
    /// system's mean descending.
    pub fn significant_pairs(&self, alpha: f64) -> Vec<(usize, usize, f64, f64)> {
        let m = self.systems.len();
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by(|&a, &b| {
            self.system_means[b]
                .partial_cmp(&self.system_means[a])
                .unwrap()
                .then_with(|| self.systems[a].cmp(&self.systems[b]))
        });
        let mut pairs = Vec::new();
        for &i in &order {
            for &j in &order {
                if self.system_means[i] > self.system_means[j] && self.p_value(i, j) < alpha {
                    pairs.push((i, j, self.p_value(i, j), self.effect_size(i, j)));
                }
            }
        }
        pairs
    }
}

/// Runs the test with the default execution strategy.
pub fn randomized_tukey_hsd(m: &ScoreMatrix, trials: u32, seed: u64) -> Result<TukeyResult> {
    randomized_tukey_hsd_with(m, trials, seed, Exec::default())
}

/// Runs the test with an explicit execution strategy.
pub fn randomized_tukey_hsd_with(
    m: &ScoreMatrix,
    trials: u32,
    seed: u64,
    exec: Exec,
) -> Result<TukeyResult> {
    if trials == 0 {
        return Err(Error::InvalidParameter {
            msg: "trial count must be >= 1".into(),
        });
    }
    if m.n_systems() < 2 || m.n_topics() < 2 {
        return Err(Error::Degenerate {
            msg: format!(
                "Tukey HSD needs >=2 systems and >=2 topics, got {}x{}",
                m.n_topics(),
                m.n_systems()
            ),
        });
    }
    let n = m.n_topics();
    let n_systems = m.n_systems();
    let means = m.system_means();
    let v_e2 = residual_variance(m)?;

    // Canonical row representation: each topic's scores sorted ascending.
    // Shuffling the sorted row makes the trial statistic independent of the
    // input column order.
    let sorted_rows: Vec<Vec<f64>> = (0..n)
        .map(|t| {
            let mut row = m.row(t).to_vec();
            row.sort_by(|a, b| a.partial_cmp(b).unwrap());
            row
        })
        .collect();

    let mut stats = map_indexed(trials as usize, exec, |trial| {
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        rng.set_stream(trial as u64);
        let mut sums = vec![0.0f64; n_systems];
        let mut row = vec![0.0f64; n_systems];
        for sorted in &sorted_rows {
            row.copy_from_slice(sorted);
            for i in (1..n_systems).rev() {
                let j = (rng.next_u64() % (i as u64 + 1)) as usize;
                row.swap(i, j);
            }
            for (sum, v) in sums.iter_mut().zip(&row) {
                *sum += v;
            }
        }
        let max = sums.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let min = sums.iter().cloned().fold(f64::INFINITY, f64::min);
        (max - min) / n as f64
    });
    stats.sort_by(|a, b| a.partial_cmp(b).unwrap());

    let mut p_values = vec![1.0; n_systems * n_systems];
    let mut mean_diffs = vec![0.0; n_systems * n_systems];
    let mut effect_sizes = vec![0.0; n_systems * n_systems];
    let sqrt_v = v_e2.sqrt();
    for i in 0..n_systems {
        for j in 0..n_systems {
            let diff = means[i] - means[j];
            mean_diffs[i * n_systems + j] = diff;
            effect_sizes[i * n_systems + j] = if sqrt_v > 0.0 { diff.abs() / sqrt_v } else { 0.0 };
            if i != j {
                let exceeding = stats.len() - stats.partition_point(|&s| s < diff.abs());
                p_values[i * n_systems + j] = exceeding as f64 / trials as f64;
            }
        }
    }
    Ok(TukeyResult {
        systems: m.systems().to_vec(),
        p_values,
        mean_diffs,
        effect_sizes,
        system_means: means,
        v_e2,
        trials,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix(topics: usize, cols: &[&[f64]]) -> ScoreMatrix {
        let systems: Vec<String> = (0..cols.len()).map(|i| format!("s{i}")).collect();
        let topic_ids: Vec<String> = (0..topics).map(|t| format!("t{t}")).collect();
        let mut cells = Vec::new();
        for t in 0..topics {
            for col in cols {
                cells.push(col[t]);
            }
        }
        ScoreMatrix::new(topic_ids, systems, cells).unwrap()
    }

    #[test]
    fn identical_systems_give_p_one() {
        let col = [0.5, 0.25, 0.75, 0.125];
        let m = matrix(4, &[&col, &col, &col]);
        let r = randomized_tukey_hsd(&m, 500, 1).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(r.p_value(i, j), 1.0);
            }
        }
        assert!(r.significant_pairs(0.05).is_empty());
    }

    #[test]
    fn constant_gap_two_systems() {
        let ones = [1.0; 10];
        let zeros = [0.0; 10];
        let m = matrix(10, &[&ones, &zeros]);
        let r = randomized_tukey_hsd(&m, 20_000, 42).unwrap();
        let exact: f64 = 2.0 / 1024.0;
        let tol = 3.0 * (exact * (1.0 - exact) / 20_000.0).sqrt();
        assert!(
            (r.p_value(0, 1) - exact).abs() <= tol,
            "p = {}, exact = {exact}",
            r.p_value(0, 1)
        );
        assert_eq!(r.p_value(0, 1), r.p_value(1, 0));
        assert_eq!(r.p_value(0, 0), 1.0);
    }

    #[test]
    fn deterministic_across_exec_modes() {
        let m = matrix(
            6,
            &[
                &[0.5, 0.25, 0.75, 0.125, 0.0, 1.0],
                &[0.25, 0.5, 0.5, 0.25, 0.125, 0.75],
                &[0.0, 0.125, 0.25, 0.0, 0.5, 0.25],
            ],
        );
        let seq = randomized_tukey_hsd_with(&m, 2000, 7, Exec::Sequential).unwrap();
        let par = randomized_tukey_hsd_with(&m, 2000, 7, Exec::Parallel).unwrap();
        assert_eq!(seq.p_values, par.p_values);
        let again = randomized_tukey_hsd_with(&m, 2000, 7, Exec::Parallel).unwrap();
        assert_eq!(par.p_values, again.p_values);
    }

    #[test]
    fn invariant_under_column_relabelling() {
        let a = [0.5, 0.25, 0.75, 0.125, 0.375, 0.625];
        let b = [0.25, 0.5, 0.5, 0.25, 0.125, 0.5];
        let c = [0.0, 0.125, 0.25, 0.0, 0.5, 0.25];
        let m1 = matrix(6, &[&a, &b, &c]);
        let m2 = matrix(6, &[&c, &a, &b]); // s0=c, s1=a, s2=b
        let r1 = randomized_tukey_hsd(&m1, 3000, 99).unwrap();
        let r2 = randomized_tukey_hsd(&m2, 3000, 99).unwrap();
        // a vs b is (0,1) in m1 and (1,2) in m2.
        assert_eq!(r1.p_value(0, 1), r2.p_value(1, 2));
        assert_eq!(r1.p_value(0, 2), r2.p_value(1, 0));
        assert_eq!(r1.p_value(1, 2), r2.p_value(2, 0));
    }

    #[test]
    fn shift_leaves_p_and_es_unchanged() {
        let a = [0.5, 0.25, 0.75, 0.125];
        let b = [0.25, 0.5, 0.5, 0.25];
        let m1 = matrix(4, &[&a, &b]);
        let shifted_a: Vec<f64> = a.iter().map(|x| x + 0.25).collect();
        let shifted_b: Vec<f64> = b.iter().map(|x| x + 0.25).collect();
        let m2 = matrix(4, &[&shifted_a, &shifted_b]);
        let r1 = randomized_tukey_hsd(&m1, 2000, 3).unwrap();
        let r2 = randomized_tukey_hsd(&m2, 2000, 3).unwrap();
        assert_eq!(r1.p_value(0, 1), r2.p_value(0, 1));
        assert_eq!(r1.v_e2(), r2.v_e2());
        assert_eq!(r1.effect_size(0, 1), r2.effect_size(0, 1));
    }

    #[test]
    fn rejects_zero_trials() {
        let m = matrix(2, &[&[1.0, 0.0], &[0.0, 1.0]]);
        assert!(randomized_tukey_hsd(&m, 0, 1).is_err());
    }
}
