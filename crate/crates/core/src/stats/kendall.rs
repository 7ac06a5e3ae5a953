//! Kendall's tau-b rank correlation with bootstrap confidence intervals.
//!
//! The tie-corrected tau-b variant is used throughout because mean-score
//! rankings regularly contain exact ties. CIs come from a seeded percentile
//! bootstrap over the paired items.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::exec::{map_indexed, Exec};

/// Correlation with a 95% bootstrap confidence interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TauResult {
    pub tau: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub resamples: u32,
}

/// Kendall's tau-b:
/// `(C - D) / sqrt((C + D + T_x)(C + D + T_y))` over all item pairs, where
/// `T_x`/`T_y` count pairs tied only in x / only in y.
pub fn tau_b(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::Degenerate {
            msg: format!("paired sequences differ in length: {} vs {}", x.len(), y.len()),
        });
    }
    if x.len() < 2 {
        return Err(Error::Degenerate {
            msg: "tau needs at least 2 paired values".into(),
        });
    }
    match tau_b_unchecked(x, y) {
        Some(t) => Ok(t),
        None => Err(Error::Degenerate {
            msg: "tau undefined: one ranking is constant".into(),
        }),
    }
}

fn tau_b_unchecked(x: &[f64], y: &[f64]) -> Option<f64> {
    let n = x.len();
    let mut concordant = 0u64;
    let mut discordant = 0u64;
    let mut ties_x = 0u64;
    let mut ties_y = 0u64;
    for i in 0..n {
        for j in (i + 1)..n {
            let dx = x[i].partial_cmp(&x[j]).unwrap();
            let dy = y[i].partial_cmp(&y[j]).unwrap();
            use std::cmp::Ordering::Equal;
            match (dx, dy) {
                (Equal, Equal) => {}
                (Equal, _) => ties_x += 1,
                (_, Equal) => ties_y += 1,
                (a, b) if a == b => concordant += 1,
                _ => discordant += 1,
            }
        }
    }
    let cd = (concordant + discordant) as f64;
    let denom = ((cd + ties_x as f64) * (cd + ties_y as f64)).sqrt();
    if denom == 0.0 {
        None
    } else {
        Some((concordant as f64 - discordant as f64) / denom)
    }
}

/// Tau-b plus a 95% percentile-bootstrap CI (items resampled with
/// replacement; resamples where tau is undefined are skipped). The interval
/// is widened to contain the point estimate when the percentiles do not.
pub fn kendall_tau_ci(x: &[f64], y: &[f64], resamples: u32, seed: u64) -> Result<TauResult> {
    kendall_tau_ci_with(x, y, resamples, seed, Exec::default())
}

pub fn kendall_tau_ci_with(
    x: &[f64],
    y: &[f64],
    resamples: u32,
    seed: u64,
    exec: Exec,
) -> Result<TauResult> {
    if resamples == 0 {
        return Err(Error::InvalidParameter {
            msg: "bootstrap resample count must be >= 1".into(),
        });
    }
    let tau = tau_b(x, y)?;
    let n = x.len();
    let taus = map_indexed(resamples as usize, exec, |b| {
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        rng.set_stream(b as u64);
        let mut rx = Vec::with_capacity(n);
        let mut ry = Vec::with_capacity(n);
        for _ in 0..n {
            let idx = (rng.next_u64() % n as u64) as usize;
            rx.push(x[idx]);
            ry.push(y[idx]);
        }
        tau_b_unchecked(&rx, &ry)
    });
    let mut valid: Vec<f64> = taus.into_iter().flatten().collect();
    valid.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let (ci_low, ci_high) = if valid.is_empty() {
        (tau, tau)
    } else {
        let r = valid.len() as f64;
        let lo = ((r * 0.025).floor() as usize).min(valid.len() - 1);
        let hi = ((r * 0.975).ceil() as usize).saturating_sub(1).min(valid.len() - 1);
        (valid[lo], valid[hi])
    };
    Ok(TauResult {
        tau,
        ci_low: ci_low.min(tau),
        ci_high: ci_high.max(tau),
        resamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn identity_gives_one() {
        let x = [0.1, 0.5, 0.3, 0.9];
        assert_eq!(tau_b(&x, &x).unwrap(), 1.0);
    }

    #[test]
    fn reversal_gives_minus_one() {
        let x = [1.0, 2.0, 3.0, 4.0];
        let y = [4.0, 3.0, 2.0, 1.0];
        assert_eq!(tau_b(&x, &y).unwrap(), -1.0);
    }

    #[test]
    fn one_swap_of_three() {
        let x = [1.0, 2.0, 3.0];
        let y = [1.0, 3.0, 2.0];
        assert_abs_diff_eq!(tau_b(&x, &y).unwrap(), 1.0 / 3.0, epsilon = 1e-15);
    }

    #[test]
    fn tie_correction() {
        // x has one tied pair: tau-b = (C - D) / sqrt((C+D+1)(C+D)).
        let x = [1.0, 1.0, 2.0];
        let y = [1.0, 2.0, 3.0];
        let expected = 2.0 / (3.0f64 * 2.0).sqrt();
        assert_abs_diff_eq!(tau_b(&x, &y).unwrap(), expected, epsilon = 1e-15);
    }

    #[test]
    fn constant_ranking_is_undefined() {
        assert!(tau_b(&[1.0, 1.0, 1.0], &[1.0, 2.0, 3.0]).is_err());
    }

    #[test]
    fn bootstrap_ci_brackets_tau() {
        let x: Vec<f64> = (0..20).map(|i| i as f64).collect();
        let y: Vec<f64> = x.iter().map(|v| v * 2.0 + 1.0).collect();
        let r = kendall_tau_ci(&x, &y, 500, 11).unwrap();
        assert_eq!(r.tau, 1.0);
        assert!(r.ci_low <= r.tau && r.tau <= r.ci_high);
    }

    #[test]
    fn bootstrap_is_deterministic_and_exec_independent() {
        let x = [0.48, 0.46, 0.44, 0.44, 0.40, 0.33, 0.27];
        let y = [0.47, 0.45, 0.43, 0.44, 0.39, 0.32, 0.25];
        let a = kendall_tau_ci_with(&x, &y, 1000, 5, Exec::Sequential).unwrap();
        let b = kendall_tau_ci_with(&x, &y, 1000, 5, Exec::Parallel).unwrap();
        assert_eq!(a, b);
    }
}
