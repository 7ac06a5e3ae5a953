//! Two-way ANOVA residual variance without replication.

use crate::error::{Error, Result};
use crate::trec::ScoreMatrix;

/// Residual variance `V_E2` of a topics-by-systems matrix:
///
/// ```text
/// V_E2 = sum_{t,s} (x_ts - rowmean_t - colmean_s + grandmean)^2 / ((n-1)(m-1))
/// ```
///
/// for n topics and m systems. Effect sizes divide mean differences by
/// `sqrt(V_E2)`.
pub fn residual_variance(m: &ScoreMatrix) -> Result<f64> {
    let n_topics = m.n_topics();
    let n_systems = m.n_systems();
    if n_topics < 2 || n_systems < 2 {
        return Err(Error::Degenerate {
            msg: format!("residual variance needs >=2 topics and >=2 systems, got {n_topics}x{n_systems}"),
        });
    }
    let row_means: Vec<f64> = (0..n_topics)
        .map(|t| m.row(t).iter().sum::<f64>() / n_systems as f64)
        .collect();
    let col_means = m.system_means();
    let grand = row_means.iter().sum::<f64>() / n_topics as f64;
    let mut ss = 0.0;
    for t in 0..n_topics {
        for s in 0..n_systems {
            let resid = m.get(t, s) - row_means[t] - col_means[s] + grand;
            ss += resid * resid;
        }
    }
    Ok(ss / ((n_topics - 1) as f64 * (n_systems - 1) as f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn additive_matrix_has_zero_residual() {
        // x_ts = rowEffect_t + colEffect_s: the interaction term vanishes.
        let rows = [0.1, 0.4, 0.25];
        let cols = [0.0, 0.2];
        let cells: Vec<f64> = rows
            .iter()
            .flat_map(|r| cols.iter().map(move |c| r + c))
            .collect();
        let m = ScoreMatrix::new(
            vec!["t1".into(), "t2".into(), "t3".into()],
            vec!["s1".into(), "s2".into()],
            cells,
        )
        .unwrap();
        assert_abs_diff_eq!(residual_variance(&m).unwrap(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn known_small_case() {
        // 2x2 matrix: residual has one degree of freedom.
        let m = ScoreMatrix::new(
            vec!["t1".into(), "t2".into()],
            vec!["s1".into(), "s2".into()],
            vec![1.0, 0.0, 0.0, 1.0],
        )
        .unwrap();
        // Residuals are +-0.5, SS = 4 * 0.25 = 1, df = 1.
        assert_abs_diff_eq!(residual_variance(&m).unwrap(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn rejects_degenerate_dimensions() {
        let m = ScoreMatrix::new(vec!["t1".into()], vec!["s1".into(), "s2".into()], vec![1.0, 0.0])
            .unwrap();
        assert!(residual_variance(&m).is_err());
    }

    #[test]
    fn shift_invariance() {
        let m = ScoreMatrix::new(
            vec!["t1".into(), "t2".into(), "t3".into()],
            vec!["s1".into(), "s2".into()],
            vec![0.25, 0.5, 0.75, 0.125, 0.0, 1.0],
        )
        .unwrap();
        let shifted = ScoreMatrix::new(
            m.topics().to_vec(),
            m.systems().to_vec(),
            (0..3).flat_map(|t| (0..2).map(move |s| (t, s))).map(|(t, s)| m.get(t, s) + 0.25).collect(),
        )
        .unwrap();
        assert_abs_diff_eq!(
            residual_variance(&m).unwrap(),
            residual_variance(&shifted).unwrap(),
            epsilon = 1e-12
        );
    }
}
