//! Two-tailed Student t-tests.

use statrs::distribution::{ContinuousCDF, StudentsT};

use crate::error::{Error, Result};

/// Two-tailed paired t-test p-value.
///
/// Degenerate inputs use the documented conventions: zero variance of the
/// differences yields p = 1 when their mean is zero and p = 0 otherwise.
pub fn paired_ttest(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::Degenerate {
            msg: format!("paired samples differ in length: {} vs {}", a.len(), b.len()),
        });
    }
    if a.len() < 2 {
        return Err(Error::Degenerate {
            msg: "paired t-test needs at least 2 pairs".into(),
        });
    }
    let n = a.len() as f64;
    let diffs: Vec<f64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
    let mean = diffs.iter().sum::<f64>() / n;
    let var = diffs.iter().map(|d| (d - mean).powi(2)).sum::<f64>() / (n - 1.0);
    if var == 0.0 {
        return Ok(if mean == 0.0 { 1.0 } else { 0.0 });
    }
    let t = mean / (var / n).sqrt();
    two_tailed_p(t, n - 1.0)
}

/// Two-tailed two-sample t-test with pooled variance.
pub fn unpaired_ttest(a: &[f64], b: &[f64]) -> Result<f64> {
    check_two_samples(a, b)?;
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (ma, mb) = (mean(a), mean(b));
    let (va, vb) = (sample_var(a, ma), sample_var(b, mb));
    let pooled = ((na - 1.0) * va + (nb - 1.0) * vb) / (na + nb - 2.0);
    if pooled == 0.0 {
        return Ok(if ma == mb { 1.0 } else { 0.0 });
    }
    let t = (ma - mb) / (pooled * (1.0 / na + 1.0 / nb)).sqrt();
    two_tailed_p(t, na + nb - 2.0)
}

/// Two-tailed Welch t-test (unequal variances).
pub fn unpaired_ttest_welch(a: &[f64], b: &[f64]) -> Result<f64> {
    check_two_samples(a, b)?;
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (ma, mb) = (mean(a), mean(b));
    let (va, vb) = (sample_var(a, ma), sample_var(b, mb));
    let se2 = va / na + vb / nb;
    if se2 == 0.0 {
        return Ok(if ma == mb { 1.0 } else { 0.0 });
    }
    let t = (ma - mb) / se2.sqrt();
    let df = se2 * se2
        / ((va / na).powi(2) / (na - 1.0) + (vb / nb).powi(2) / (nb - 1.0));
    two_tailed_p(t, df)
}

fn check_two_samples(a: &[f64], b: &[f64]) -> Result<()> {
    if a.len() < 2 || b.len() < 2 {
        return Err(Error::Degenerate {
            msg: "each sample needs at least 2 observations".into(),
        });
    }
    Ok(())
}

fn mean(x: &[f64]) -> f64 {
    x.iter().sum::<f64>() / x.len() as f64
}

fn sample_var(x: &[f64], m: f64) -> f64 {
    x.iter().map(|v| (v - m).powi(2)).sum::<f64>() / (x.len() as f64 - 1.0)
}

fn two_tailed_p(t: f64, df: f64) -> Result<f64> {
    let dist = StudentsT::new(0.0, 1.0, df).map_err(|e| Error::Degenerate {
        msg: format!("invalid t distribution (df = {df}): {e}"),
    })?;
    Ok(2.0 * dist.cdf(-t.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn equal_vectors_give_p_one() {
        let a = [0.1, 0.5, 0.9, 0.3];
        assert_eq!(paired_ttest(&a, &a).unwrap(), 1.0);
        assert_eq!(unpaired_ttest(&a, &a).unwrap(), 1.0);
        assert_eq!(unpaired_ttest_welch(&a, &a).unwrap(), 1.0);
    }

    #[test]
    fn constant_offset_gives_p_zero() {
        let a: Vec<f64> = (0..10).map(|i| i as f64 / 10.0).collect();
        let b: Vec<f64> = a.iter().map(|x| x + 0.5).collect();
        assert_eq!(paired_ttest(&a, &b).unwrap(), 0.0);
    }

    #[test]
    fn degenerate_unpaired_samples() {
        let zeros = [0.0; 5];
        let ones = [1.0; 5];
        assert_eq!(unpaired_ttest(&zeros, &ones).unwrap(), 0.0);
        assert_eq!(unpaired_ttest(&zeros, &zeros).unwrap(), 1.0);
    }

    #[test]
    fn paired_known_value() {
        // d = [1, 2, 3, 4]: mean 2.5, sd 1.2909..., t = 3.873, df 3.
        let a = [1.0, 2.0, 3.0, 4.0];
        let b = [0.0, 0.0, 0.0, 0.0];
        let p = paired_ttest(&a, &b).unwrap();
        assert_abs_diff_eq!(p, 0.030466, epsilon = 1e-5);
    }

    #[test]
    fn unpaired_known_value() {
        // t = -sqrt(3/2), df = 4; two-tailed p = I_{4/5.5}(2, 1/2) = 0.287861
        // by the incomplete-beta closed form.
        let a = [1.0, 2.0, 3.0];
        let b = [2.0, 3.0, 4.0];
        let p = unpaired_ttest(&a, &b).unwrap();
        assert_abs_diff_eq!(p, 0.287861, epsilon = 1e-5);
        // Equal sizes and variances: Welch reduces to the pooled test.
        let pw = unpaired_ttest_welch(&a, &b).unwrap();
        assert_abs_diff_eq!(pw, p, epsilon = 1e-12);
    }

    #[test]
    fn rejects_short_samples() {
        assert!(paired_ttest(&[1.0], &[2.0]).is_err());
        assert!(paired_ttest(&[1.0, 2.0], &[1.0]).is_err());
        assert!(unpaired_ttest(&[1.0], &[1.0, 2.0]).is_err());
    }
}
