//! Quadratic weighted Cohen's kappa for inter-assessor agreement.

use crate::error::{Error, Result};
use crate::trec::AssessmentSet;

/// Weighted Cohen's kappa with quadratic weights
/// `w_ij = (i - j)^2 / (C - 1)^2`:
///
/// ```text
/// kappa = 1 - sum(w * O) / sum(w * E)
/// ```
///
/// where O is the observed joint distribution and E the outer product of the
/// marginals. `categories` fixes C from the assessment scale, not from the
/// observed labels, so constant-label topics stay well-defined; when both
/// assessors are constant and equal (`sum(w * E) = 0`) the convention is
/// kappa = 1.
pub fn weighted_kappa(a: &[u8], b: &[u8], categories: usize) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::Degenerate {
            msg: format!("label sequences differ in length: {} vs {}", a.len(), b.len()),
        });
    }
    if a.is_empty() {
        return Err(Error::Degenerate {
            msg: "kappa needs at least one label pair".into(),
        });
    }
    if categories < 2 {
        return Err(Error::InvalidParameter {
            msg: "kappa needs at least 2 categories".into(),
        });
    }
    let c = categories;
    if a.iter().chain(b).any(|&l| l as usize >= c) {
        return Err(Error::InvalidLevel {
            level: *a.iter().chain(b).max().unwrap() as i64,
            max: (c - 1) as u8,
        });
    }
    let n = a.len() as f64;
    let mut observed = vec![0.0f64; c * c];
    let mut marg_a = vec![0.0f64; c];
    let mut marg_b = vec![0.0f64; c];
    for (&la, &lb) in a.iter().zip(b) {
        observed[la as usize * c + lb as usize] += 1.0 / n;
        marg_a[la as usize] += 1.0 / n;
        marg_b[lb as usize] += 1.0 / n;
    }
    let denom_sq = ((c - 1) * (c - 1)) as f64;
    let mut wo = 0.0;
    let mut we = 0.0;
    for i in 0..c {
        for j in 0..c {
            let w = ((i as f64 - j as f64) * (i as f64 - j as f64)) / denom_sq;
            wo += w * observed[i * c + j];
            we += w * marg_a[i] * marg_b[j];
        }
    }
    if we == 0.0 {
        return Ok(1.0);
    }
    Ok(1.0 - wo / we)
}

/// Arithmetic mean of per-topic weighted kappas over `topics`.
///
/// Both sets must label exactly the same documents in every listed topic.
pub fn mean_per_topic_kappa(
    a: &AssessmentSet,
    b: &AssessmentSet,
    topics: &[String],
    categories: usize,
) -> Result<f64> {
    if topics.is_empty() {
        return Err(Error::Degenerate {
            msg: "no topics given".into(),
        });
    }
    let mut sum = 0.0;
    for topic in topics {
        let la = a.topic_labels(topic).ok_or_else(|| Error::CoverageMismatch {
            msg: format!("assessor '{}' lacks topic '{topic}'", a.assessor_id()),
        })?;
        let lb = b.topic_labels(topic).ok_or_else(|| Error::CoverageMismatch {
            msg: format!("assessor '{}' lacks topic '{topic}'", b.assessor_id()),
        })?;
        if la.len() != lb.len() || !la.keys().eq(lb.keys()) {
            return Err(Error::CoverageMismatch {
                msg: format!("document sets differ in topic '{topic}'"),
            });
        }
        let va: Vec<u8> = la.values().copied().collect();
        let vb: Vec<u8> = lb.values().copied().collect();
        sum += weighted_kappa(&va, &vb, categories)?;
    }
    Ok(sum / topics.len() as f64)
}
