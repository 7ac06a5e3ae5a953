//! Reproducibility and replicability measures between an original run pair
//! and a reproduced/replicated run pair.
//!
//! Score-based measures (RMSE, effect ratio, delta of relative improvements)
//! operate on per-topic score vectors; ranking-based measures (Kendall's tau
//! union, rank-biased overlap) compare document lists directly and need no
//! qrels.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::stats::tau_b;

/// Root mean squared error between aligned per-topic scores.
pub fn rmse_abs(orig: &[f64], rep: &[f64]) -> Result<f64> {
    if orig.len() != rep.len() {
        return Err(Error::Degenerate {
            msg: format!("score vectors differ in length: {} vs {}", orig.len(), rep.len()),
        });
    }
    if orig.is_empty() {
        return Err(Error::Degenerate {
            msg: "empty score vectors".into(),
        });
    }
    let ss: f64 = orig
        .iter()
        .zip(rep)
        .map(|(o, r)| (o - r) * (o - r))
        .sum();
    Ok((ss / orig.len() as f64).sqrt())
}

/// RMSE of the per-topic effects `a_t - b_t` between the original and
/// reproduced pairs (all four vectors over the same topics).
pub fn rmse_delta(orig_a: &[f64], orig_b: &[f64], rep_a: &[f64], rep_b: &[f64]) -> Result<f64> {
    let orig_d = paired_deltas(orig_a, orig_b)?;
    let rep_d = paired_deltas(rep_a, rep_b)?;
    rmse_abs(&orig_d, &rep_d)
}

fn paired_deltas(a: &[f64], b: &[f64]) -> Result<Vec<f64>> {
    if a.len() != b.len() {
        return Err(Error::Degenerate {
            msg: format!("paired vectors differ in length: {} vs {}", a.len(), b.len()),
        });
    }
    Ok(a.iter().zip(b).map(|(x, y)| x - y).collect())
}

/// Effect ratio: the reproduced mean improvement over the baseline divided
/// by the original one. In replicability mode the reproduced means are taken
/// over their own topic set.
pub fn effect_ratio(orig_a: &[f64], orig_b: &[f64], rep_a: &[f64], rep_b: &[f64]) -> Result<f64> {
    let orig_effect = mean_of(orig_a)? - mean_of(orig_b)?;
    let rep_effect = mean_of(rep_a)? - mean_of(rep_b)?;
    if orig_effect == 0.0 {
        return Err(Error::Degenerate {
            msg: "original effect is zero".into(),
        });
    }
    Ok(rep_effect / orig_effect)
}

/// Difference of relative improvements: `RI_orig - RI_rep` with
/// `RI = (mean_a - mean_b) / mean_b`.
pub fn delta_ri(orig_a: &[f64], orig_b: &[f64], rep_a: &[f64], rep_b: &[f64]) -> Result<f64> {
    let (oa, ob) = (mean_of(orig_a)?, mean_of(orig_b)?);
    let (ra, rb) = (mean_of(rep_a)?, mean_of(rep_b)?);
    if ob == 0.0 || rb == 0.0 {
        return Err(Error::Degenerate {
            msg: "baseline mean is zero".into(),
        });
    }
    Ok((oa - ob) / ob - (ra - rb) / rb)
}

fn mean_of(x: &[f64]) -> Result<f64> {
    if x.is_empty() {
        return Err(Error::Degenerate {
            msg: "empty score vector".into(),
        });
    }
    Ok(x.iter().sum::<f64>() / x.len() as f64)
}

/// Kendall's tau-b over the union of the two top-`k` document lists.
///
/// Documents present in only one list are appended below that list's cutoff
/// in the order they appear in the other list, so both rank vectors cover
/// the union.
pub fn kendall_tau_union<S: AsRef<str>>(orig: &[S], rep: &[S], k: usize) -> Result<f64> {
    if orig.is_empty() || rep.is_empty() {
        return Err(Error::Degenerate {
            msg: "empty document list".into(),
        });
    }
    let top_orig: Vec<&str> = orig.iter().take(k).map(AsRef::as_ref).collect();
    let top_rep: Vec<&str> = rep.iter().take(k).map(AsRef::as_ref).collect();
    let rank_orig = union_ranks(&top_orig, &top_rep);
    let rank_rep = union_ranks(&top_rep, &top_orig);
    // Align by document: iterate the union in a fixed order.
    let mut union: Vec<&str> = top_orig.clone();
    for d in &top_rep {
        if !top_orig.contains(d) {
            union.push(d);
        }
    }
    let x: Vec<f64> = union.iter().map(|d| rank_orig_of(&rank_orig, d)).collect();
    let y: Vec<f64> = union.iter().map(|d| rank_orig_of(&rank_rep, d)).collect();
    tau_b(&x, &y)
}

/// Ranks over the union: own documents keep their positions 1..n, foreign
/// documents follow in the other list's order.
fn union_ranks<'a>(own: &[&'a str], other: &[&'a str]) -> Vec<(&'a str, f64)> {
    let own_set: BTreeSet<&str> = own.iter().copied().collect();
    let mut ranks: Vec<(&str, f64)> = own
        .iter()
        .enumerate()
        .map(|(i, d)| (*d, (i + 1) as f64))
        .collect();
    let mut next = own.len() + 1;
    for d in other {
        if !own_set.contains(d) {
            ranks.push((d, next as f64));
            next += 1;
        }
    }
    ranks
}

fn rank_orig_of(ranks: &[(&str, f64)], doc: &str) -> f64 {
    ranks
        .iter()
        .find(|(d, _)| *d == doc)
        .map(|(_, r)| *r)
        .expect("document must be in the union")
}

/// Extrapolated rank-biased overlap at persistence `p`:
///
/// ```text
/// RBO_ext = (overlap_D / D) * p^D + (1 - p) / p * sum_{d=1..D} (overlap_d / d) * p^d
/// ```
///
/// with D the longer list's depth and `overlap_d` the size of the
/// intersection of the two d-prefixes.
pub fn rbo<S: AsRef<str>>(orig: &[S], rep: &[S], p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::InvalidParameter {
            msg: format!("RBO persistence must be in (0, 1), got {p}"),
        });
    }
    let a: Vec<&str> = orig.iter().map(AsRef::as_ref).collect();
    let b: Vec<&str> = rep.iter().map(AsRef::as_ref).collect();
    for list in [&a, &b] {
        let set: BTreeSet<&str> = list.iter().copied().collect();
        if set.len() != list.len() {
            return Err(Error::InvalidParameter {
                msg: "duplicate document in ranked list".into(),
            });
        }
    }
    let depth = a.len().max(b.len());
    if depth == 0 {
        return Err(Error::Degenerate {
            msg: "empty document list".into(),
        });
    }
    let mut seen_a: BTreeSet<&str> = BTreeSet::new();
    let mut seen_b: BTreeSet<&str> = BTreeSet::new();
    let mut overlap = 0usize;
    let mut sum = 0.0;
    let mut p_pow = 1.0;
    for d in 1..=depth {
        if let Some(doc) = a.get(d - 1) {
            if seen_b.contains(doc) {
                overlap += 1;
            }
            seen_a.insert(doc);
        }
        if let Some(doc) = b.get(d - 1) {
            if seen_a.contains(doc) {
                overlap += 1;
            }
            seen_b.insert(doc);
        }
        p_pow *= p;
        sum += overlap as f64 / d as f64 * p_pow;
    }
    let ext = overlap as f64 / depth as f64 * p_pow;
    Ok((1.0 - p) / p * sum + ext)
}

/// Aligned per-topic score vectors for a reproducibility experiment (same
/// topic set for the original and reproduced runs). RMSE-style measures are
/// only available here.
#[derive(Debug, Clone)]
pub struct ReproPair {
    pub orig_a: Vec<f64>,
    pub orig_b: Vec<f64>,
    pub rep_a: Vec<f64>,
    pub rep_b: Vec<f64>,
}

impl ReproPair {
    pub fn new(orig_a: Vec<f64>, orig_b: Vec<f64>, rep_a: Vec<f64>, rep_b: Vec<f64>) -> Result<ReproPair> {
        let n = orig_a.len();
        if orig_b.len() != n || rep_a.len() != n || rep_b.len() != n {
            return Err(Error::Degenerate {
                msg: "reproducibility requires all four vectors over the same topics".into(),
            });
        }
        if n == 0 {
            return Err(Error::Degenerate {
                msg: "empty score vectors".into(),
            });
        }
        Ok(ReproPair {
            orig_a,
            orig_b,
            rep_a,
            rep_b,
        })
    }

    pub fn rmse_abs_a(&self) -> f64 {
        rmse_abs(&self.orig_a, &self.rep_a).unwrap()
    }

    pub fn rmse_abs_b(&self) -> f64 {
        rmse_abs(&self.orig_b, &self.rep_b).unwrap()
    }

    pub fn rmse_delta(&self) -> f64 {
        rmse_delta(&self.orig_a, &self.orig_b, &self.rep_a, &self.rep_b).unwrap()
    }

    pub fn effect_ratio(&self) -> Result<f64> {
        effect_ratio(&self.orig_a, &self.orig_b, &self.rep_a, &self.rep_b)
    }

    pub fn delta_ri(&self) -> Result<f64> {
        delta_ri(&self.orig_a, &self.orig_b, &self.rep_a, &self.rep_b)
    }
}

/// Score vectors for a replicability experiment: the replicated pair runs on
/// a different topic set, so only mean-based measures apply and RMSE is not
/// expressible.
#[derive(Debug, Clone)]
pub struct RepliPair {
    pub orig_a: Vec<f64>,
    pub orig_b: Vec<f64>,
    pub rep_a: Vec<f64>,
    pub rep_b: Vec<f64>,
}

impl RepliPair {
    pub fn new(orig_a: Vec<f64>, orig_b: Vec<f64>, rep_a: Vec<f64>, rep_b: Vec<f64>) -> Result<RepliPair> {
        if orig_a.len() != orig_b.len() || rep_a.len() != rep_b.len() {
            return Err(Error::Degenerate {
                msg: "each pair must share its topic set".into(),
            });
        }
        if orig_a.is_empty() || rep_a.is_empty() {
            return Err(Error::Degenerate {
                msg: "empty score vectors".into(),
            });
        }
        Ok(RepliPair {
            orig_a,
            orig_b,
            rep_a,
            rep_b,
        })
    }

    pub fn effect_ratio(&self) -> Result<f64> {
        effect_ratio(&self.orig_a, &self.orig_b, &self.rep_a, &self.rep_b)
    }

    pub fn delta_ri(&self) -> Result<f64> {
        delta_ri(&self.orig_a, &self.orig_b, &self.rep_a, &self.rep_b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn rmse_identity_and_unit() {
        let x = [0.2, 0.4, 0.6];
        assert_eq!(rmse_abs(&x, &x).unwrap(), 0.0);
        assert_eq!(rmse_abs(&[1.0, 0.0], &[0.0, 1.0]).unwrap(), 1.0);
        assert!(rmse_abs(&[1.0], &[1.0, 2.0]).is_err());
    }

    #[test]
    fn rmse_delta_cases() {
        let a = [0.5, 0.7, 0.9];
        let b = [0.4, 0.5, 0.6];
        assert_eq!(rmse_delta(&a, &b, &a, &b).unwrap(), 0.0);
        // Reproduced deltas exceed the original ones by 0.1 everywhere.
        let rep_a = [0.6, 0.8, 1.0];
        assert_abs_diff_eq!(rmse_delta(&a, &b, &rep_a, &b).unwrap(), 0.1, epsilon = 1e-12);
    }

    #[test]
    fn rmse_is_symmetric() {
        let a = [0.1, 0.9, 0.3];
        let b = [0.2, 0.4, 0.8];
        assert_eq!(rmse_abs(&a, &b).unwrap(), rmse_abs(&b, &a).unwrap());
    }

    #[test]
    fn effect_ratio_identity_is_one() {
        let a = [0.8, 0.6];
        let b = [0.5, 0.3];
        assert_eq!(effect_ratio(&a, &b, &a, &b).unwrap(), 1.0);
        assert!(effect_ratio(&a, &a, &a, &b).is_err());
    }

    #[test]
    fn delta_ri_identity_is_zero() {
        let a = [0.8, 0.6];
        let b = [0.5, 0.3];
        assert_eq!(delta_ri(&a, &b, &a, &b).unwrap(), 0.0);
        assert!(delta_ri(&a, &[0.0, 0.0], &a, &b).is_err());
    }

    #[test]
    fn ktu_identity_reversal_and_swap() {
        let l1 = ["d1", "d2", "d3"];
        assert_eq!(kendall_tau_union(&l1, &l1, 10).unwrap(), 1.0);
        let rev = ["d3", "d2", "d1"];
        assert_eq!(kendall_tau_union(&l1, &rev, 10).unwrap(), -1.0);
        let swapped = ["d1", "d3", "d2"];
        assert_abs_diff_eq!(
            kendall_tau_union(&l1, &swapped, 10).unwrap(),
            1.0 / 3.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn ktu_disjoint_lists() {
        // Union of [a, b] and [c, d]: orig ranks a,b,c,d = 1,2,3,4;
        // rep ranks c,d,a,b = 3,4,1,2. tau over two swapped blocks.
        let a = ["a", "b"];
        let b = ["c", "d"];
        let tau = kendall_tau_union(&a, &b, 10).unwrap();
        // Pairs: (a,b) C, (c,d) C, (a,c) D, (a,d) D, (b,c) D, (b,d) D.
        assert_abs_diff_eq!(tau, (2.0 - 4.0) / 6.0, epsilon = 1e-15);
    }

    #[test]
    fn rbo_identity_disjoint_and_hand_value() {
        let l1 = ["d1", "d2"];
        assert_abs_diff_eq!(rbo(&l1, &l1, 0.9).unwrap(), 1.0, epsilon = 1e-12);
        let l2 = ["d3", "d4"];
        assert_eq!(rbo(&l1, &l2, 0.9).unwrap(), 0.0);
        // Swapped pair at p = 0.9: overlap_1 = 0, overlap_2 = 2:
        // (1-p)/p * (0*p + 1*p^2) + 1*p^2 = 0.1*0.9 + 0.81 = 0.9.
        let swapped = ["d2", "d1"];
        assert_abs_diff_eq!(rbo(&l1, &swapped, 0.9).unwrap(), 0.9, epsilon = 1e-12);
    }

    #[test]
    fn rbo_symmetry_and_validation() {
        let a = ["x", "y", "z"];
        let b = ["y", "x", "w"];
        assert_eq!(rbo(&a, &b, 0.8).unwrap(), rbo(&b, &a, 0.8).unwrap());
        assert!(rbo(&a, &b, 1.0).is_err());
        assert!(rbo(&a, &b, 0.0).is_err());
        assert!(rbo(&["x", "x"], &b, 0.8).is_err());
    }

    #[test]
    fn rbo_prefix_disagreement_hurts_more_near_the_top() {
        // Same tail structure, disagreement moved toward rank 1.
        let base = ["a", "b", "c", "d"];
        let late = ["a", "b", "d", "c"];
        let early = ["b", "a", "c", "d"];
        let r_late = rbo(&base, &late, 0.8).unwrap();
        let r_early = rbo(&base, &early, 0.8).unwrap();
        assert!(r_early <= r_late);
    }

    #[test]
    fn typed_pairs_enforce_alignment() {
        assert!(ReproPair::new(vec![0.1], vec![0.2], vec![0.3], vec![]).is_err());
        let p = ReproPair::new(vec![0.5, 0.7], vec![0.4, 0.6], vec![0.5, 0.7], vec![0.4, 0.6])
            .unwrap();
        assert_eq!(p.rmse_abs_a(), 0.0);
        assert_eq!(p.rmse_delta(), 0.0);
        assert_eq!(p.effect_ratio().unwrap(), 1.0);
        assert_eq!(p.delta_ri().unwrap(), 0.0);
        // Replicability allows different topic counts per pair.
        let r = RepliPair::new(vec![0.5, 0.7], vec![0.4, 0.6], vec![0.5], vec![0.4]).unwrap();
        assert!(r.effect_ratio().is_ok());
    }
}
