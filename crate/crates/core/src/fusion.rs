//! Combining multiple assessors' 3-point labels into graded qrels.
//!
//! Two schemes are used by the supported collections: summing two labels
//! into an L0-L4 scale, and `floor(log2(S + 1))` over the sum S of eight
//! labels. The variant builder assembles qrels from provenance fragments
//! (good vs. bug-affected assessments) for noise-impact experiments.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::trec::{AssessmentSet, Qrels};

/// How raw label sums are mapped to combined relevance levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FusionScheme {
    /// Level = sum of raw labels; scale maximum is `2 * n_assessors`.
    Sum,
    /// Level = `floor(log2(sum + 1))`; 4 for eight assessors.
    Log2,
}

impl FusionScheme {
    pub fn as_str(&self) -> &'static str {
        match self {
            FusionScheme::Sum => "sum",
            FusionScheme::Log2 => "log",
        }
    }

    pub fn parse(s: &str) -> Result<FusionScheme> {
        match s.to_ascii_lowercase().as_str() {
            "sum" => Ok(FusionScheme::Sum),
            "log" | "log2" => Ok(FusionScheme::Log2),
            _ => Err(Error::InvalidParameter {
                msg: format!("unknown fusion scheme '{s}'"),
            }),
        }
    }

    fn level(&self, sum: u32) -> u8 {
        match self {
            FusionScheme::Sum => sum as u8,
            FusionScheme::Log2 => (sum + 1).ilog2() as u8,
        }
    }

    fn lmax(&self, n_sets: usize) -> u8 {
        self.level(2 * n_sets as u32)
    }

    /// Fuses assessor sets under this scheme.
    pub fn fuse(&self, sets: &[AssessmentSet]) -> Result<Qrels> {
        fuse_with(sets, *self)
    }
}

/// Sums raw labels per (topic, doc): two 3-point assessors yield L0-L4.
pub fn fuse_sum(sets: &[AssessmentSet]) -> Result<Qrels> {
    fuse_with(sets, FusionScheme::Sum)
}

/// Combines raw labels as `floor(log2(S + 1))` of their sum S: eight
/// 3-point assessors (S in 0..=16) yield L0-L4.
pub fn fuse_log(sets: &[AssessmentSet]) -> Result<Qrels> {
    fuse_with(sets, FusionScheme::Log2)
}

fn fuse_with(sets: &[AssessmentSet], scheme: FusionScheme) -> Result<Qrels> {
    let first = sets.first().ok_or(Error::InvalidParameter {
        msg: "fusion requires at least one assessment set".into(),
    })?;
    if 2 * sets.len() > u8::MAX as usize {
        return Err(Error::InvalidParameter {
            msg: format!("too many assessment sets ({})", sets.len()),
        });
    }
    for other in &sets[1..] {
        if !first.same_coverage(other) {
            return Err(Error::CoverageMismatch {
                msg: format!(
                    "assessor '{}' labels a different (topic, doc) universe than '{}'",
                    other.assessor_id(),
                    first.assessor_id()
                ),
            });
        }
    }
    let mut labels: BTreeMap<String, BTreeMap<String, u8>> = BTreeMap::new();
    for topic in first.topics() {
        let mut docs = BTreeMap::new();
        for doc in first.topic_labels(topic).unwrap().keys() {
            let sum: u32 = sets
                .iter()
                .map(|s| s.label(topic, doc).unwrap() as u32)
                .sum();
            docs.insert(doc.clone(), scheme.level(sum));
        }
        labels.insert(topic.to_string(), docs);
    }
    Qrels::from_nested(labels, scheme.lmax(sets.len()))
}

/// Which provenance fragments make up a qrels variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VariantKind {
    /// Good assessments plus the bug-affected ones as delivered.
    GoodPlusNoise,
    /// Good assessments plus the corrected versions of the affected ones.
    GoodPlusCorrected,
    /// Good assessments only, re-fused on their reduced scale.
    GoodPlusNull,
}

impl VariantKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            VariantKind::GoodPlusNoise => "good+noise",
            VariantKind::GoodPlusCorrected => "good+corrected",
            VariantKind::GoodPlusNull => "good+NULL",
        }
    }

    pub fn parse(s: &str) -> Result<VariantKind> {
        match s.to_ascii_lowercase().as_str() {
            "good+noise" | "noise" => Ok(VariantKind::GoodPlusNoise),
            "good+corrected" | "corrected" => Ok(VariantKind::GoodPlusCorrected),
            "good+null" | "null" => Ok(VariantKind::GoodPlusNull),
            _ => Err(Error::InvalidParameter {
                msg: format!("unknown variant '{s}'"),
            }),
        }
    }
}

/// Re-fuses provenance fragments into one qrels variant.
///
/// `good` holds the unaffected assessment sets, `noisy` the bug-affected
/// ones as delivered, and `corrected` their fixed counterparts. The three
/// groups must be disjoint by assessor id, and `corrected` must cover the
/// same universe as `noisy`.
pub fn make_variant(
    good: &[AssessmentSet],
    noisy: &[AssessmentSet],
    corrected: &[AssessmentSet],
    scheme: FusionScheme,
    variant: VariantKind,
) -> Result<Qrels> {
    if good.is_empty() {
        return Err(Error::EmptyGoodFragment);
    }
    let good_ids: std::collections::BTreeSet<&str> =
        good.iter().map(AssessmentSet::assessor_id).collect();
    for set in noisy.iter().chain(corrected) {
        if good_ids.contains(set.assessor_id()) {
            return Err(Error::FragmentOverlap {
                msg: format!(
                    "assessor '{}' appears in both the good and affected fragments",
                    set.assessor_id()
                ),
            });
        }
    }
    if noisy.len() != corrected.len()
        || noisy
            .iter()
            .zip(corrected)
            .any(|(n, c)| !n.same_coverage(c))
    {
        return Err(Error::CoverageMismatch {
            msg: "corrected fragment does not mirror the noisy fragment".into(),
        });
    }
    let mut sets: Vec<AssessmentSet> = good.to_vec();
    match variant {
        VariantKind::GoodPlusNoise => sets.extend_from_slice(noisy),
        VariantKind::GoodPlusCorrected => sets.extend_from_slice(corrected),
        VariantKind::GoodPlusNull => {}
    }
    fuse_with(&sets, scheme)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(id: &str, labels: &[(&str, &str, u8)]) -> AssessmentSet {
        let mut s = AssessmentSet::new(id);
        for &(t, d, l) in labels {
            s.insert(t, d, l).unwrap();
        }
        s
    }

    #[test]
    fn sum_of_two_assessors() {
        let a = set("a", &[("t", "d1", 2), ("t", "d2", 0), ("t", "d3", 1)]);
        let b = set("b", &[("t", "d1", 2), ("t", "d2", 0), ("t", "d3", 2)]);
        let q = fuse_sum(&[a, b]).unwrap();
        assert_eq!(q.level("t", "d1"), Some(4));
        assert_eq!(q.level("t", "d2"), Some(0));
        assert_eq!(q.level("t", "d3"), Some(3));
        assert_eq!(q.lmax(), 4);
    }

    #[test]
    fn sum_with_one_assessor_is_identity() {
        let a = set("a", &[("t", "d1", 2), ("t", "d2", 1)]);
        let q = fuse_sum(std::slice::from_ref(&a)).unwrap();
        assert_eq!(q.level("t", "d1"), Some(2));
        assert_eq!(q.level("t", "d2"), Some(1));
        assert_eq!(q.lmax(), 2);
    }

    #[test]
    fn log_merges_eight_assessors() {
        // All assessors give 2: S = 16, level = floor(log2(17)) = 4.
        let sets: Vec<AssessmentSet> = (0..8)
            .map(|i| set(&format!("a{i}"), &[("t", "d", 2)]))
            .collect();
        let q = fuse_log(&sets).unwrap();
        assert_eq!(q.level("t", "d"), Some(4));
        assert_eq!(q.lmax(), 4);
    }

    #[test]
    fn log_level_examples() {
        assert_eq!(FusionScheme::Log2.level(16), 4);
        assert_eq!(FusionScheme::Log2.level(0), 0);
        assert_eq!(FusionScheme::Log2.level(3), 2);
    }

    #[test]
    fn coverage_mismatch_is_rejected() {
        let a = set("a", &[("t", "d1", 2), ("t", "d2", 0)]);
        let b = set("b", &[("t", "d1", 2)]);
        assert!(matches!(
            fuse_sum(&[a, b]),
            Err(Error::CoverageMismatch { .. })
        ));
    }

    #[test]
    fn fusion_is_permutation_invariant() {
        let a = set("a", &[("t", "d1", 2), ("t", "d2", 1)]);
        let b = set("b", &[("t", "d1", 0), ("t", "d2", 2)]);
        assert_eq!(
            fuse_sum(&[a.clone(), b.clone()]).unwrap(),
            fuse_sum(&[b.clone(), a.clone()]).unwrap()
        );
        assert_eq!(
            fuse_log(&[a.clone(), b.clone()]).unwrap(),
            fuse_log(&[b, a]).unwrap()
        );
    }

    #[test]
    fn good_plus_null_keeps_reduced_scale() {
        // One good assessor and one noisy assessor, as in a mixed-order topic.
        let good = [set("rnd", &[("t", "d1", 2), ("t", "d2", 1)])];
        let noisy = [set("pri", &[("t", "d1", 0), ("t", "d2", 2)])];
        let corrected = [set("pri", &[("t", "d1", 2), ("t", "d2", 2)])];
        let q = make_variant(
            &good,
            &noisy,
            &corrected,
            FusionScheme::Sum,
            VariantKind::GoodPlusNull,
        )
        .unwrap();
        assert_eq!(q.lmax(), 2);
        assert_eq!(q.level("t", "d1"), Some(2));
    }

    #[test]
    fn corrected_equal_to_noisy_matches_noise_variant() {
        let good = [set("g", &[("t", "d1", 1), ("t", "d2", 0)])];
        let noisy = [set("n", &[("t", "d1", 2), ("t", "d2", 1)])];
        let q_noise = make_variant(
            &good,
            &noisy,
            &noisy,
            FusionScheme::Sum,
            VariantKind::GoodPlusNoise,
        )
        .unwrap();
        let q_corr = make_variant(
            &good,
            &noisy,
            &noisy,
            FusionScheme::Sum,
            VariantKind::GoodPlusCorrected,
        )
        .unwrap();
        assert_eq!(q_noise, q_corr);
    }

    #[test]
    fn log_null_variant_caps_at_l3() {
        // Four good assessors under the log scheme: S in 0..=8, level <= 3.
        let good: Vec<AssessmentSet> = (0..4)
            .map(|i| set(&format!("g{i}"), &[("t", "d", 2)]))
            .collect();
        let noisy: Vec<AssessmentSet> = (0..4)
            .map(|i| set(&format!("n{i}"), &[("t", "d", 1)]))
            .collect();
        let q = make_variant(
            &good,
            &noisy,
            &noisy,
            FusionScheme::Log2,
            VariantKind::GoodPlusNull,
        )
        .unwrap();
        assert_eq!(q.lmax(), 3);
        assert_eq!(q.level("t", "d"), Some(3)); // floor(log2(9)) = 3
    }

    #[test]
    fn variant_rejects_overlap_and_empty_good() {
        let g = set("x", &[("t", "d", 1)]);
        let n = set("x", &[("t", "d", 2)]);
        assert!(matches!(
            make_variant(
                std::slice::from_ref(&g),
                std::slice::from_ref(&n),
                std::slice::from_ref(&n),
                FusionScheme::Sum,
                VariantKind::GoodPlusNoise
            ),
            Err(Error::FragmentOverlap { .. })
        ));
        assert!(matches!(
            make_variant(&[], &[], &[], FusionScheme::Sum, VariantKind::GoodPlusNull),
            Err(Error::EmptyGoodFragment)
        ));
    }
}
