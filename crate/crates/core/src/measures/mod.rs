//! Graded-relevance measures at a rank cutoff: nDCG@k, Q@k, nERR@k, iRBU@k.
//!
//! Definitions follow the conventions of the task's evaluation tooling:
//!
//! * nDCG@k with the `log2(r + 1)` discount, normalized by the ideal list;
//! * Q@k with beta = 1 and a `1/min(R, k)` normalization, blending precision
//!   and cumulative-gain ratios;
//! * nERR@k with stop probability `gain / gain_max`, normalized by the ideal
//!   list's ERR;
//! * iRBU@k, the persistence-discounted binary utility
//!   `(1/k) * sum_{r<=k} phi^(r-1) * I(level_r > 0)`.
//!
//! Each measure is a strategy behind the [`Measure`] enum so a variant
//! formula can be swapped without touching the statistics layer. Documents
//! missing from the qrels count as L0. Scoring is pure per (topic, run);
//! matrix cells are computed independently and may run in parallel.

mod gain;

use std::collections::BTreeMap;

pub use gain::GainMap;

use crate::error::{Error, Result};
use crate::exec::{map_indexed, Exec};
use crate::trec::{Qrels, Run, ScoreMatrix};

/// Cutoff and iRBU persistence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureConfig {
    pub cutoff: u32,
    pub persistence: f64,
}

impl MeasureConfig {
    pub fn new(cutoff: u32, persistence: f64) -> Result<MeasureConfig> {
        if cutoff == 0 {
            return Err(Error::InvalidParameter {
                msg: "cutoff must be >= 1".into(),
            });
        }
        if !(persistence > 0.0 && persistence < 1.0) {
            return Err(Error::InvalidParameter {
                msg: format!("persistence must be in (0, 1), got {persistence}"),
            });
        }
        Ok(MeasureConfig {
            cutoff,
            persistence,
        })
    }
}

impl Default for MeasureConfig {
    fn default() -> Self {
        MeasureConfig {
            cutoff: 10,
            persistence: 0.99,
        }
    }
}

/// The measure families shipped with the toolkit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Measure {
    Ndcg,
    Q,
    Nerr,
    Irbu,
}

pub const ALL_MEASURES: [Measure; 4] = [Measure::Ndcg, Measure::Q, Measure::Nerr, Measure::Irbu];

impl Measure {
    pub fn name(&self) -> &'static str {
        match self {
            Measure::Ndcg => "ndcg",
            Measure::Q => "q",
            Measure::Nerr => "nerr",
            Measure::Irbu => "irbu",
        }
    }

    /// Display name as used in report tables.
    pub fn label(&self) -> &'static str {
        match self {
            Measure::Ndcg => "nDCG",
            Measure::Q => "Q",
            Measure::Nerr => "nERR",
            Measure::Irbu => "iRBU",
        }
    }

    pub fn parse(s: &str) -> Result<Measure> {
        match s.to_ascii_lowercase().as_str() {
            "ndcg" => Ok(Measure::Ndcg),
            "q" | "q-measure" => Ok(Measure::Q),
            "nerr" => Ok(Measure::Nerr),
            "irbu" => Ok(Measure::Irbu),
            _ => Err(Error::UnknownMeasure {
                name: s.to_string(),
            }),
        }
    }

    fn score(&self, ranked: &[u8], judged_desc: &[u8], gains: &GainMap, cfg: &MeasureConfig) -> f64 {
        match self {
            Measure::Ndcg => ndcg_from_levels(ranked, judged_desc, gains, cfg.cutoff),
            Measure::Q => q_from_levels(ranked, judged_desc, gains, cfg.cutoff),
            Measure::Nerr => nerr_from_levels(ranked, judged_desc, gains, cfg.cutoff),
            Measure::Irbu => irbu_from_levels(ranked, cfg.cutoff, cfg.persistence),
        }
    }
}

/// Levels of the ranked documents plus the topic's judged levels, the
/// per-topic view every measure consumes.
#[derive(Debug, Clone)]
pub struct TopicView {
    /// Level of each ranked document, in rank order (L0 when unjudged).
    ranked: Vec<u8>,
    /// All judged levels of the topic, sorted descending (the ideal list).
    judged_desc: Vec<u8>,
}

impl TopicView {
    /// Builds the view for one ranking against one topic's labels.
    ///
    /// Fails when the topic has no document with positive gain, since every
    /// normalized measure is undefined there.
    pub fn new(
        ranked_docs: &[&str],
        labels: &BTreeMap<String, u8>,
        gains: &GainMap,
        topic: &str,
    ) -> Result<TopicView> {
        let mut judged_desc: Vec<u8> = labels.values().copied().collect();
        judged_desc.sort_unstable_by(|a, b| b.cmp(a));
        if judged_desc.first().map_or(true, |&l| gains.gain(l) <= 0.0) {
            return Err(Error::NoRelevantDocs {
                topic: topic.to_string(),
            });
        }
        let ranked = ranked_docs
            .iter()
            .map(|d| labels.get(*d).copied().unwrap_or(0))
            .collect();
        Ok(TopicView { ranked, judged_desc })
    }

    pub fn score(&self, measure: Measure, gains: &GainMap, cfg: &MeasureConfig) -> f64 {
        measure.score(&self.ranked, &self.judged_desc, gains, cfg)
    }
}

/// nDCG@k of a ranking given the topic's labels.
pub fn ndcg(
    ranked_docs: &[&str],
    labels: &BTreeMap<String, u8>,
    gains: &GainMap,
    cfg: &MeasureConfig,
) -> Result<f64> {
    score_one(Measure::Ndcg, ranked_docs, labels, gains, cfg)
}

/// Q@k of a ranking given the topic's labels.
pub fn qmeasure(
    ranked_docs: &[&str],
    labels: &BTreeMap<String, u8>,
    gains: &GainMap,
    cfg: &MeasureConfig,
) -> Result<f64> {
    score_one(Measure::Q, ranked_docs, labels, gains, cfg)
}

/// nERR@k of a ranking given the topic's labels.
pub fn nerr(
    ranked_docs: &[&str],
    labels: &BTreeMap<String, u8>,
    gains: &GainMap,
    cfg: &MeasureConfig,
) -> Result<f64> {
    score_one(Measure::Nerr, ranked_docs, labels, gains, cfg)
}

/// iRBU@k of a ranking given the topic's labels.
pub fn irbu(
    ranked_docs: &[&str],
    labels: &BTreeMap<String, u8>,
    cfg: &MeasureConfig,
) -> Result<f64> {
    // iRBU only needs binary relevance; the gain map is irrelevant but the
    // no-relevant-docs precondition still applies.
    let lmax = labels.values().copied().max().unwrap_or(0);
    let gains = GainMap::linear(lmax.max(1));
    score_one(Measure::Irbu, ranked_docs, labels, &gains, cfg)
}

fn score_one(
    measure: Measure,
    ranked_docs: &[&str],
    labels: &BTreeMap<String, u8>,
    gains: &GainMap,
    cfg: &MeasureConfig,
) -> Result<f64> {
    let view = TopicView::new(ranked_docs, labels, gains, "<topic>")?;
    Ok(view.score(measure, gains, cfg))
}

fn discount(rank: usize) -> f64 {
    (rank as f64 + 1.0).log2()
}

fn ndcg_from_levels(ranked: &[u8], judged_desc: &[u8], gains: &GainMap, k: u32) -> f64 {
    let k = k as usize;
    let dcg: f64 = ranked
        .iter()
        .take(k)
        .enumerate()
        .map(|(i, &l)| gains.gain(l) / discount(i + 1))
        .sum();
    let idcg: f64 = judged_desc
        .iter()
        .take(k)
        .enumerate()
        .map(|(i, &l)| gains.gain(l) / discount(i + 1))
        .sum();
    if idcg == 0.0 {
        0.0
    } else {
        dcg / idcg
    }
}

fn q_from_levels(ranked: &[u8], judged_desc: &[u8], gains: &GainMap, k: u32) -> f64 {
    let k = k as usize;
    let r_count = judged_desc.iter().filter(|&&l| gains.gain(l) > 0.0).count();
    if r_count == 0 {
        return 0.0;
    }
    let mut sum = 0.0;
    let mut cg = 0.0;
    let mut cg_ideal = 0.0;
    let mut rel_seen = 0usize;
    for r in 1..=k.min(ranked.len().max(judged_desc.len())) {
        if r <= judged_desc.len() {
            cg_ideal += gains.gain(judged_desc[r - 1]);
        }
        if r > ranked.len() {
            continue;
        }
        let g = gains.gain(ranked[r - 1]);
        cg += g;
        if g > 0.0 {
            rel_seen += 1;
            sum += (rel_seen as f64 + cg) / (r as f64 + cg_ideal);
        }
    }
    sum / r_count.min(k) as f64
}

fn nerr_from_levels(ranked: &[u8], judged_desc: &[u8], gains: &GainMap, k: u32) -> f64 {
    let err = |levels: &[u8]| -> f64 {
        let mut total = 0.0;
        let mut continue_p = 1.0;
        for (i, &l) in levels.iter().take(k as usize).enumerate() {
            let stop = gains.gain(l) / gains.g_max();
            total += continue_p * stop / (i as f64 + 1.0);
            continue_p *= 1.0 - stop;
        }
        total
    };
    let ideal = err(judged_desc);
    if ideal == 0.0 {
        0.0
    } else {
        err(ranked) / ideal
    }
}

fn irbu_from_levels(ranked: &[u8], k: u32, persistence: f64) -> f64 {
    let mut sum = 0.0;
    let mut weight = 1.0;
    for r in 0..k as usize {
        if ranked.get(r).copied().unwrap_or(0) > 0 {
            sum += weight;
        }
        weight *= persistence;
    }
    sum / k as f64
}

/// Scores every (topic, run) cell of `qrels`' topics. Topics are ordered
/// ascending; systems ascending by run id. A run missing a topic scores 0
/// there; a topic without relevant documents is rejected.
pub fn score_matrix(
    runs: &[Run],
    qrels: &Qrels,
    measure: Measure,
    gains: &GainMap,
    cfg: &MeasureConfig,
) -> Result<ScoreMatrix> {
    score_matrix_with(runs, qrels, measure, gains, cfg, Exec::default())
}

/// [`score_matrix`] with an explicit execution strategy.
pub fn score_matrix_with(
    runs: &[Run],
    qrels: &Qrels,
    measure: Measure,
    gains: &GainMap,
    cfg: &MeasureConfig,
    exec: Exec,
) -> Result<ScoreMatrix> {
    if runs.is_empty() {
        return Err(Error::EmptyRunSet);
    }
    let mut order: Vec<usize> = (0..runs.len()).collect();
    order.sort_by(|&a, &b| runs[a].run_id().cmp(runs[b].run_id()));
    let systems: Vec<String> = order.iter().map(|&i| runs[i].run_id().to_string()).collect();
    let topics: Vec<String> = qrels.topics().map(str::to_string).collect();

    // Validate topics and prepare per-topic views up front so cell scoring
    // is infallible.
    let mut views: Vec<Vec<Option<TopicView>>> = Vec::with_capacity(topics.len());
    for topic in &topics {
        let labels = qrels.topic_labels(topic).unwrap();
        let mut row = Vec::with_capacity(order.len());
        for &ri in &order {
            match runs[ri].doc_ids(topic) {
                Some(docs) => row.push(Some(TopicView::new(&docs, labels, gains, topic)?)),
                None => {
                    // Check the topic is scorable at all, then record the
                    // missing ranking as a zero cell.
                    TopicView::new(&[], labels, gains, topic)?;
                    row.push(None);
                }
            }
        }
        views.push(row);
    }

    let m = systems.len();
    let cells = map_indexed(topics.len() * m, exec, |idx| {
        let (t, s) = (idx / m, idx % m);
        match &views[t][s] {
            Some(view) => view.score(measure, gains, cfg),
            None => 0.0,
        }
    });
    ScoreMatrix::new(topics, systems, cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn labels(pairs: &[(&str, u8)]) -> BTreeMap<String, u8> {
        pairs.iter().map(|&(d, l)| (d.to_string(), l)).collect()
    }

    fn cfg(k: u32) -> MeasureConfig {
        MeasureConfig::new(k, 0.99).unwrap()
    }

    #[test]
    fn ndcg_hand_computed() {
        // Ranking [L2, L0, L1]: DCG = 2 + 0 + 1/log2(4) = 2.5,
        // iDCG = 2 + 1/log2(3) = 2.6309...
        let l = labels(&[("d1", 2), ("d2", 1), ("d3", 0)]);
        let g = GainMap::linear(2);
        let v = ndcg(&["d1", "d3", "d2"], &l, &g, &cfg(3)).unwrap();
        let expected = 2.5 / (2.0 + 1.0 / 3f64.log2());
        assert_abs_diff_eq!(v, expected, epsilon = 1e-12);
        assert_abs_diff_eq!(v, 0.9502, epsilon = 5e-5);
    }

    #[test]
    fn ndcg_ideal_is_one_and_irrelevant_is_zero() {
        let l = labels(&[("d1", 2), ("d2", 1), ("d3", 0)]);
        let g = GainMap::linear(2);
        assert_abs_diff_eq!(
            ndcg(&["d1", "d2", "d3"], &l, &g, &cfg(3)).unwrap(),
            1.0,
            epsilon = 1e-12
        );
        assert_eq!(ndcg(&["d3", "x", "y"], &l, &g, &cfg(3)).unwrap(), 0.0);
    }

    #[test]
    fn ndcg_rejects_topic_without_relevant_docs() {
        let l = labels(&[("d1", 0)]);
        let g = GainMap::linear(2);
        assert!(matches!(
            ndcg(&["d1"], &l, &g, &cfg(3)),
            Err(Error::NoRelevantDocs { .. })
        ));
    }

    #[test]
    fn q_hand_computed() {
        // Only relevant doc dX (L2) at rank 2 behind an L0 doc:
        // Q = (1/1) * (1 + 2) / (2 + 2) = 0.75.
        let l = labels(&[("dX", 2), ("dOther", 0)]);
        let g = GainMap::linear(2);
        let v = qmeasure(&["dOther", "dX"], &l, &g, &cfg(2)).unwrap();
        assert_abs_diff_eq!(v, 0.75, epsilon = 1e-12);
    }

    #[test]
    fn q_ideal_is_one_no_relevant_is_zero() {
        let l = labels(&[("d1", 2), ("d2", 1), ("d3", 0)]);
        let g = GainMap::linear(2);
        assert_abs_diff_eq!(
            qmeasure(&["d1", "d2", "d3"], &l, &g, &cfg(3)).unwrap(),
            1.0,
            epsilon = 1e-12
        );
        assert_eq!(qmeasure(&["d3", "x"], &l, &g, &cfg(2)).unwrap(), 0.0);
    }

    #[test]
    fn nerr_hand_computed() {
        // L0-L4 scale, docs [L2, L4]: ERR = 0.5 + (1/2)(0.5)(1.0) = 0.75,
        // ideal [L4, L2] stops at rank 1 with probability 1: ERR* = 1.
        let l = labels(&[("a", 2), ("b", 4)]);
        let g = GainMap::linear(4);
        let v = nerr(&["a", "b"], &l, &g, &cfg(2)).unwrap();
        assert_abs_diff_eq!(v, 0.75, epsilon = 1e-12);
    }

    #[test]
    fn nerr_top_gmax_is_absorbing() {
        let l = labels(&[("a", 4), ("b", 3), ("c", 1)]);
        let g = GainMap::linear(4);
        let v = nerr(&["a", "c", "b"], &l, &g, &cfg(3)).unwrap();
        assert_abs_diff_eq!(v, 1.0, epsilon = 1e-12);
        assert_eq!(nerr(&["x", "y"], &l, &g, &cfg(2)).unwrap(), 0.0);
    }

    #[test]
    fn irbu_all_relevant_top_k() {
        let l: BTreeMap<String, u8> = (0..10).map(|i| (format!("d{i}"), 1u8)).collect();
        let docs: Vec<String> = (0..10).map(|i| format!("d{i}")).collect();
        let refs: Vec<&str> = docs.iter().map(String::as_str).collect();
        let v = irbu(&refs, &l, &cfg(10)).unwrap();
        // Geometric sum: (1/10) * (1 - 0.99^10) / (1 - 0.99) = 0.95617...
        let expected = (1.0 - 0.99f64.powi(10)) / (1.0 - 0.99) / 10.0;
        assert_abs_diff_eq!(v, expected, epsilon = 1e-12);
        assert_abs_diff_eq!(v, 0.9562, epsilon = 5e-5);
    }

    #[test]
    fn irbu_edge_cases() {
        let l = labels(&[("d1", 1), ("d2", 0)]);
        assert_eq!(irbu(&["d2", "x"], &l, &cfg(2)).unwrap(), 0.0);
        assert_abs_diff_eq!(irbu(&["d1"], &l, &cfg(1)).unwrap(), 1.0, epsilon = 0.0);
    }

    #[test]
    fn below_cutoff_appends_are_noops() {
        let l = labels(&[("d1", 2), ("d2", 1), ("d3", 0), ("d4", 2)]);
        let g = GainMap::linear(2);
        let c = cfg(2);
        for m in ALL_MEASURES {
            let short = score_one(m, &["d2", "d3"], &l, &g, &c).unwrap();
            let long = score_one(m, &["d2", "d3", "d4", "d1"], &l, &g, &c).unwrap();
            assert_eq!(short, long, "{} changed on append", m.name());
        }
    }

    #[test]
    fn matrix_single_cell() {
        let run = Run::from_scores("sys", vec![("t1", vec![("d1", 2.0), ("d2", 1.0)])]).unwrap();
        let qrels = Qrels::parse("t1 0 d1 L2\nt1 0 d2 L0").unwrap();
        let g = GainMap::linear(qrels.lmax());
        let m = score_matrix(&[run], &qrels, Measure::Ndcg, &g, &cfg(10)).unwrap();
        assert_eq!(m.n_topics(), 1);
        assert_eq!(m.n_systems(), 1);
        assert_abs_diff_eq!(m.get(0, 0), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn matrix_missing_topic_scores_zero() {
        let run_a = Run::from_scores("a", vec![("t1", vec![("d1", 1.0)])]).unwrap();
        let run_b = Run::from_scores(
            "b",
            vec![("t1", vec![("d1", 1.0)]), ("t2", vec![("d2", 1.0)])],
        )
        .unwrap();
        let qrels = Qrels::parse("t1 0 d1 L1\nt2 0 d2 L1").unwrap();
        let g = GainMap::linear(qrels.lmax());
        let m = score_matrix(&[run_b, run_a], &qrels, Measure::Ndcg, &g, &cfg(10)).unwrap();
        // Systems sorted by id: a before b.
        assert_eq!(m.systems(), &["a".to_string(), "b".to_string()]);
        assert_eq!(m.get(1, 0), 0.0);
        assert_abs_diff_eq!(m.get(1, 1), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn matrix_rejects_empty_runs_and_unjudged_topics() {
        let qrels = Qrels::parse("t1 0 d1 L0").unwrap();
        let g = GainMap::linear(2);
        assert!(matches!(
            score_matrix(&[], &qrels, Measure::Ndcg, &g, &cfg(10)),
            Err(Error::EmptyRunSet)
        ));
        let run = Run::from_scores("a", vec![("t1", vec![("d1", 1.0)])]).unwrap();
        assert!(matches!(
            score_matrix(&[run], &qrels, Measure::Ndcg, &g, &cfg(10)),
            Err(Error::NoRelevantDocs { .. })
        ));
    }
}
