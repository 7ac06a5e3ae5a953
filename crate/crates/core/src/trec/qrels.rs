//! Qrels: graded relevance judgments, `topic 0 docid level`.
//!
//! Levels are written `L0`..`Ln`; bare integers are accepted on input.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Relevance labels keyed by topic then document, with the scale maximum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Qrels {
    labels: BTreeMap<String, BTreeMap<String, u8>>,
    lmax: u8,
}

/// Per-level document counts over all topics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QrelsStats {
    /// `counts[level]` = number of (topic, doc) pairs judged at that level.
    pub counts: Vec<u64>,
    pub total: u64,
}

/// Tolerated deviations from the strict 4-column format, the adapter point
/// for externally published qrels variants.
#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    /// Ignore columns after the fourth instead of rejecting the line.
    pub allow_extra_fields: bool,
    /// Accept 3-column `topic docid level` lines (no iteration column).
    pub allow_three_columns: bool,
}

impl Qrels {
    /// Parses the strict format; `Lmax` becomes the maximum observed level.
    pub fn parse(text: &str) -> Result<Qrels> {
        Qrels::parse_with(text, ParseOptions::default())
    }

    pub fn parse_with(text: &str, opts: ParseOptions) -> Result<Qrels> {
        let mut labels: BTreeMap<String, BTreeMap<String, u8>> = BTreeMap::new();
        let mut lmax = 0u8;
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = line.trim_end_matches('\r');
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let (topic, doc, level_str) = match fields.len() {
                4 => (fields[0], fields[2], fields[3]),
                3 if opts.allow_three_columns => (fields[0], fields[1], fields[2]),
                n if n > 4 && opts.allow_extra_fields => (fields[0], fields[2], fields[3]),
                n => {
                    return Err(Error::Malformed {
                        line: line_no,
                        msg: format!("expected 4 fields, got {n}"),
                    })
                }
            };
            let level = parse_level(level_str).ok_or_else(|| Error::Malformed {
                line: line_no,
                msg: format!("invalid relevance level '{level_str}'"),
            })?;
            let topic_map = labels.entry(topic.to_string()).or_default();
            if topic_map.insert(doc.to_string(), level).is_some() {
                return Err(Error::DuplicatePair {
                    topic: topic.to_string(),
                    doc: doc.to_string(),
                });
            }
            lmax = lmax.max(level);
        }
        Ok(Qrels { labels, lmax })
    }

    /// Builds qrels from nested maps; every level must be within `0..=lmax`.
    pub fn from_nested(labels: BTreeMap<String, BTreeMap<String, u8>>, lmax: u8) -> Result<Qrels> {
        for docs in labels.values() {
            for &level in docs.values() {
                if level > lmax {
                    return Err(Error::InvalidLevel {
                        level: level as i64,
                        max: lmax,
                    });
                }
            }
        }
        Ok(Qrels { labels, lmax })
    }

    /// Serializes in topic/doc order with `L`-prefixed levels.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for (topic, docs) in &self.labels {
            for (doc, level) in docs {
                out.push_str(&format!("{topic} 0 {doc} L{level}\n"));
            }
        }
        out
    }

    pub fn lmax(&self) -> u8 {
        self.lmax
    }

    pub fn level(&self, topic: &str, doc: &str) -> Option<u8> {
        self.labels.get(topic).and_then(|d| d.get(doc)).copied()
    }

    pub fn topics(&self) -> impl Iterator<Item = &str> {
        self.labels.keys().map(String::as_str)
    }

    pub fn n_topics(&self) -> usize {
        self.labels.len()
    }

    /// Labels of one topic, keyed by doc.
    pub fn topic_labels(&self, topic: &str) -> Option<&BTreeMap<String, u8>> {
        self.labels.get(topic)
    }

    /// A copy restricted to the topics accepted by `keep`.
    pub fn filter_topics<F: Fn(&str) -> bool>(&self, keep: F) -> Qrels {
        Qrels {
            labels: self
                .labels
                .iter()
                .filter(|(t, _)| keep(t))
                .map(|(t, d)| (t.clone(), d.clone()))
                .collect(),
            lmax: self.lmax,
        }
    }

    /// Per-level counts over all topics.
    pub fn stats(&self) -> QrelsStats {
        let mut counts = vec![0u64; self.lmax as usize + 1];
        let mut total = 0u64;
        for docs in self.labels.values() {
            for &level in docs.values() {
                counts[level as usize] += 1;
                total += 1;
            }
        }
        QrelsStats { counts, total }
    }
}

/// Accepts `L2`-style and bare-integer levels.
fn parse_level(s: &str) -> Option<u8> {
    let digits = s.strip_prefix('L').unwrap_or(s);
    let value: i64 = digits.parse().ok()?;
    if (0..=255).contains(&value) {
        Some(value as u8)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_prefixed_level() {
        let q = Qrels::parse("0001 0 dA L2").unwrap();
        assert_eq!(q.level("0001", "dA"), Some(2));
        assert_eq!(q.lmax(), 2);
    }

    #[test]
    fn parses_bare_levels_and_tracks_lmax() {
        let q = Qrels::parse("0001 0 dA 4\n0002 0 dB 0").unwrap();
        assert_eq!(q.lmax(), 4);
        assert_eq!(q.n_topics(), 2);
        assert_eq!(q.level("0002", "dB"), Some(0));
    }

    #[test]
    fn rejects_duplicate_pair() {
        let err = Qrels::parse("0001 0 dA L1\n0001 0 dA L2").unwrap_err();
        assert!(matches!(err, Error::DuplicatePair { .. }));
    }

    #[test]
    fn rejects_negative_level() {
        assert!(Qrels::parse("0001 0 dA -1").is_err());
    }

    #[test]
    fn stats_count_levels() {
        let q = Qrels::parse("0001 0 dA L2\n0001 0 dB L0\n0002 0 dA L2").unwrap();
        let s = q.stats();
        assert_eq!(s.counts, vec![1, 0, 2]);
        assert_eq!(s.total, 3);
    }

    #[test]
    fn stats_of_empty_qrels_are_zero() {
        let q = Qrels::parse("").unwrap();
        let s = q.stats();
        assert_eq!(s.total, 0);
        assert_eq!(s.counts, vec![0]);
    }

    #[test]
    fn serializes_l_prefixed() {
        let q = Qrels::parse("0001 0 dA 2\n0001 0 dB 0").unwrap();
        assert_eq!(q.serialize(), "0001 0 dA L2\n0001 0 dB L0\n");
    }

    #[test]
    fn lenient_options() {
        let opts = ParseOptions {
            allow_extra_fields: true,
            allow_three_columns: true,
        };
        let q = Qrels::parse_with("0001 0 dA L2 extra\n0002 dB 1", opts).unwrap();
        assert_eq!(q.level("0001", "dA"), Some(2));
        assert_eq!(q.level("0002", "dB"), Some(1));
        assert!(Qrels::parse("0001 0 dA L2 extra").is_err());
    }
}
