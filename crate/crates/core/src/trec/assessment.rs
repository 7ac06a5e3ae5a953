//! One assessor's raw 3-point labels over pooled documents.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Maximum raw label on the 3-point assessment scale.
pub const RAW_LEVEL_MAX: u8 = 2;

/// Labels of a single assessor, keyed by topic then document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssessmentSet {
    assessor_id: String,
    labels: BTreeMap<String, BTreeMap<String, u8>>,
}

impl AssessmentSet {
    pub fn new(assessor_id: &str) -> AssessmentSet {
        AssessmentSet {
            assessor_id: assessor_id.to_string(),
            labels: BTreeMap::new(),
        }
    }

    /// Parses the qrels-style 4-column format; levels must be in 0..=2.
    pub fn parse(assessor_id: &str, text: &str) -> Result<AssessmentSet> {
        let qrels = crate::trec::Qrels::parse(text)?;
        let mut set = AssessmentSet::new(assessor_id);
        for topic in qrels.topics() {
            for (doc, &level) in qrels.topic_labels(topic).unwrap() {
                set.insert(topic, doc, level)?;
            }
        }
        Ok(set)
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for (topic, docs) in &self.labels {
            for (doc, level) in docs {
                out.push_str(&format!("{topic} 0 {doc} L{level}\n"));
            }
        }
        out
    }

    pub fn insert(&mut self, topic: &str, doc: &str, raw_level: u8) -> Result<()> {
        if raw_level > RAW_LEVEL_MAX {
            return Err(Error::InvalidLevel {
                level: raw_level as i64,
                max: RAW_LEVEL_MAX,
            });
        }
        let topic_map = self.labels.entry(topic.to_string()).or_default();
        if topic_map.insert(doc.to_string(), raw_level).is_some() {
            return Err(Error::DuplicatePair {
                topic: topic.to_string(),
                doc: doc.to_string(),
            });
        }
        Ok(())
    }

    pub fn assessor_id(&self) -> &str {
        &self.assessor_id
    }

    pub fn label(&self, topic: &str, doc: &str) -> Option<u8> {
        self.labels.get(topic).and_then(|d| d.get(doc)).copied()
    }

    pub fn topics(&self) -> impl Iterator<Item = &str> {
        self.labels.keys().map(String::as_str)
    }

    pub fn topic_labels(&self, topic: &str) -> Option<&BTreeMap<String, u8>> {
        self.labels.get(topic)
    }

    pub fn n_labels(&self) -> usize {
        self.labels.values().map(BTreeMap::len).sum()
    }

    /// True when both sets label exactly the same (topic, doc) pairs.
    pub fn same_coverage(&self, other: &AssessmentSet) -> bool {
        if self.labels.len() != other.labels.len() {
            return false;
        }
        self.labels.iter().all(|(topic, docs)| {
            other
                .labels
                .get(topic)
                .is_some_and(|o| o.len() == docs.len() && docs.keys().eq(o.keys()))
        })
    }

    /// A copy restricted to the topics accepted by `keep`.
    pub fn filter_topics<F: Fn(&str) -> bool>(&self, keep: F) -> AssessmentSet {
        AssessmentSet {
            assessor_id: self.assessor_id.clone(),
            labels: self
                .labels
                .iter()
                .filter(|(t, _)| keep(t))
                .map(|(t, d)| (t.clone(), d.clone()))
                .collect(),
        }
    }
}
