//! Run files: per-topic ranked document lists.
//!
//! Line format: `topic Q0 docid rank score tag` (whitespace-delimited). The
//! rank column is validated but ranks are re-derived from the scores: sort by
//! score descending, break ties by doc id descending, then renumber 1..n.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// One retrieved document within a topic.
#[derive(Debug, Clone, PartialEq)]
pub struct RankedDoc {
    pub doc_id: String,
    pub rank: u32,
    pub score: f64,
}

/// A system's ranked document lists, keyed by topic.
#[derive(Debug, Clone, PartialEq)]
pub struct Run {
    run_id: String,
    rankings: BTreeMap<String, Vec<RankedDoc>>,
}

impl Run {
    /// Builds a run from raw (doc, score) lists, applying the canonical
    /// ordering: score descending, ties by doc id descending, ranks 1..n.
    pub fn from_scores<T, D>(run_id: &str, rankings: Vec<(T, Vec<(D, f64)>)>) -> Result<Run>
    where
        T: Into<String>,
        D: Into<String>,
    {
        let mut map = BTreeMap::new();
        for (topic, docs) in rankings {
            let topic = topic.into();
            let mut seen = std::collections::BTreeSet::new();
            let mut list: Vec<RankedDoc> = Vec::with_capacity(docs.len());
            for (doc, score) in docs {
                let doc = doc.into();
                if !seen.insert(doc.clone()) {
                    return Err(Error::DuplicateDoc { topic, doc });
                }
                list.push(RankedDoc {
                    doc_id: doc,
                    rank: 0,
                    score,
                });
            }
            canonical_order(&mut list);
            map.insert(topic, list);
        }
        Ok(Run {
            run_id: run_id.to_string(),
            rankings: map,
        })
    }

    /// Parses the 6-column run format. The tag column names the run and must
    /// be identical on every line.
    pub fn parse(text: &str) -> Result<Run> {
        let mut run_id: Option<String> = None;
        let mut raw: BTreeMap<String, Vec<(String, f64)>> = BTreeMap::new();
        let mut seen: std::collections::BTreeSet<(String, String)> = std::collections::BTreeSet::new();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = line.trim_end_matches('\r');
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 6 {
                return Err(Error::Malformed {
                    line: line_no,
                    msg: format!("expected 6 fields, got {}", fields.len()),
                });
            }
            let topic = fields[0].to_string();
            let doc = fields[2].to_string();
            fields[3].parse::<u32>().map_err(|_| Error::Malformed {
                line: line_no,
                msg: format!("rank '{}' is not a positive integer", fields[3]),
            })?;
            let score: f64 = fields[4].parse().map_err(|_| Error::Malformed {
                line: line_no,
                msg: format!("score '{}' is not a number", fields[4]),
            })?;
            if !score.is_finite() {
                return Err(Error::Malformed {
                    line: line_no,
                    msg: format!("score '{}' is not finite", fields[4]),
                });
            }
            let tag = fields[5];
            match &run_id {
                None => run_id = Some(tag.to_string()),
                Some(expected) if expected != tag => {
                    return Err(Error::InconsistentTag {
                        line: line_no,
                        found: tag.to_string(),
                        expected: expected.clone(),
                    });
                }
                _ => {}
            }
            if !seen.insert((topic.clone(), doc.clone())) {
                return Err(Error::DuplicateDoc { topic, doc });
            }
            raw.entry(topic).or_default().push((doc, score));
        }
        let run_id = run_id.ok_or(Error::Malformed {
            line: 0,
            msg: "empty run file".into(),
        })?;
        Run::from_scores(&run_id, raw.into_iter().collect())
    }

    /// Serializes in the canonical order; `parse(serialize(r)) == r`.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for (topic, docs) in &self.rankings {
            for d in docs {
                out.push_str(&format!(
                    "{} Q0 {} {} {} {}\n",
                    topic, d.doc_id, d.rank, d.score, self.run_id
                ));
            }
        }
        out
    }

    pub fn run_id(&self) -> &str {
        &self.run_id
    }

    pub fn topics(&self) -> impl Iterator<Item = &str> {
        self.rankings.keys().map(String::as_str)
    }

    pub fn n_topics(&self) -> usize {
        self.rankings.len()
    }

    /// Ranked documents for one topic, ascending by rank.
    pub fn ranking(&self, topic: &str) -> Option<&[RankedDoc]> {
        self.rankings.get(topic).map(Vec::as_slice)
    }

    /// Doc ids of one topic in rank order.
    pub fn doc_ids(&self, topic: &str) -> Option<Vec<&str>> {
        self.rankings
            .get(topic)
            .map(|v| v.iter().map(|d| d.doc_id.as_str()).collect())
    }
}

/// Score descending, doc id descending on ties, ranks rewritten 1..n.
fn canonical_order(list: &mut [RankedDoc]) {
    list.sort_by(|a, b| {
        b.score
            .partial_cmp(&a.score)
            .unwrap()
            .then_with(|| b.doc_id.cmp(&a.doc_id))
    });
    for (i, d) in list.iter_mut().enumerate() {
        d.rank = (i + 1) as u32;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_two_line_run() {
        let run = Run::parse("0001 Q0 dA 1 9.5 X\n0001 Q0 dB 2 8.0 X").unwrap();
        assert_eq!(run.run_id(), "X");
        assert_eq!(run.doc_ids("0001").unwrap(), vec!["dA", "dB"]);
        let docs = run.ranking("0001").unwrap();
        assert_eq!(docs[0].rank, 1);
        assert_eq!(docs[1].rank, 2);
    }

    #[test]
    fn rejects_five_field_line() {
        let err = Run::parse("0001 Q0 dA 1 9.5").unwrap_err();
        match err {
            Error::Malformed { line, .. } => assert_eq!(line, 1),
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn rejects_duplicate_doc_in_topic() {
        let err = Run::parse("0001 Q0 dA 1 9.5 X\n0001 Q0 dA 2 8.0 X").unwrap_err();
        assert!(matches!(err, Error::DuplicateDoc { .. }));
    }

    #[test]
    fn rejects_inconsistent_tag() {
        let err = Run::parse("0001 Q0 dA 1 9.5 X\n0001 Q0 dB 2 8.0 Y").unwrap_err();
        assert!(matches!(err, Error::InconsistentTag { line: 2, .. }));
    }

    #[test]
    fn reranks_by_score_with_docid_desc_ties() {
        // dB and dC tie on score: dC (descending id) comes first.
        let run = Run::parse(
            "0001 Q0 dB 1 5.0 X\n0001 Q0 dC 2 5.0 X\n0001 Q0 dA 3 9.0 X",
        )
        .unwrap();
        assert_eq!(run.doc_ids("0001").unwrap(), vec!["dA", "dC", "dB"]);
    }

    #[test]
    fn tolerates_crlf_and_blank_lines() {
        let run = Run::parse("0001 Q0 dA 1 9.5 X\r\n\r\n0001 Q0 dB 2 8.0 X\n").unwrap();
        assert_eq!(run.doc_ids("0001").unwrap().len(), 2);
    }

    #[test]
    fn roundtrips() {
        let text = "0001 Q0 dA 1 9.5 X\n0001 Q0 dB 2 8 X\n0002 Q0 dC 1 1.25 X\n";
        let run = Run::parse(text).unwrap();
        let reparsed = Run::parse(&run.serialize()).unwrap();
        assert_eq!(run, reparsed);
    }
}
