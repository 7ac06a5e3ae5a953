//! Topics × systems score matrices, the input to every statistic.

use crate::error::{Error, Result};
use crate::trec::tsv::format_fixed;

/// Fully populated per-topic score matrix (row-major, topics × systems).
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreMatrix {
    topics: Vec<String>,
    systems: Vec<String>,
    cells: Vec<f64>,
}

impl ScoreMatrix {
    pub fn new(topics: Vec<String>, systems: Vec<String>, cells: Vec<f64>) -> Result<ScoreMatrix> {
        if cells.len() != topics.len() * systems.len() {
            return Err(Error::Degenerate {
                msg: format!(
                    "matrix has {} cells, expected {}x{}",
                    cells.len(),
                    topics.len(),
                    systems.len()
                ),
            });
        }
        if has_duplicates(&topics) || has_duplicates(&systems) {
            return Err(Error::Degenerate {
                msg: "duplicate row or column label".into(),
            });
        }
        if cells.iter().any(|c| !c.is_finite()) {
            return Err(Error::Degenerate {
                msg: "non-finite cell".into(),
            });
        }
        Ok(ScoreMatrix {
            topics,
            systems,
            cells,
        })
    }

    pub fn n_topics(&self) -> usize {
        self.topics.len()
    }

    pub fn n_systems(&self) -> usize {
        self.systems.len()
    }

    pub fn topics(&self) -> &[String] {
        &self.topics
    }

    pub fn systems(&self) -> &[String] {
        &self.systems
    }

    pub fn get(&self, topic_idx: usize, system_idx: usize) -> f64 {
        self.cells[topic_idx * self.systems.len() + system_idx]
    }

    /// One topic's scores across systems.
    pub fn row(&self, topic_idx: usize) -> &[f64] {
        let m = self.systems.len();
        &self.cells[topic_idx * m..(topic_idx + 1) * m]
    }

    /// One system's per-topic scores.
    pub fn column(&self, system_idx: usize) -> Vec<f64> {
        (0..self.topics.len())
            .map(|t| self.get(t, system_idx))
            .collect()
    }

    pub fn column_by_name(&self, system: &str) -> Option<Vec<f64>> {
        self.systems
            .iter()
            .position(|s| s == system)
            .map(|i| self.column(i))
    }

    pub fn column_mean(&self, system_idx: usize) -> f64 {
        let n = self.topics.len();
        let sum: f64 = (0..n).map(|t| self.get(t, system_idx)).sum();
        sum / n as f64
    }

    pub fn system_means(&self) -> Vec<f64> {
        (0..self.systems.len()).map(|s| self.column_mean(s)).collect()
    }

    /// TSV with a `topic` label column and 6-decimal cells.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("topic");
        for s in &self.systems {
            out.push('\t');
            out.push_str(s);
        }
        out.push('\n');
        for (t, topic) in self.topics.iter().enumerate() {
            out.push_str(topic);
            for s in 0..self.systems.len() {
                out.push('\t');
                out.push_str(&format_fixed(self.get(t, s), 6));
            }
            out.push('\n');
        }
        out
    }

    pub fn parse_tsv(text: &str) -> Result<ScoreMatrix> {
        let mut lines = text
            .lines()
            .map(|l| l.trim_end_matches('\r'))
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'));
        let (_, header) = lines.next().ok_or(Error::Malformed {
            line: 0,
            msg: "empty matrix".into(),
        })?;
        let mut cols = header.split('\t');
        let first = cols.next().unwrap_or_default();
        if first != "topic" {
            return Err(Error::Malformed {
                line: 1,
                msg: format!("matrix header must start with 'topic', got '{first}'"),
            });
        }
        let systems: Vec<String> = cols.map(str::to_string).collect();
        let mut topics = Vec::new();
        let mut cells = Vec::new();
        for (idx, line) in lines {
            let line_no = idx + 1;
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != systems.len() + 1 {
                return Err(Error::Malformed {
                    line: line_no,
                    msg: format!(
                        "expected {} columns, got {}",
                        systems.len() + 1,
                        fields.len()
                    ),
                });
            }
            topics.push(fields[0].to_string());
            for f in &fields[1..] {
                let v: f64 = f.parse().map_err(|_| Error::Malformed {
                    line: line_no,
                    msg: format!("invalid score '{f}'"),
                })?;
                cells.push(v);
            }
        }
        ScoreMatrix::new(topics, systems, cells)
    }
}

fn has_duplicates(items: &[String]) -> bool {
    let set: std::collections::BTreeSet<&String> = items.iter().collect();
    set.len() != items.len()
}
