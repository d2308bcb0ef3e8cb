//! Task-specific input records.

use serde::{Deserialize, Serialize};

use super::TaskId;
use crate::error::{Error, Result};

/// Task-specific problem input.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Payload {
    /// Plain number list (sorting, minimum, maximum subarray, DFT input).
    Numbers { values: Vec<i64> },
    /// Sorted array plus a search target.
    Search { values: Vec<i64>, target: i64 },
    /// Array plus the 1-based order statistic to select.
    Select { values: Vec<i64>, k: i64 },
    /// Start/finish times, sorted by finish time.
    Activities { starts: Vec<i64>, finishes: Vec<i64> },
    /// Job deadlines and weights plus the maximum time slot index.
    Jobs {
        deadlines: Vec<i64>,
        weights: Vec<i64>,
        slots: i64,
    },
    /// Matrix-chain dimension vector `p`.
    Chain { dims: Vec<i64> },
    /// Optimal-BST key and miss probabilities (two-decimal values).
    Probabilities { p: Vec<f64>, q: Vec<f64> },
    /// Pattern and text over the matching alphabet.
    Strings { pattern: String, text: String },
    /// Two sequences for subsequence comparison.
    StringPair { a: String, b: String },
    /// Adjacency (0/1) or weight matrix, row major.
    Graph { adj: Vec<Vec<i64>> },
    /// Weight-sorted edge list plus vertex count.
    Edges {
        xs: Vec<i64>,
        ys: Vec<i64>,
        ws: Vec<i64>,
        vertices: usize,
    },
    /// Point coordinates (two-decimal values).
    Points { xs: Vec<f64>, ys: Vec<f64> },
    /// Integer x/y series for regression.
    Series { xs: Vec<i64>, ys: Vec<i64> },
    /// Bracket string over `()[]{}`.
    Brackets { chars: String },
    /// Initial keyword plus iteration count.
    Keyword { word: String, iterations: usize },
}

impl Payload {
    /// Checks dimensional well-formedness for `task`.
    pub fn validate(&self, task: TaskId) -> Result<()> {
        let fail = |reason: &str| {
            Err(Error::MalformedPayload {
                task,
                reason: reason.to_string(),
            })
        };
        match self {
            Payload::Numbers { values } => {
                if values.is_empty() {
                    return fail("empty value list");
                }
            }
            Payload::Search { values, .. } => {
                if values.is_empty() {
                    return fail("empty array");
                }
                if values.windows(2).any(|w| w[0] > w[1]) {
                    return fail("search array must be sorted");
                }
            }
            Payload::Select { values, k } => {
                if values.is_empty() || *k < 1 || *k > values.len() as i64 {
                    return fail("selection rank out of range");
                }
            }
            Payload::Activities { starts, finishes } => {
                if starts.len() != finishes.len() || starts.is_empty() {
                    return fail("start/finish arrays must be equal-length and non-empty");
                }
                if finishes.windows(2).any(|w| w[0] > w[1]) {
                    return fail("finish times must be non-decreasing");
                }
            }
            Payload::Jobs {
                deadlines, weights, ..
            } => {
                if deadlines.len() != weights.len() || deadlines.is_empty() {
                    return fail("deadline/weight arrays must be equal-length and non-empty");
                }
            }
            Payload::Chain { dims } => {
                if dims.len() < 2 {
                    return fail("dimension vector needs at least two entries");
                }
            }
            Payload::Probabilities { p, q } => {
                if q.len() != p.len() + 1 || p.is_empty() {
                    return fail("q must be one longer than p");
                }
            }
            Payload::Strings { pattern, text } => {
                if pattern.is_empty() || text.len() < pattern.len() {
                    return fail("pattern must be non-empty and no longer than text");
                }
            }
            Payload::StringPair { a, b } => {
                if a.is_empty() || b.is_empty() {
                    return fail("both sequences must be non-empty");
                }
            }
            Payload::Graph { adj } => {
                let n = adj.len();
                if n == 0 || adj.iter().any(|row| row.len() != n) {
                    return fail("adjacency matrix must be square and non-empty");
                }
            }
            Payload::Edges {
                xs,
                ys,
                ws,
                vertices,
            } => {
                if xs.len() != ys.len() || xs.len() != ws.len() {
                    return fail("edge arrays must be equal-length");
                }
                if *vertices == 0 {
                    return fail("vertex count must be positive");
                }
                let v = *vertices as i64;
                if xs.iter().chain(ys).any(|&e| e < 0 || e >= v) {
                    return fail("edge endpoint out of range");
                }
                if ws.windows(2).any(|w| w[0] > w[1]) {
                    return fail("edge weights must be non-decreasing");
                }
            }
            Payload::Points { xs, ys } => {
                if xs.len() != ys.len() || xs.len() < 3 {
                    return fail("need at least three points");
                }
            }
            Payload::Series { xs, ys } => {
                if xs.len() != ys.len() || xs.len() < 2 {
                    return fail("need at least two samples");
                }
                if xs.iter().all(|&x| x == xs[0]) {
                    return fail("x values must not all be equal");
                }
            }
            Payload::Brackets { chars } => {
                if chars.is_empty() || !chars.chars().all(|c| "()[]{}".contains(c)) {
                    return fail("bracket string must be non-empty over ()[]{}");
                }
            }
            Payload::Keyword { word, iterations } => {
                if !super::KEYWORDS.contains(&word.as_str()) {
                    return Err(Error::KeywordGrid(format!("unknown keyword `{word}`")));
                }
                if !matches!(iterations, 5 | 10 | 15 | 20 | 25) {
                    return Err(Error::KeywordGrid(format!(
                        "iteration count {iterations} not in {{5,10,15,20,25}}"
                    )));
                }
            }
        }
        Ok(())
    }
}
