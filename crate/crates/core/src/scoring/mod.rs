//! Final / Intermediate / Process accuracy scoring.
//!
//! - Final accuracy: the extracted last-line value equals gold under the
//!   task's comparison mode.
//! - Intermediate accuracy (trace-scored tasks): the extracted snapshot
//!   sequence equals the gold trace in full.
//! - Process accuracy: mean over instances of
//!   `len(correct prefix) / max(len(pred), len(gold))`.

mod extract;

pub use extract::{extract_final, extract_trace, ExtractionFailure};

use serde::{Deserialize, Serialize};

use crate::catalog::{spec, Instance, StepTrace, TaskId};
use crate::prompt::PromptMode;
use crate::value::Answer;

/// Compares a predicted final answer against gold under the task's
/// comparison mode. A kind mismatch is incorrect.
pub fn compare_final(task: TaskId, predicted: &Answer, gold: &Answer) -> bool {
    predicted.matches(gold, spec(task).compare_mode)
}

/// Ratio of the correct intermediate-sequence prefix:
/// `len(lcp) / max(len(pred), len(gold))`; two empty traces agree
/// vacuously (ratio 1).
pub fn process_ratio(pred: &StepTrace, gold: &StepTrace) -> f64 {
    if pred.is_empty() && gold.is_empty() {
        return 1.0;
    }
    let lcp = pred
        .iter()
        .zip(gold)
        .take_while(|(p, g)| p.same_as(g))
        .count();
    lcp as f64 / pred.len().max(gold.len()) as f64
}

/// Per-instance scoring outcome.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceScore {
    pub final_correct: bool,
    pub extraction_failed: bool,
    /// `None` for tasks without a designated trace variable.
    pub intermediate_correct: Option<bool>,
    /// `None` for tasks without a designated trace variable.
    pub process: Option<f64>,
}

/// Scores one response against its instance. Extraction failures score 0
/// on the final metric and contribute an empty predicted trace.
pub fn score_response(instance: &Instance, response_text: &str) -> InstanceScore {
    let task = instance.task_id;
    let (final_correct, extraction_failed) = match extract_final(task, response_text) {
        Ok(answer) => (compare_final(task, &answer, &instance.gold_answer), false),
        Err(_) => (false, true),
    };
    let (intermediate_correct, process) = if spec(task).trace_var.is_some() {
        let pred = extract_trace(task, response_text).unwrap_or_default();
        let gold = &instance.gold_trace;
        let equal = pred.len() == gold.len()
            && pred.iter().zip(gold).all(|(p, g)| p.same_as(g));
        (Some(equal), Some(process_ratio(&pred, gold)))
    } else {
        (None, None)
    };
    InstanceScore {
        final_correct,
        extraction_failed,
        intermediate_correct,
        process,
    }
}

/// One scored response, ready for aggregation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScoredResponse {
    pub task_id: TaskId,
    pub mode: PromptMode,
    pub score: InstanceScore,
}

/// Accuracy row for one `(task, mode)` cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub task_id: TaskId,
    pub mode: PromptMode,
    pub n_instances: usize,
    pub n_extraction_failures: usize,
    pub final_acc: f64,
    pub intermediate_acc: Option<f64>,
    pub process_acc: Option<f64>,
}

/// Score report over a suite, one row per `(task, mode)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreReport {
    pub rows: Vec<ReportRow>,
}

/// Folds scored responses into a report. Means are order-independent, so
/// records may arrive in any order.
pub fn aggregate(scored: &[ScoredResponse]) -> ScoreReport {
    let mut groups: std::collections::BTreeMap<(usize, PromptMode), Vec<&InstanceScore>> =
        std::collections::BTreeMap::new();
    for s in scored {
        let order = TaskId::ALL
            .iter()
            .position(|t| *t == s.task_id)
            .expect("registered task");
        groups.entry((order, s.mode)).or_default().push(&s.score);
    }
    let rows = groups
        .into_iter()
        .map(|((order, mode), scores)| {
            let n = scores.len();
            let mean = |items: Vec<f64>| items.iter().sum::<f64>() / items.len() as f64;
            let trace_scored: Vec<&&InstanceScore> = scores
                .iter()
                .filter(|s| s.intermediate_correct.is_some())
                .collect();
            ReportRow {
                task_id: TaskId::ALL[order],
                mode,
                n_instances: n,
                n_extraction_failures: scores.iter().filter(|s| s.extraction_failed).count(),
                final_acc: mean(
                    scores
                        .iter()
                        .map(|s| if s.final_correct { 1.0 } else { 0.0 })
                        .collect(),
                ),
                intermediate_acc: (!trace_scored.is_empty()).then(|| {
                    mean(
                        trace_scored
                            .iter()
                            .map(|s| if s.intermediate_correct == Some(true) { 1.0 } else { 0.0 })
                            .collect(),
                    )
                }),
                process_acc: (!trace_scored.is_empty()).then(|| {
                    mean(trace_scored.iter().map(|s| s.process.unwrap_or(0.0)).collect())
                }),
            }
        })
        .collect();
    ScoreReport { rows }
}

impl ScoreReport {
    /// Plain-text table mirroring the Final / Interm. / Proc. column
    /// layout.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:<30} {:<5} {:>4} {:>7} {:>8} {:>7} {:>6}\n",
            "Task", "Mode", "N", "Final", "Interm.", "Proc.", "Fail"
        ));
        for row in &self.rows {
            let pct = |x: f64| format!("{:.1}", x * 100.0);
            let opt = |x: Option<f64>| x.map(pct).unwrap_or_else(|| "-".to_string());
            out.push_str(&format!(
                "{:<30} {:<5} {:>4} {:>7} {:>8} {:>7} {:>6}\n",
                row.task_id.as_str(),
                row.mode.as_str(),
                row.n_instances,
                pct(row.final_acc),
                opt(row.intermediate_acc),
                opt(row.process_acc),
                row.n_extraction_failures
            ));
        }
        out
    }
}
