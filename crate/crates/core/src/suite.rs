//! Reproducible suites: a manifest fully determines instance sets,
//! prompts, run records and score reports.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::catalog::{self, TaskId};
use crate::error::{Error, Result};
use crate::harness::{self, BackendConfig, RunRecord, SuiteOutcome};
use crate::prompt::{PromptMode, TemplateSet};
use crate::scoring::{self, ReportRow, ScoreReport, ScoredResponse};

/// Everything needed to reproduce a suite byte-for-byte.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteManifest {
    pub master_seed: u64,
    /// Task ids, or the groups `all`, `clrs_mini`, `clrs_numeric`.
    pub tasks: Vec<String>,
    /// `nl`, `code` or both.
    pub modes: Vec<String>,
    pub instances_per_task: usize,
    pub output_dir: PathBuf,
    pub backend: BackendConfig,
    /// Optional template directory override.
    #[serde(default)]
    pub templates_dir: Option<PathBuf>,
}

impl SuiteManifest {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::BadManifest(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_toml(&std::fs::read_to_string(path)?)
    }

    pub fn resolve_tasks(&self) -> Result<Vec<TaskId>> {
        let mut out: Vec<TaskId> = Vec::new();
        let add = |task: TaskId, out: &mut Vec<TaskId>| {
            if !out.contains(&task) {
                out.push(task);
            }
        };
        for entry in &self.tasks {
            match entry.as_str() {
                "all" => {
                    for t in TaskId::ALL {
                        add(t, &mut out);
                    }
                }
                "clrs_mini" => {
                    for t in TaskId::clrs_mini() {
                        add(t, &mut out);
                    }
                }
                "clrs_numeric" => {
                    for t in TaskId::clrs_numeric() {
                        add(t, &mut out);
                    }
                }
                name => add(TaskId::parse(name)?, &mut out),
            }
        }
        if out.is_empty() {
            return Err(Error::BadManifest("no tasks selected".into()));
        }
        Ok(out)
    }

    pub fn resolve_modes(&self) -> Result<Vec<PromptMode>> {
        let mut out = Vec::new();
        for entry in &self.modes {
            let mode = PromptMode::parse(entry)?;
            if !out.contains(&mode) {
                out.push(mode);
            }
        }
        if out.is_empty() {
            return Err(Error::BadManifest("no modes selected".into()));
        }
        Ok(out)
    }

    pub fn templates(&self) -> Result<TemplateSet> {
        match &self.templates_dir {
            Some(dir) => TemplateSet::with_dir(dir),
            None => Ok(TemplateSet::embedded()),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.instances_per_task == 0 {
            return Err(Error::BadManifest("instances_per_task must be >= 1".into()));
        }
        self.resolve_tasks()?;
        self.resolve_modes()?;
        self.backend.validate()?;
        Ok(())
    }

    pub fn instances_path(&self) -> PathBuf {
        self.output_dir.join("instances.jsonl")
    }

    pub fn prompts_path(&self) -> PathBuf {
        self.output_dir.join("prompts.jsonl")
    }

    pub fn records_path(&self) -> PathBuf {
        self.output_dir.join("records.jsonl")
    }
}

/// All instances of the manifest's suite in deterministic order.
pub fn suite_instances(manifest: &SuiteManifest) -> Result<Vec<catalog::Instance>> {
    let tasks = manifest.resolve_tasks()?;
    let mut out = Vec::new();
    for task in tasks {
        for idx in 0..manifest.instances_per_task {
            out.push(harness::suite_instance(task, manifest.master_seed, idx)?);
        }
    }
    Ok(out)
}

/// Writes `instances.jsonl` (task, seed, size, payload, gold answer and
/// gold trace, one object per line). Returns the instance count.
pub fn generate(manifest: &SuiteManifest) -> Result<usize> {
    manifest.validate()?;
    let instances = suite_instances(manifest)?;
    std::fs::create_dir_all(&manifest.output_dir)?;
    let mut lines = String::new();
    for inst in &instances {
        lines.push_str(&serde_json::to_string(inst)?);
        lines.push('\n');
    }
    std::fs::write(manifest.instances_path(), lines)?;
    Ok(instances.len())
}

/// One rendered prompt as persisted by `render`.
#[derive(Debug, Serialize, Deserialize)]
pub struct PromptRecord {
    pub task_id: TaskId,
    pub seed: u64,
    pub size: usize,
    pub mode: PromptMode,
    pub prompt_hash: String,
    pub body: String,
    pub stop_tokens: Vec<String>,
    pub max_response_tokens: u32,
}

/// Writes `prompts.jsonl` for the manifest's modes (or `only`). Returns the
/// prompt count.
pub fn render(manifest: &SuiteManifest, only: Option<PromptMode>) -> Result<usize> {
    manifest.validate()?;
    let templates = manifest.templates()?;
    let modes = match only {
        Some(mode) => vec![mode],
        None => manifest.resolve_modes()?,
    };
    let instances = suite_instances(manifest)?;
    std::fs::create_dir_all(&manifest.output_dir)?;
    let mut lines = String::new();
    let mut count = 0;
    for inst in &instances {
        for &mode in &modes {
            if inst.task_id == TaskId::KeywordIteration && mode == PromptMode::Code {
                continue;
            }
            let prompt = templates.render(inst, mode)?;
            let record = PromptRecord {
                task_id: inst.task_id,
                seed: inst.seed,
                size: inst.size,
                mode,
                prompt_hash: harness::prompt_hash(&prompt.body),
                body: prompt.body,
                stop_tokens: prompt.stop_tokens,
                max_response_tokens: prompt.max_response_tokens,
            };
            lines.push_str(&serde_json::to_string(&record)?);
            lines.push('\n');
            count += 1;
        }
    }
    std::fs::write(manifest.prompts_path(), lines)?;
    Ok(count)
}

/// Runs the suite against the manifest's backend, persisting records
/// append-only and resuming from existing ones.
pub fn run(manifest: &SuiteManifest) -> Result<SuiteOutcome> {
    manifest.validate()?;
    let tasks = manifest.resolve_tasks()?;
    let modes = manifest.resolve_modes()?;
    let templates = manifest.templates()?;
    std::fs::create_dir_all(&manifest.output_dir)?;
    harness::run_suite(
        &tasks,
        &modes,
        manifest.instances_per_task,
        manifest.master_seed,
        &manifest.backend,
        &templates,
        &manifest.records_path(),
    )
}

/// Scores the records in `run_dir` (instances are regenerated from each
/// record's task, size and seed, which samplers guarantee to reproduce).
pub fn score_run_dir(run_dir: &Path) -> Result<ScoreReport> {
    let records_path = run_dir.join("records.jsonl");
    if !records_path.exists() {
        return Err(Error::ScoreInput(format!(
            "no records.jsonl under {}",
            run_dir.display()
        )));
    }
    let records = harness::read_records(&records_path)?;
    if records.is_empty() {
        return Err(Error::ScoreInput("record file is empty".into()));
    }
    score_records(&records)
}

/// Scores loaded records.
pub fn score_records(records: &[RunRecord]) -> Result<ScoreReport> {
    let mut scored = Vec::with_capacity(records.len());
    for record in records {
        let instance = catalog::sample_instance(record.task_id, record.size, record.seed)?;
        scored.push(ScoredResponse {
            task_id: record.task_id,
            mode: record.mode,
            score: scoring::score_response(&instance, &record.response_text),
        });
    }
    Ok(scoring::aggregate(&scored))
}

/// Writes `score.json` and `score.txt` into `run_dir`.
pub fn write_score(run_dir: &Path, report: &ScoreReport) -> Result<()> {
    std::fs::write(
        run_dir.join("score.json"),
        serde_json::to_string_pretty(report)?,
    )?;
    std::fs::write(run_dir.join("score.txt"), report.to_table())?;
    Ok(())
}

/// Side-by-side comparison of one or more score reports (typically the
/// step-program and code modes), one row per task and a Final / Interm. /
/// Proc. column group per mode.
pub fn comparison_table(reports: &[ScoreReport]) -> Result<String> {
    if reports.is_empty() {
        return Err(Error::ScoreInput("no score reports given".into()));
    }
    // every report must cover the same task set
    let task_set = |report: &ScoreReport| -> std::collections::BTreeSet<TaskId> {
        report.rows.iter().map(|r| r.task_id).collect()
    };
    let tasks_expected = task_set(&reports[0]);
    for report in &reports[1..] {
        if task_set(report) != tasks_expected {
            return Err(Error::ScoreInput(
                "task sets differ between score reports".into(),
            ));
        }
    }
    // collect (mode -> rows) column groups across all reports
    let mut groups: Vec<(PromptMode, std::collections::BTreeMap<TaskId, ReportRow>)> = Vec::new();
    for report in reports {
        for row in &report.rows {
            let group = match groups.iter_mut().find(|(m, _)| *m == row.mode) {
                Some((_, g)) => g,
                None => {
                    groups.push((row.mode, Default::default()));
                    &mut groups.last_mut().unwrap().1
                }
            };
            group.insert(row.task_id, row.clone());
        }
    }
    let tasks: Vec<TaskId> = tasks_expected.into_iter().collect();

    let pct = |x: f64| format!("{:.1}", x * 100.0);
    let opt = |x: Option<f64>| x.map(pct).unwrap_or_else(|| "-".to_string());
    let mut out = String::new();
    out.push_str(&format!("{:<30}", "Task"));
    for (mode, _) in &groups {
        let label = match mode {
            PromptMode::Nl => "Natural Language Prompt",
            PromptMode::Code => "Python Code",
        };
        out.push_str(&format!(" | {:^24}", label));
    }
    out.push('\n');
    out.push_str(&format!("{:<30}", ""));
    for _ in &groups {
        out.push_str(&format!(" | {:>7} {:>8} {:>7}", "Final", "Interm.", "Proc."));
    }
    out.push('\n');
    let ordered: Vec<TaskId> = TaskId::ALL
        .iter()
        .copied()
        .filter(|t| tasks.contains(t))
        .collect();
    for task in ordered {
        out.push_str(&format!("{:<30}", task.as_str()));
        for (_, group) in &groups {
            match group.get(&task) {
                Some(row) => out.push_str(&format!(
                    " | {:>7} {:>8} {:>7}",
                    pct(row.final_acc),
                    opt(row.intermediate_acc),
                    opt(row.process_acc)
                )),
                None => out.push_str(&format!(" | {:>7} {:>8} {:>7}", "-", "-", "-")),
            }
        }
        out.push('\n');
    }
    Ok(out)
}
