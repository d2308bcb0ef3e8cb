//! Dispatches rendered prompts to a model backend and persists run
//! records. The HTTP backend speaks a chat-completions-style JSON POST and
//! caches one file per prompt hash; the replay backend serves only from
//! that cache; oracle-echo and the mutator are offline synthetic backends.

pub mod echo;
mod http;

pub use http::API_KEY_ENV;

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::catalog::{self, Instance, TaskId};
use crate::error::{Error, Result};
use crate::prompt::{PromptMode, RenderedPrompt, TemplateSet};
use crate::rng::derive_seed;
use crate::scoring;

/// Kind of model backend.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BackendKind {
    Http,
    Replay,
    OracleEcho,
    Mutator,
}

/// Backend configuration. The temperature is pinned to 0; any other value
/// is refused.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BackendConfig {
    pub kind: BackendKind,
    #[serde(default)]
    pub endpoint_url: String,
    #[serde(default = "default_model")]
    pub model_name: String,
    #[serde(default)]
    pub temperature: f64,
    #[serde(default = "default_timeout")]
    pub request_timeout_secs: u64,
    #[serde(default = "default_parallel")]
    pub max_parallel: usize,
    #[serde(default)]
    pub cache_dir: Option<PathBuf>,
    /// Mutator backend: 0-based index of the snapshot to corrupt; when
    /// absent the index is derived from the instance seed.
    #[serde(default)]
    pub mutate_snapshot: Option<usize>,
}

fn default_model() -> String {
    "oracle-echo".to_string()
}
fn default_timeout() -> u64 {
    120
}
fn default_parallel() -> usize {
    1
}

impl BackendConfig {
    pub fn offline(kind: BackendKind) -> Self {
        Self {
            kind,
            endpoint_url: String::new(),
            model_name: default_model(),
            temperature: 0.0,
            request_timeout_secs: default_timeout(),
            max_parallel: 1,
            cache_dir: None,
            mutate_snapshot: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.temperature != 0.0 {
            return Err(Error::BadBackendConfig(format!(
                "temperature must be 0, got {}",
                self.temperature
            )));
        }
        if self.max_parallel < 1 {
            return Err(Error::BadBackendConfig("max_parallel must be >= 1".into()));
        }
        if matches!(self.kind, BackendKind::Http) && self.endpoint_url.is_empty() {
            return Err(Error::BadBackendConfig(
                "http backend needs endpoint_url".into(),
            ));
        }
        if matches!(self.kind, BackendKind::Replay) && self.cache_dir.is_none() {
            return Err(Error::BadBackendConfig("replay backend needs cache_dir".into()));
        }
        Ok(())
    }
}

/// Token usage and model identity as reported by the backend.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct BackendMeta {
    pub model_name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prompt_tokens: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub completion_tokens: Option<u64>,
}

/// A backend completion.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BackendResponse {
    pub text: String,
    pub meta: BackendMeta,
    /// The backend reported a length stop.
    pub length_stop: bool,
}

/// A model backend; implementations must be callable from worker threads.
pub trait Backend: Sync {
    fn complete(&self, instance: &Instance, prompt: &RenderedPrompt) -> Result<BackendResponse>;
    /// True when a repeated call would be served without a network request.
    fn cached(&self, prompt: &RenderedPrompt) -> bool {
        let _ = prompt;
        true
    }
}

/// One persisted (instance, prompt, response) tuple.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunRecord {
    /// Schema version.
    pub v: u32,
    pub task_id: TaskId,
    pub seed: u64,
    pub size: usize,
    pub mode: PromptMode,
    pub prompt_hash: String,
    pub response_text: String,
    pub backend_meta: BackendMeta,
    pub wall_secs: f64,
    pub truncated: bool,
}

pub const RECORD_SCHEMA_VERSION: u32 = 1;

/// Content digest of a prompt body.
pub fn prompt_hash(body: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(body.as_bytes());
    format!("{:x}", hasher.finalize())
}

struct EchoBackend {
    mutate: Option<usize>,
    model: String,
}

impl Backend for EchoBackend {
    fn complete(&self, instance: &Instance, _prompt: &RenderedPrompt) -> Result<BackendResponse> {
        let text = match self.mutate {
            None => echo::oracle_response(instance),
            Some(k) => echo::mutated_response(instance, k),
        };
        Ok(BackendResponse {
            text,
            meta: BackendMeta {
                model_name: self.model.clone(),
                prompt_tokens: None,
                completion_tokens: None,
            },
            length_stop: false,
        })
    }
}

struct SeededMutator {
    model: String,
}

impl Backend for SeededMutator {
    fn complete(&self, instance: &Instance, _prompt: &RenderedPrompt) -> Result<BackendResponse> {
        let len = instance.gold_trace.len().max(1);
        let k = (instance.seed % len as u64) as usize;
        Ok(BackendResponse {
            text: echo::mutated_response(instance, k),
            meta: BackendMeta {
                model_name: self.model.clone(),
                prompt_tokens: None,
                completion_tokens: None,
            },
            length_stop: false,
        })
    }
}

/// Builds the backend for `config`.
pub fn backend_for(config: &BackendConfig) -> Result<Box<dyn Backend>> {
    config.validate()?;
    Ok(match config.kind {
        BackendKind::OracleEcho => Box::new(EchoBackend {
            mutate: None,
            model: config.model_name.clone(),
        }),
        BackendKind::Mutator => match config.mutate_snapshot {
            Some(k) => Box::new(EchoBackend {
                mutate: Some(k),
                model: config.model_name.clone(),
            }),
            None => Box::new(SeededMutator {
                model: config.model_name.clone(),
            }),
        },
        BackendKind::Http => Box::new(http::HttpBackend::new(config)?),
        BackendKind::Replay => Box::new(http::ReplayBackend::new(config)?),
    })
}

/// Submits one prompt and assembles the run record. The `truncated` flag is
/// set on a backend length stop or when no final-answer line is
/// extractable.
pub fn submit(
    instance: &Instance,
    prompt: &RenderedPrompt,
    backend: &dyn Backend,
) -> Result<RunRecord> {
    let started = std::time::Instant::now();
    let response = backend.complete(instance, prompt)?;
    let truncated = response.length_stop
        || scoring::extract_final(instance.task_id, &response.text).is_err();
    Ok(RunRecord {
        v: RECORD_SCHEMA_VERSION,
        task_id: instance.task_id,
        seed: instance.seed,
        size: instance.size,
        mode: prompt.mode,
        prompt_hash: prompt_hash(&prompt.body),
        response_text: response.text,
        backend_meta: response.meta,
        wall_secs: started.elapsed().as_secs_f64(),
        truncated,
    })
}

/// A (task, seed) pair whose submission failed, with the error text.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteFailure {
    pub task_id: TaskId,
    pub mode: PromptMode,
    pub seed: u64,
    pub error: String,
}

/// Outcome of a suite run.
#[derive(Debug)]
pub struct SuiteOutcome {
    pub records: Vec<RunRecord>,
    pub failures: Vec<SuiteFailure>,
    /// Completions served without a backend call (resume hits).
    pub skipped_existing: usize,
}

/// Generates instances with consecutive index-derived seeds, renders both
/// requested modes, submits with at most `max_parallel` in-flight requests
/// and persists records append-only to `records_path`. Interrupted suites
/// resume: (task, mode, seed, size) tuples already on disk are not
/// re-submitted.
pub fn run_suite(
    tasks: &[TaskId],
    modes: &[PromptMode],
    instances_per_task: usize,
    master_seed: u64,
    config: &BackendConfig,
    templates: &TemplateSet,
    records_path: &Path,
) -> Result<SuiteOutcome> {
    let backend = backend_for(config)?;
    run_suite_with(
        tasks,
        modes,
        instances_per_task,
        master_seed,
        backend.as_ref(),
        config.max_parallel,
        templates,
        records_path,
    )
}

/// [`run_suite`] with an explicit backend, for instrumented tests.
#[allow(clippy::too_many_arguments)]
pub fn run_suite_with(
    tasks: &[TaskId],
    modes: &[PromptMode],
    instances_per_task: usize,
    master_seed: u64,
    backend: &dyn Backend,
    max_parallel: usize,
    templates: &TemplateSet,
    records_path: &Path,
) -> Result<SuiteOutcome> {
    if instances_per_task == 0 {
        return Err(Error::BadSuite("instances_per_task must be >= 1".into()));
    }
    if tasks.is_empty() || modes.is_empty() {
        return Err(Error::BadSuite("empty task or mode selection".into()));
    }

    let existing = if records_path.exists() {
        read_records(records_path)?
    } else {
        Vec::new()
    };
    let mut done: std::collections::BTreeSet<(TaskId, PromptMode, u64, usize)> =
        std::collections::BTreeSet::new();
    for r in &existing {
        done.insert((r.task_id, r.mode, r.seed, r.size));
    }

    // work items in deterministic order
    let mut work: Vec<(Instance, RenderedPrompt)> = Vec::new();
    let mut skipped_existing = 0usize;
    for &task in tasks {
        for idx in 0..instances_per_task {
            let instance = suite_instance(task, master_seed, idx)?;
            for &mode in modes {
                if task == TaskId::KeywordIteration && mode == PromptMode::Code {
                    continue; // no code analogue
                }
                if done.contains(&(task, mode, instance.seed, instance.size)) {
                    skipped_existing += 1;
                    continue;
                }
                let prompt = templates.render(&instance, mode)?;
                work.push((instance.clone(), prompt));
            }
        }
    }

    if let Some(parent) = records_path.parent() {
        std::fs::create_dir_all(parent)?;
    }
    let file = std::fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(records_path)?;
    let writer = Mutex::new(std::io::BufWriter::new(file));

    let queue = Mutex::new(work.into_iter());
    let results: Mutex<Vec<RunRecord>> = Mutex::new(Vec::new());
    let failures: Mutex<Vec<SuiteFailure>> = Mutex::new(Vec::new());

    std::thread::scope(|scope| {
        for _ in 0..max_parallel.max(1) {
            scope.spawn(|| loop {
                let item = queue.lock().expect("queue lock").next();
                let Some((instance, prompt)) = item else {
                    break;
                };
                match submit(&instance, &prompt, backend) {
                    Ok(record) => {
                        let mut w = writer.lock().expect("writer lock");
                        let line = serde_json::to_string(&record).expect("record serializes");
                        writeln!(w, "{line}").expect("record write");
                        drop(w);
                        results.lock().expect("results lock").push(record);
                    }
                    Err(e) => failures.lock().expect("failures lock").push(SuiteFailure {
                        task_id: instance.task_id,
                        mode: prompt.mode,
                        seed: instance.seed,
                        error: e.to_string(),
                    }),
                }
            });
        }
    });
    writer
        .into_inner()
        .expect("writer lock")
        .flush()?;

    let mut records = existing;
    let mut new_records = results.into_inner().expect("results lock");
    // deterministic record order for callers
    new_records.sort_by_key(|r| {
        (
            TaskId::ALL.iter().position(|t| *t == r.task_id),
            r.mode,
            r.seed,
        )
    });
    records.extend(new_records);
    Ok(SuiteOutcome {
        records,
        failures: failures.into_inner().expect("failures lock"),
        skipped_existing,
    })
}

/// The instance for suite index `idx` of `task`: sizes rotate through the
/// admitted list and the seed is split from the master seed. The keyword
/// task instead walks the 20-word x 5-count grid, which 100 consecutive
/// indices cover exactly once.
pub fn suite_instance(task: TaskId, master_seed: u64, idx: usize) -> Result<Instance> {
    let sizes = catalog::spec(task).sizes;
    if task == TaskId::KeywordIteration {
        let size = sizes[idx % sizes.len()];
        let seed = (idx / sizes.len()) as u64;
        return catalog::sample_instance(task, size, seed);
    }
    let size = sizes[idx % sizes.len()];
    let seed = derive_seed(master_seed, task.as_str(), size as u64, idx as u64);
    catalog::sample_instance(task, size, seed)
}

/// Reads a JSONL record file.
pub fn read_records(path: &Path) -> Result<Vec<RunRecord>> {
    let text = std::fs::read_to_string(path)?;
    let mut out = Vec::new();
    for line in text.lines() {
        if line.trim().is_empty() {
            continue;
        }
        out.push(serde_json::from_str(line)?);
    }
    Ok(out)
}
