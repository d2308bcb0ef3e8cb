use crate::catalog::TaskId;

/// Errors surfaced across the pipeline.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unknown task id `{0}`")]
    UnknownTask(String),

    #[error("size {size} is not admitted for task {task} (admitted: {admitted:?})")]
    SizeNotAdmitted {
        task: TaskId,
        size: usize,
        admitted: Vec<usize>,
    },

    #[error("malformed payload for task {task}: {reason}")]
    MalformedPayload { task: TaskId, reason: String },

    #[error("task {0} has no independent brute-force oracle")]
    NoBruteForceOracle(TaskId),

    #[error("task {task} has no {mode} template")]
    NoTemplate { task: TaskId, mode: &'static str },

    #[error("template for {task}.{mode} left placeholders unsubstituted: {leftover}")]
    UnsubstitutedPlaceholder {
        task: TaskId,
        mode: &'static str,
        leftover: String,
    },

    #[error("keyword task input outside the admitted grid: {0}")]
    KeywordGrid(String),

    #[error("backend configuration invalid: {0}")]
    BadBackendConfig(String),

    #[error("replay cache miss for prompt hash {0}")]
    ReplayCacheMiss(String),

    #[error("backend authentication failure: {0}")]
    Auth(String),

    #[error("backend request failed after retries: {0}")]
    Backend(String),

    #[error("suite rejected: {0}")]
    BadSuite(String),

    #[error("score input mismatch: {0}")]
    ScoreInput(String),

    #[error("manifest invalid: {0}")]
    BadManifest(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("serialization: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
