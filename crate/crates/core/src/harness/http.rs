//! Chat-completions HTTP backend with a file-per-prompt response cache,
//! plus the cache-only replay backend.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use serde_json::json;

use super::{prompt_hash, Backend, BackendConfig, BackendMeta, BackendResponse};
use crate::catalog::Instance;
use crate::error::{Error, Result};
use crate::prompt::RenderedPrompt;

/// Environment variable holding the API credential.
pub const API_KEY_ENV: &str = "STEPBENCH_API_KEY";

const RETRIES: u32 = 3;
const BACKOFF_BASE_MS: u64 = 200;

/// One cached exchange, inspectable and diff-able.
#[derive(Debug, Serialize, Deserialize)]
struct CacheEntry {
    request: serde_json::Value,
    prompt: String,
    response_text: String,
    meta: BackendMeta,
    length_stop: bool,
}

fn cache_path(dir: &std::path::Path, model: &str, hash: &str) -> PathBuf {
    dir.join(model.replace('/', "_")).join(format!("{hash}.json"))
}

fn cache_lookup(
    dir: Option<&PathBuf>,
    model: &str,
    prompt: &RenderedPrompt,
) -> Option<BackendResponse> {
    let dir = dir?;
    let path = cache_path(dir, model, &prompt_hash(&prompt.body));
    let text = std::fs::read_to_string(path).ok()?;
    let entry: CacheEntry = serde_json::from_str(&text).ok()?;
    Some(BackendResponse {
        text: entry.response_text,
        meta: entry.meta,
        length_stop: entry.length_stop,
    })
}

pub struct HttpBackend {
    client: reqwest::blocking::Client,
    endpoint: String,
    model: String,
    api_key: String,
    cache_dir: Option<PathBuf>,
}

impl HttpBackend {
    pub fn new(config: &BackendConfig) -> Result<Self> {
        let api_key = std::env::var(API_KEY_ENV)
            .map_err(|_| Error::Auth(format!("{API_KEY_ENV} is not set")))?;
        let client = reqwest::blocking::Client::builder()
            .timeout(std::time::Duration::from_secs(config.request_timeout_secs))
            .build()
            .map_err(|e| Error::Backend(e.to_string()))?;
        Ok(Self {
            client,
            endpoint: config.endpoint_url.clone(),
            model: config.model_name.clone(),
            api_key,
            cache_dir: config.cache_dir.clone(),
        })
    }

    fn request_body(&self, prompt: &RenderedPrompt) -> serde_json::Value {
        let mut body = json!({
            "model": self.model,
            "messages": [{"role": "user", "content": prompt.body}],
            "temperature": 0,
            "max_tokens": prompt.max_response_tokens,
        });
        if !prompt.stop_tokens.is_empty() {
            body["stop"] = json!(prompt.stop_tokens);
        }
        body
    }

    fn post_once(&self, body: &serde_json::Value) -> Result<BackendResponse> {
        let response = self
            .client
            .post(&self.endpoint)
            .bearer_auth(&self.api_key)
            .json(body)
            .send()
            .map_err(|e| Error::Backend(e.to_string()))?;
        let status = response.status();
        if status.as_u16() == 401 || status.as_u16() == 403 {
            return Err(Error::Auth(format!("backend returned {status}")));
        }
        if !status.is_success() {
            return Err(Error::Backend(format!("backend returned {status}")));
        }
        let parsed: serde_json::Value = response
            .json()
            .map_err(|e| Error::Backend(format!("bad response json: {e}")))?;
        let choice = parsed
            .get("choices")
            .and_then(|c| c.get(0))
            .ok_or_else(|| Error::Backend("response has no choices".into()))?;
        let text = choice
            .pointer("/message/content")
            .or_else(|| choice.get("text"))
            .and_then(|t| t.as_str())
            .ok_or_else(|| Error::Backend("response has no content".into()))?
            .to_string();
        let length_stop = choice
            .get("finish_reason")
            .and_then(|r| r.as_str())
            .map(|r| r == "length")
            .unwrap_or(false);
        let meta = BackendMeta {
            model_name: parsed
                .get("model")
                .and_then(|m| m.as_str())
                .unwrap_or(&self.model)
                .to_string(),
            prompt_tokens: parsed.pointer("/usage/prompt_tokens").and_then(|v| v.as_u64()),
            completion_tokens: parsed
                .pointer("/usage/completion_tokens")
                .and_then(|v| v.as_u64()),
        };
        Ok(BackendResponse {
            text,
            meta,
            length_stop,
        })
    }
}

impl Backend for HttpBackend {
    fn complete(&self, _instance: &Instance, prompt: &RenderedPrompt) -> Result<BackendResponse> {
        if let Some(hit) = cache_lookup(self.cache_dir.as_ref(), &self.model, prompt) {
            return Ok(hit);
        }
        let body = self.request_body(prompt);
        let mut last_err = None;
        for attempt in 0..RETRIES {
            match self.post_once(&body) {
                Ok(response) => {
                    if let Some(dir) = &self.cache_dir {
                        let entry = CacheEntry {
                            request: body.clone(),
                            prompt: prompt.body.clone(),
                            response_text: response.text.clone(),
                            meta: response.meta.clone(),
                            length_stop: response.length_stop,
                        };
                        let path = cache_path(dir, &self.model, &prompt_hash(&prompt.body));
                        if let Some(parent) = path.parent() {
                            std::fs::create_dir_all(parent)?;
                        }
                        std::fs::write(&path, serde_json::to_string_pretty(&entry)?)?;
                    }
                    return Ok(response);
                }
                Err(e @ Error::Auth(_)) => return Err(e),
                Err(e) => {
                    last_err = Some(e);
                    std::thread::sleep(std::time::Duration::from_millis(
                        BACKOFF_BASE_MS << attempt,
                    ));
                }
            }
        }
        Err(last_err.unwrap_or_else(|| Error::Backend("request failed".into())))
    }

    fn cached(&self, prompt: &RenderedPrompt) -> bool {
        cache_lookup(self.cache_dir.as_ref(), &self.model, prompt).is_some()
    }
}

/// Serves responses from an existing cache; a miss is an error rather than
/// a network call.
pub struct ReplayBackend {
    model: String,
    cache_dir: PathBuf,
}

impl ReplayBackend {
    pub fn new(config: &BackendConfig) -> Result<Self> {
        let cache_dir = config
            .cache_dir
            .clone()
            .ok_or_else(|| Error::BadBackendConfig("replay backend needs cache_dir".into()))?;
        Ok(Self {
            model: config.model_name.clone(),
            cache_dir,
        })
    }
}

impl Backend for ReplayBackend {
    fn complete(&self, _instance: &Instance, prompt: &RenderedPrompt) -> Result<BackendResponse> {
        cache_lookup(Some(&self.cache_dir), &self.model, prompt)
            .ok_or_else(|| Error::ReplayCacheMiss(prompt_hash(&prompt.body)))
    }
}
