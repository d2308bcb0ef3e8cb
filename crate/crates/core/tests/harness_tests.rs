//! Harness behavior: suite mechanics, bounded concurrency, the HTTP
//! backend with its response cache, and the replay backend.

use std::io::{BufRead, BufReader, Read, Write};
use std::net::TcpListener;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use stepbench::catalog::{self, TaskId};
use stepbench::error::Error;
use stepbench::harness::{
    self, Backend, BackendConfig, BackendKind, BackendMeta, BackendResponse,
};
use stepbench::prompt::{PromptMode, RenderedPrompt, TemplateSet};

struct CountingBackend {
    in_flight: AtomicUsize,
    max_seen: AtomicUsize,
    calls: AtomicUsize,
}

impl Backend for CountingBackend {
    fn complete(
        &self,
        instance: &catalog::Instance,
        _prompt: &RenderedPrompt,
    ) -> stepbench::error::Result<BackendResponse> {
        let now = self.in_flight.fetch_add(1, Ordering::SeqCst) + 1;
        self.max_seen.fetch_max(now, Ordering::SeqCst);
        self.calls.fetch_add(1, Ordering::SeqCst);
        std::thread::sleep(std::time::Duration::from_millis(5));
        self.in_flight.fetch_sub(1, Ordering::SeqCst);
        Ok(BackendResponse {
            text: harness::echo::oracle_response(instance),
            meta: BackendMeta::default(),
            length_stop: false,
        })
    }
}

#[test]
fn in_flight_requests_never_exceed_max_parallel() {
    let dir = tempfile::tempdir().unwrap();
    let backend = CountingBackend {
        in_flight: AtomicUsize::new(0),
        max_seen: AtomicUsize::new(0),
        calls: AtomicUsize::new(0),
    };
    let outcome = harness::run_suite_with(
        &[TaskId::BubbleSort, TaskId::BinarySearch, TaskId::Minimum],
        &[PromptMode::Nl],
        8,
        11,
        &backend,
        3,
        &TemplateSet::embedded(),
        &dir.path().join("records.jsonl"),
    )
    .unwrap();
    assert_eq!(outcome.records.len(), 24);
    assert_eq!(backend.calls.load(Ordering::SeqCst), 24);
    assert!(
        backend.max_seen.load(Ordering::SeqCst) <= 3,
        "observed {} concurrent requests",
        backend.max_seen.load(Ordering::SeqCst)
    );
}

#[test]
fn suite_rejects_empty_selections() {
    let dir = tempfile::tempdir().unwrap();
    let config = BackendConfig::offline(BackendKind::OracleEcho);
    let path = dir.path().join("records.jsonl");
    let templates = TemplateSet::embedded();
    assert!(harness::run_suite(&[TaskId::Minimum], &[PromptMode::Nl], 0, 1, &config, &templates, &path).is_err());
    assert!(harness::run_suite(&[], &[PromptMode::Nl], 1, 1, &config, &templates, &path).is_err());
}

#[test]
fn resume_skips_persisted_records() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("records.jsonl");
    let config = BackendConfig::offline(BackendKind::OracleEcho);
    let templates = TemplateSet::embedded();
    let tasks = [TaskId::Heapsort];
    let first =
        harness::run_suite(&tasks, &[PromptMode::Nl], 5, 3, &config, &templates, &path).unwrap();
    assert_eq!(first.records.len(), 5);
    assert_eq!(first.skipped_existing, 0);
    let second =
        harness::run_suite(&tasks, &[PromptMode::Nl], 5, 3, &config, &templates, &path).unwrap();
    assert_eq!(second.records.len(), 5, "no duplicates appended");
    assert_eq!(second.skipped_existing, 5);
}

#[test]
fn temperature_other_than_zero_is_refused() {
    let mut config = BackendConfig::offline(BackendKind::OracleEcho);
    config.temperature = 0.7;
    assert!(matches!(
        harness::backend_for(&config),
        Err(Error::BadBackendConfig(_))
    ));
}

#[test]
fn keyword_suite_covers_the_word_by_count_grid() {
    let mut seen = std::collections::BTreeSet::new();
    for idx in 0..100 {
        let inst = harness::suite_instance(TaskId::KeywordIteration, 99, idx).unwrap();
        let catalog::Payload::Keyword { word, iterations } = &inst.payload else {
            panic!("keyword payload")
        };
        seen.insert((word.clone(), *iterations));
    }
    assert_eq!(seen.len(), 100, "20 words x 5 counts each exactly once");
}

/// Minimal chat-completions server: answers each POST with a canned
/// completion, after `fail_first` 500s. Returns request count.
fn spawn_server(
    completion: String,
    fail_first: usize,
    unauthorized: bool,
) -> (String, Arc<AtomicUsize>, std::thread::JoinHandle<()>) {
    let listener = TcpListener::bind("127.0.0.1:0").unwrap();
    let addr = listener.local_addr().unwrap();
    let hits = Arc::new(AtomicUsize::new(0));
    let hits_clone = hits.clone();
    let handle = std::thread::spawn(move || {
        for stream in listener.incoming() {
            let Ok(mut stream) = stream else { break };
            let n = hits_clone.fetch_add(1, Ordering::SeqCst);
            let mut reader = BufReader::new(stream.try_clone().unwrap());
            let mut content_length = 0usize;
            loop {
                let mut line = String::new();
                if reader.read_line(&mut line).is_err() || line == "\r\n" || line.is_empty() {
                    break;
                }
                if let Some(rest) = line.to_lowercase().strip_prefix("content-length:") {
                    content_length = rest.trim().parse().unwrap_or(0);
                }
            }
            let mut body = vec![0u8; content_length];
            reader.read_exact(&mut body).ok();
            let (status, payload) = if unauthorized {
                ("401 Unauthorized", "{}".to_string())
            } else if n < fail_first {
                ("500 Internal Server Error", "{}".to_string())
            } else {
                (
                    "200 OK",
                    serde_json::json!({
                        "model": "fake-model",
                        "choices": [{"message": {"content": completion}, "finish_reason": "stop"}],
                        "usage": {"prompt_tokens": 10, "completion_tokens": 5}
                    })
                    .to_string(),
                )
            };
            let response = format!(
                "HTTP/1.1 {status}\r\nContent-Type: application/json\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{payload}",
                payload.len()
            );
            stream.write_all(response.as_bytes()).ok();
            let _ = stream.shutdown(std::net::Shutdown::Both);
            if n >= 8 {
                break;
            }
        }
    });
    (format!("http://{addr}/v1/chat/completions"), hits, handle)
}

fn http_config(endpoint: &str, cache: &std::path::Path) -> BackendConfig {
    BackendConfig {
        kind: BackendKind::Http,
        endpoint_url: endpoint.to_string(),
        model_name: "fake-model".to_string(),
        temperature: 0.0,
        request_timeout_secs: 5,
        max_parallel: 1,
        cache_dir: Some(cache.to_path_buf()),
        mutate_snapshot: None,
    }
}

/// One test drives every HTTP path so the credential environment variable
/// is only touched from a single thread.
#[test]
fn http_backend_caches_retries_and_replays() {
    let inst = catalog::sample_instance(TaskId::Minimum, 9, 5).unwrap();
    let prompt = stepbench::prompt::render_nl(&inst).unwrap();
    let cache = tempfile::tempdir().unwrap();

    // missing credentials surface as an authentication error
    std::env::remove_var(harness::API_KEY_ENV);
    let (endpoint, _, handle_unused) = spawn_server("unused".into(), 0, false);
    let config = http_config(&endpoint, cache.path());
    assert!(matches!(harness::backend_for(&config), Err(Error::Auth(_))));
    drop(handle_unused);
    std::env::set_var(harness::API_KEY_ENV, "test-key");

    // happy path populates the cache; a second submit is served from it
    let completion = harness::echo::oracle_response(&inst);
    let (endpoint, hits, _handle) = spawn_server(completion.clone(), 0, false);
    let config = http_config(&endpoint, cache.path());
    let backend = harness::backend_for(&config).unwrap();
    let record = harness::submit(&inst, &prompt, backend.as_ref()).unwrap();
    assert_eq!(record.response_text, completion);
    assert_eq!(record.backend_meta.prompt_tokens, Some(10));
    assert!(!record.truncated);
    assert_eq!(record.prompt_hash, harness::prompt_hash(&prompt.body));
    let again = harness::submit(&inst, &prompt, backend.as_ref()).unwrap();
    assert_eq!(again.response_text, completion);
    assert_eq!(hits.load(Ordering::SeqCst), 1, "second call must hit the cache");

    // the cache file stores the prompt; its hash matches the record
    let entry_dir = cache.path().join("fake-model");
    let entry = std::fs::read_dir(&entry_dir).unwrap().next().unwrap().unwrap();
    let cached: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(entry.path()).unwrap()).unwrap();
    assert_eq!(
        harness::prompt_hash(cached["prompt"].as_str().unwrap()),
        record.prompt_hash
    );

    // replay serves from the same cache, and misses are errors
    let mut replay_config = http_config("http://unused.invalid", cache.path());
    replay_config.kind = BackendKind::Replay;
    let replay = harness::backend_for(&replay_config).unwrap();
    let replayed = harness::submit(&inst, &prompt, replay.as_ref()).unwrap();
    assert_eq!(replayed.response_text, completion);
    let other = catalog::sample_instance(TaskId::Minimum, 9, 6).unwrap();
    let other_prompt = stepbench::prompt::render_nl(&other).unwrap();
    assert!(matches!(
        harness::submit(&other, &other_prompt, replay.as_ref()),
        Err(Error::ReplayCacheMiss(_))
    ));

    // transient 500s are retried with backoff
    let fresh_cache = tempfile::tempdir().unwrap();
    let (endpoint, hits, _handle) = spawn_server(completion.clone(), 2, false);
    let config = http_config(&endpoint, fresh_cache.path());
    let backend = harness::backend_for(&config).unwrap();
    let record = harness::submit(&inst, &prompt, backend.as_ref()).unwrap();
    assert_eq!(record.response_text, completion);
    assert_eq!(hits.load(Ordering::SeqCst), 3, "two failures then success");

    // authentication failures do not retry
    let fresh_cache = tempfile::tempdir().unwrap();
    let (endpoint, hits, _handle) = spawn_server("unused".into(), 0, true);
    let config = http_config(&endpoint, fresh_cache.path());
    let backend = harness::backend_for(&config).unwrap();
    assert!(matches!(
        harness::submit(&inst, &prompt, backend.as_ref()),
        Err(Error::Auth(_))
    ));
    assert_eq!(hits.load(Ordering::SeqCst), 1);

    std::env::remove_var(harness::API_KEY_ENV);
}

#[test]
fn truncated_flag_is_set_when_no_final_line_exists() {
    struct Garbage;
    impl Backend for Garbage {
        fn complete(
            &self,
            _instance: &catalog::Instance,
            _prompt: &RenderedPrompt,
        ) -> stepbench::error::Result<BackendResponse> {
            Ok(BackendResponse {
                text: "step one and then it stopped mid".to_string(),
                meta: BackendMeta::default(),
                length_stop: false,
            })
        }
    }
    let inst = catalog::sample_instance(TaskId::BubbleSort, 4, 1).unwrap();
    let prompt = stepbench::prompt::render_nl(&inst).unwrap();
    let record = harness::submit(&inst, &prompt, &Garbage).unwrap();
    assert!(record.truncated);
}

#[test]
fn suite_counts_match_the_published_set_sizes() {
    // 26 step-program tasks at ten instances each
    let dir = tempfile::tempdir().unwrap();
    let outcome = harness::run_suite(
        &TaskId::clrs_mini(),
        &[PromptMode::Nl],
        10,
        1,
        &BackendConfig::offline(BackendKind::OracleEcho),
        &TemplateSet::embedded(),
        &dir.path().join("records.jsonl"),
    )
    .unwrap();
    assert_eq!(outcome.records.len(), 260);

    // the bracket-matching set is 1000 instances of length <= 20
    let dir = tempfile::tempdir().unwrap();
    let outcome = harness::run_suite(
        &[TaskId::ValidParentheses],
        &[PromptMode::Nl],
        1000,
        1,
        &BackendConfig::offline(BackendKind::OracleEcho),
        &TemplateSet::embedded(),
        &dir.path().join("records.jsonl"),
    )
    .unwrap();
    assert_eq!(outcome.records.len(), 1000);
}
