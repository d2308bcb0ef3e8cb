//! Suite orchestration and CLI behavior: manifest handling, verb error
//! paths and exit codes.

use std::process::Command;

use stepbench::harness::{BackendConfig, BackendKind};
use stepbench::prompt::PromptMode;
use stepbench::suite::{self, SuiteManifest};

fn manifest(dir: &std::path::Path) -> SuiteManifest {
    SuiteManifest {
        master_seed: 5,
        tasks: vec!["bubble_sort".into(), "valid_parentheses".into()],
        modes: vec!["nl".into(), "code".into()],
        instances_per_task: 4,
        output_dir: dir.to_path_buf(),
        backend: BackendConfig::offline(BackendKind::OracleEcho),
        templates_dir: None,
    }
}

#[test]
fn generate_render_score_produce_the_expected_counts() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = manifest(dir.path());
    assert_eq!(suite::generate(&manifest).unwrap(), 8);
    assert_eq!(suite::render(&manifest, None).unwrap(), 16);
    assert_eq!(suite::render(&manifest, Some(PromptMode::Nl)).unwrap(), 8);
    let outcome = suite::run(&manifest).unwrap();
    assert!(outcome.failures.is_empty());
    let report = suite::score_records(&outcome.records).unwrap();
    assert_eq!(report.rows.len(), 4);
}

#[test]
fn zero_instances_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let mut manifest = manifest(dir.path());
    manifest.instances_per_task = 0;
    assert!(suite::generate(&manifest).is_err());
    assert!(suite::run(&manifest).is_err());
}

#[test]
fn unknown_mode_and_task_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let mut bad_mode = manifest(dir.path());
    bad_mode.modes = vec!["prose".into()];
    assert!(bad_mode.validate().is_err());
    let mut bad_task = manifest(dir.path());
    bad_task.tasks = vec!["bogosort".into()];
    assert!(bad_task.validate().is_err());
}

#[test]
fn replay_without_cache_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let mut manifest = manifest(dir.path());
    manifest.backend.kind = BackendKind::Replay;
    manifest.backend.cache_dir = None;
    assert!(suite::run(&manifest).is_err());
}

#[test]
fn scoring_an_empty_run_dir_fails() {
    let dir = tempfile::tempdir().unwrap();
    assert!(suite::score_run_dir(dir.path()).is_err());
}

#[test]
fn comparison_table_rejects_mismatched_task_sets() {
    let dir = tempfile::tempdir().unwrap();
    let full = manifest(dir.path());
    let outcome = suite::run(&full).unwrap();
    let both = suite::score_records(&outcome.records).unwrap();
    let table = suite::comparison_table(&[both.clone()]).unwrap();
    assert!(table.contains("Natural Language Prompt"));
    assert!(table.contains("Python Code"));

    // a report over a different task set cannot be merged
    let dir2 = tempfile::tempdir().unwrap();
    let mut other = manifest(dir2.path());
    other.tasks = vec!["heapsort".into()];
    let outcome2 = suite::run(&other).unwrap();
    let heap_only = suite::score_records(&outcome2.records).unwrap();
    assert!(suite::comparison_table(&[both, heap_only]).is_err());
}

#[test]
fn single_mode_report_renders_one_column_group() {
    let dir = tempfile::tempdir().unwrap();
    let mut nl_only = manifest(dir.path());
    nl_only.modes = vec!["nl".into()];
    let outcome = suite::run(&nl_only).unwrap();
    let report = suite::score_records(&outcome.records).unwrap();
    let table = suite::comparison_table(&[report]).unwrap();
    assert!(table.contains("Natural Language Prompt"));
    assert!(!table.contains("Python Code"));
}

#[test]
fn cli_exit_codes_follow_the_contract() {
    let bin = env!("CARGO_BIN_EXE_stepbench");
    let dir = tempfile::tempdir().unwrap();
    let manifest_path = dir.path().join("suite.toml");
    let out_dir = dir.path().join("out");
    std::fs::write(
        &manifest_path,
        format!(
            "master_seed = 3\ntasks = [\"minimum\"]\nmodes = [\"nl\"]\ninstances_per_task = 2\noutput_dir = {:?}\n\n[backend]\nkind = \"oracle-echo\"\n",
            out_dir
        ),
    )
    .unwrap();

    let run = |args: &[&str]| {
        Command::new(bin)
            .args(args)
            .output()
            .expect("binary runs")
    };

    let manifest_arg = manifest_path.to_str().unwrap();
    assert!(run(&["generate", "--manifest", manifest_arg]).status.success());
    assert!(run(&["render", "--manifest", manifest_arg]).status.success());
    assert!(run(&["run", "--manifest", manifest_arg]).status.success());
    let score = run(&["score", "--run-dir", out_dir.to_str().unwrap()]);
    assert!(score.status.success());
    assert!(String::from_utf8_lossy(&score.stdout).contains("minimum"));

    // invalid input exits with 2
    let bad = run(&["generate", "--manifest", manifest_arg, "--tasks", "bogosort"]);
    assert_eq!(bad.status.code(), Some(2));
    let missing = run(&["score", "--run-dir", dir.path().join("nowhere").to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(2));
}
