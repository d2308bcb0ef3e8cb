//! Oracle-echo closure: for every task and mode, the synthetic gold
//! response must be parseable and score perfectly on all three metrics —
//! this ties the serializer, the templates and the extractors together.

use stepbench::catalog::{self, TaskId};
use stepbench::harness::echo;
use stepbench::scoring;

#[test]
fn echo_scores_perfectly_on_every_task() {
    for spec in catalog::list_tasks() {
        for &size in spec.sizes {
            for seed in 0..20u64 {
                let inst = catalog::sample_instance(spec.task_id, size, seed).unwrap();
                let text = echo::oracle_response(&inst);
                let score = scoring::score_response(&inst, &text);
                assert!(
                    score.final_correct && !score.extraction_failed,
                    "{} size {} seed {}: echo final not recovered\nresponse:\n{}\ngold: {:?}",
                    spec.task_id,
                    size,
                    seed,
                    text,
                    inst.gold_answer
                );
                if spec.trace_var.is_some() {
                    assert_eq!(
                        score.intermediate_correct,
                        Some(true),
                        "{} size {} seed {}: echo trace mismatch\nresponse:\n{}\ngold: {:?}",
                        spec.task_id,
                        size,
                        seed,
                        text,
                        inst.gold_trace
                    );
                    assert_eq!(score.process, Some(1.0));
                }
            }
        }
    }
}

#[test]
fn mutator_breaks_exactly_one_snapshot() {
    for task in [
        TaskId::BubbleSort,
        TaskId::KmpMatcher,
        TaskId::TaskScheduling,
        TaskId::OptimalBst,
        TaskId::BreadthFirstSearch,
    ] {
        let spec = catalog::spec(task);
        let mut tried = 0;
        for seed in 0..50u64 {
            let inst = catalog::sample_instance(task, spec.sizes[0], seed).unwrap();
            let len = inst.gold_trace.len();
            if len < 2 {
                continue;
            }
            tried += 1;
            for k in [0usize, len / 2, len - 1] {
                let text = echo::mutated_response(&inst, k);
                let pred = scoring::extract_trace(task, &text).unwrap();
                assert_eq!(pred.len(), len, "{task} seed {seed}: length changed");
                let ratio = scoring::process_ratio(&pred, &inst.gold_trace);
                let expected = k as f64 / len as f64;
                assert!(
                    (ratio - expected).abs() < 1e-12,
                    "{task} seed {seed} k {k}: ratio {ratio} != {expected}"
                );
            }
            if tried >= 5 {
                break;
            }
        }
        assert!(tried > 0, "{task}: no instance with a trace of length >= 2");
    }
}

#[test]
fn mutation_changes_exactly_one_line_of_the_echo_text() {
    let inst = catalog::sample_instance(TaskId::KmpMatcher, 4, 3).unwrap();
    assert!(!inst.gold_trace.is_empty());
    let clean = echo::oracle_response(&inst);
    let mutated = echo::mutated_response(&inst, 0);
    let differing: Vec<(&str, &str)> = clean
        .lines()
        .zip(mutated.lines())
        .filter(|(a, b)| a != b)
        .collect();
    assert_eq!(clean.lines().count(), mutated.lines().count());
    assert_eq!(differing.len(), 1, "only the first snapshot line differs");
    assert!(differing[0].0.contains("lps = ["));
}
