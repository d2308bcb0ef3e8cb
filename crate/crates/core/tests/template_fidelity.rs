//! Renders the documented instances and compares against the reference
//! prompt texts (whitespace-normalized), proving the templates were
//! transcribed rather than paraphrased.

mod common;

use stepbench::catalog::TaskId;
use stepbench::prompt::{self, PromptMode};

fn normalize(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn fixture_text(key: &str, kind: &str) -> String {
    let path = format!(
        "{}/tests/fixtures/worked/{key}.{kind}.txt",
        env!("CARGO_MANIFEST_DIR")
    );
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("read {path}: {e}"))
}

/// Body text above the `-----` divider.
fn instruction_part(body: &str) -> &str {
    body.split("\n-----\n").next().expect("divider present")
}

#[test]
fn rendered_prompts_match_reference_texts() {
    let mut checked = 0;
    for (key, task, payload) in common::prompt_payloads() {
        let mode = if key.ends_with(".code") {
            PromptMode::Code
        } else {
            PromptMode::Nl
        };
        let instance = common::instance_for(task, payload);
        let rendered = prompt::TemplateSet::embedded()
            .render(&instance, mode)
            .unwrap_or_else(|e| panic!("{key}: {e}"));
        let want = normalize(&fixture_text(key, "prompt"));
        let got = normalize(instruction_part(&rendered.body));
        assert_eq!(got, want, "{key}: instruction text diverges");
        checked += 1;
    }
    assert!(checked >= 36, "expected all documented prompts, got {checked}");
}

#[test]
fn keyword_prompt_matches_reference_text() {
    let rendered = prompt::render_keyword_task("art", 5).unwrap();
    assert_eq!(
        normalize(&rendered.body),
        normalize(&fixture_text("keyword_iteration.nl", "prompt"))
    );
    // other grid points substitute cleanly
    let weather = prompt::render_keyword_task("weather", 25).unwrap();
    assert!(weather.body.contains("\"weather\""));
    assert!(weather.body.contains("Iterate 25 times"));
    assert!(prompt::render_keyword_task("art", 7).is_err());
    assert!(prompt::render_keyword_task("artichoke", 5).is_err());
}

#[test]
fn bodies_end_with_seeded_first_line() {
    for (key, task, payload) in common::prompt_payloads() {
        let mode = if key.ends_with(".code") {
            PromptMode::Code
        } else {
            PromptMode::Nl
        };
        let instance = common::instance_for(task, payload);
        let rendered = prompt::TemplateSet::embedded().render(&instance, mode).unwrap();
        let after_divider = rendered
            .body
            .split("\n-----\n")
            .nth(1)
            .unwrap_or_else(|| panic!("{key}: missing divider"));
        let first_computation = after_divider.lines().last().unwrap();
        assert!(
            first_computation.starts_with("1.")
                || first_computation.starts_with("level=1, 1.")
                || first_computation.starts_with(" f["),
            "{key}: body must end with the seeded first computation line, got {first_computation:?}"
        );
    }
}

#[test]
fn rendering_is_pure() {
    let instance = common::instance_for(
        TaskId::BinarySearch,
        common::fixtures()
            .into_iter()
            .find(|f| f.task == TaskId::BinarySearch)
            .unwrap()
            .payload,
    );
    let a = prompt::render_nl(&instance).unwrap();
    let b = prompt::render_nl(&instance).unwrap();
    assert_eq!(a.body.as_bytes(), b.body.as_bytes());
}

#[test]
fn binary_search_body_matches_published_lines() {
    let instance = common::instance_for(
        TaskId::BinarySearch,
        common::prompt_payloads()
            .into_iter()
            .find(|(k, _, _)| *k == "binary_search.nl")
            .map(|(_, _, p)| p)
            .unwrap(),
    );
    let rendered = prompt::render_nl(&instance).unwrap();
    assert!(rendered
        .body
        .contains("Step 1: Calculate the middle index mid."));
    assert!(rendered
        .body
        .ends_with("1. l = 0, r = 8, mid = 0 + (8 - 0) // 2 = 4."));
}

#[test]
fn valid_parentheses_prompt_declares_stopword() {
    let instance = common::instance_for(
        TaskId::ValidParentheses,
        stepbench::catalog::Payload::Brackets {
            chars: "(]}(".to_string(),
        },
    );
    let rendered = prompt::render_nl(&instance).unwrap();
    assert!(rendered.stop_tokens.iter().any(|t| t == "halt"));
    assert!(rendered.body.contains("P[1] = '('"));
}

#[test]
fn keyword_task_has_no_code_template() {
    let instance = common::instance_for(
        TaskId::KeywordIteration,
        stepbench::catalog::Payload::Keyword {
            word: "art".to_string(),
            iterations: 5,
        },
    );
    assert!(prompt::render_code(&instance).is_err());
}

#[test]
fn lcs_prompt_carries_banned_phrases() {
    let instance = common::instance_for(
        TaskId::Lcs,
        stepbench::catalog::Payload::StringPair {
            a: "bccba".to_string(),
            b: "ccaa".to_string(),
        },
    );
    let rendered = prompt::render_nl(&instance).unwrap();
    assert_eq!(rendered.banned_phrases, vec!["...", "Repeat", "Continue"]);
}
