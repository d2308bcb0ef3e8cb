//! Synthetic backends: oracle-echo serializes the gold trace and answer in
//! the task's expected textual step format, closing the render → run →
//! score loop offline; the mutator corrupts one snapshot (or the final
//! value) for scorer tests.

use crate::catalog::{spec, Instance, TaskId};
use crate::value::{fmt_complex, fmt_fixed2, Answer, Snapshot};

/// Word pool for the synthetic keyword-task responses.
const NEXT_WORDS: [&str; 25] = [
    "canvas", "rhythm", "pattern", "signal", "motion", "texture", "circuit", "harbor", "meadow",
    "lattice", "prism", "ember", "quarry", "vessel", "orbit", "thread", "summit", "garden",
    "mirror", "anchor", "beacon", "canyon", "draft", "fable", "grain",
];

fn int_list(values: &[i64]) -> String {
    format!(
        "[{}]",
        values
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    )
}

/// Serializes the gold computation for `instance` as a numbered step
/// response.
pub fn oracle_response(instance: &Instance) -> String {
    render(instance, None)
}

/// Oracle-echo output with the `k`-th intermediate snapshot corrupted
/// (0-based). Tasks without a trace variable corrupt the final value
/// instead.
pub fn mutated_response(instance: &Instance, k: usize) -> String {
    render(instance, Some(k))
}

fn render(instance: &Instance, corrupt: Option<usize>) -> String {
    let task = instance.task_id;
    let mut lines: Vec<String> = Vec::new();
    let mut line_no = 0usize;
    let push = |text: String, lines: &mut Vec<String>, line_no: &mut usize| {
        *line_no += 1;
        lines.push(format!("{}. {}", line_no, text));
    };

    if task == TaskId::KeywordIteration {
        return keyword_response(instance, corrupt.is_some());
    }

    push("Executing the procedure step by step.".to_string(), &mut lines, &mut line_no);

    let trace_scored = spec(task).trace_var.is_some();
    if trace_scored {
        for (idx, snapshot) in instance.gold_trace.iter().enumerate() {
            let corrupted = corrupt == Some(idx);
            let text = match task {
                TaskId::BubbleSort => format!(
                    "Wrong order, swap performed, A = {}.",
                    int_list(&snapshot_ints(snapshot, corrupted))
                ),
                TaskId::KmpMatcher => {
                    format!("lps = {}.", int_list(&snapshot_ints(snapshot, corrupted)))
                }
                TaskId::TaskScheduling => format!(
                    "result slot is free, print job: {}.",
                    int_list(&snapshot_ints(snapshot, corrupted))
                ),
                TaskId::BreadthFirstSearch => {
                    format!("Q = {}", int_list(&snapshot_ints(snapshot, corrupted)))
                }
                TaskId::OptimalBst => bst_event_line(instance, idx, corrupted),
                _ => unreachable!("only the five trace-scored tasks carry traces"),
            };
            push(text, &mut lines, &mut line_no);
        }
    }

    let corrupt_final = corrupt.is_some() && !trace_scored;
    let answer = if corrupt_final {
        corrupted_answer(&instance.gold_answer)
    } else {
        instance.gold_answer.clone()
    };
    match &answer {
        Answer::Int(v) => push(format!("The final answer is {v}."), &mut lines, &mut line_no),
        Answer::Fixed2(v) => push(
            format!("Print the final value = {}.", fmt_fixed2(*v)),
            &mut lines,
            &mut line_no,
        ),
        Answer::IntList(v) => push(
            format!("The final array is {}.", int_list(v)),
            &mut lines,
            &mut line_no,
        ),
        Answer::PairList(pairs) => {
            let body = pairs
                .iter()
                .map(|(a, b)| format!("({a}, {b})"))
                .collect::<Vec<_>>()
                .join(", ");
            push(format!("The final list is [{body}]."), &mut lines, &mut line_no);
        }
        Answer::Matrix(rows) => {
            for (i, row) in rows.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    push(format!("dist[{i}, {j}] = {v}"), &mut lines, &mut line_no);
                }
            }
            push("The matrix above is final.".to_string(), &mut lines, &mut line_no);
        }
        Answer::FloatPair(a, b) => push(
            format!("a, b = ({}, {}).", fmt_fixed2(*a), fmt_fixed2(*b)),
            &mut lines,
            &mut line_no,
        ),
        Answer::ComplexList(values) => {
            let body = values
                .iter()
                .map(|&(re, im)| format!("({})", fmt_complex(re, im)))
                .collect::<Vec<_>>()
                .join(", ");
            push(format!("The spectrum is [{body}]."), &mut lines, &mut line_no);
        }
        Answer::Label(verdict) => push(
            format!("So print \"{verdict}\" and halt"),
            &mut lines,
            &mut line_no,
        ),
    }
    lines.join("\n")
}

fn snapshot_ints(snapshot: &Snapshot, corrupted: bool) -> Vec<i64> {
    let Snapshot::Ints(values) = snapshot else {
        panic!("integer snapshot expected");
    };
    let mut out = values.clone();
    if corrupted {
        if let Some(first) = out.first_mut() {
            *first += 1;
        } else {
            out.push(1);
        }
    }
    out
}

/// One dynamic-programming cell event in the reference textual format. The
/// finalized cell and its value are recovered by diffing consecutive gold
/// snapshots.
fn bst_event_line(instance: &Instance, idx: usize, corrupted: bool) -> String {
    let current = match &instance.gold_trace[idx] {
        Snapshot::Matrix(m) => m,
        _ => panic!("matrix snapshot expected"),
    };
    let n = current.len();
    let previous: Vec<Vec<f64>> = if idx == 0 {
        vec![vec![0.0; n]; n]
    } else {
        match &instance.gold_trace[idx - 1] {
            Snapshot::Matrix(m) => m.clone(),
            _ => panic!("matrix snapshot expected"),
        }
    };
    let mut cell = (0usize, 0usize);
    for i in 0..n {
        for j in 0..n {
            if (current[i][j] - previous[i][j]).abs() > 1e-12 {
                cell = (i, j);
            }
        }
    }
    let (i, j) = cell;
    let mut value = current[i][j];
    if corrupted {
        value += 1.0;
    }
    if i == j {
        format!(
            "e[{i}][{j}] = q[{i}] = {v}, w[{i}][{j}] = q[{i}] = {v}.",
            v = fmt_fixed2(value)
        )
    } else {
        format!(
            "e[{i}][{j}] = min(66666666, {v}) = {v}.",
            v = fmt_fixed2(value)
        )
    }
}

fn corrupted_answer(answer: &Answer) -> Answer {
    match answer {
        Answer::Int(v) => Answer::Int(v + 1),
        Answer::Fixed2(v) => Answer::Fixed2(v + 1.0),
        Answer::IntList(v) => {
            let mut out = v.clone();
            if let Some(first) = out.first_mut() {
                *first += 1;
            } else {
                out.push(1);
            }
            Answer::IntList(out)
        }
        Answer::PairList(pairs) => {
            let mut out = pairs.clone();
            out.push((99, 99));
            Answer::PairList(out)
        }
        Answer::Matrix(rows) => {
            let mut out = rows.clone();
            let last = out[0].len() - 1;
            out[0][last] += 1;
            Answer::Matrix(out)
        }
        Answer::FloatPair(a, b) => Answer::FloatPair(a + 1.0, *b),
        Answer::ComplexList(values) => {
            let mut out = values.clone();
            out[0].0 += 1.0;
            Answer::ComplexList(out)
        }
        Answer::Label(v) => Answer::Label(match v {
            crate::value::Validity::Valid => crate::value::Validity::Invalid,
            crate::value::Validity::Invalid => crate::value::Validity::Valid,
        }),
    }
}

fn keyword_response(instance: &Instance, corrupt: bool) -> String {
    let crate::catalog::Payload::Keyword { word, iterations } = &instance.payload else {
        panic!("keyword payload expected");
    };
    let mut lines = Vec::new();
    let mut current = word.clone();
    for i in 0..*iterations {
        let next = NEXT_WORDS[i % NEXT_WORDS.len()];
        let sentence = if corrupt && i == *iterations / 2 {
            // drop the chosen keyword from the sentence
            format!("The {current} theme continues without its marker.")
        } else {
            format!("The {current} theme leads naturally to the idea of {next}.")
        };
        lines.push(format!("{}. {}", i + 1, sentence));
        lines.push(format!("Keyword: {next}"));
        current = next.to_string();
    }
    lines.join("\n")
}
