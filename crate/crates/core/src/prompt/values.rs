//! Per-task substitution values, including the seeded first computation
//! line. Formatting here is character-exact against the reference prompt
//! texts, so the helpers are shared and each task only assembles them.

use super::PromptMode;
use crate::catalog::{Payload, TaskId};
use crate::error::{Error, Result};
use crate::value::{fmt_fixed2, fmt_short2};

type Vars = Vec<(String, String)>;

fn var(key: &str, value: impl Into<String>) -> (String, String) {
    (key.to_string(), value.into())
}

/// `A[0] = 4, A[1] = 5, ...` starting at `start`.
fn assigns<T: std::fmt::Display>(name: &str, values: &[T], start: usize) -> String {
    values
        .iter()
        .enumerate()
        .map(|(i, v)| format!("{name}[{}] = {v}", i + start))
        .collect::<Vec<_>>()
        .join(", ")
}

/// `A[1] = 'b' A[2] = 'c' ...` (quoted, space-separated, 1-based).
fn quoted_assigns(name: &str, chars: &str) -> String {
    chars
        .chars()
        .enumerate()
        .map(|(i, c)| format!("{name}[{}] = '{c}'", i + 1))
        .collect::<Vec<_>>()
        .join(" ")
}

/// `pat[0] = A, pat[1] = A, ...` (unquoted letters).
fn letter_assigns(name: &str, chars: &str) -> String {
    let letters: Vec<String> = chars.chars().map(|c| c.to_string()).collect();
    assigns(name, &letters, 0)
}

/// `[2, 3, 2, 9]`
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

fn zeros(n: usize) -> Vec<i64> {
    vec![0; n]
}

fn identity(n: usize) -> Vec<i64> {
    (0..n as i64).collect()
}

/// Matrix rows as `A[i, 0] = v, A[i, 1] = v` lines joined by newlines,
/// closing with `terminal`.
fn matrix_assigns(name: &str, adj: &[Vec<i64>], terminal: &str) -> String {
    let rows: Vec<String> = adj
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, v)| format!("{name}[{i}, {j}] = {v}"))
                .collect::<Vec<_>>()
                .join(", ")
        })
        .collect();
    format!("{}{}", rows.join("\n"), terminal)
}

fn fixed2_list(values: &[f64]) -> Vec<String> {
    values.iter().map(|&v| fmt_fixed2(v)).collect()
}

fn short2_list(values: &[f64]) -> Vec<String> {
    values.iter().map(|&v| fmt_short2(v)).collect()
}

pub fn build(task: TaskId, mode: PromptMode, payload: &Payload) -> Result<Vars> {
    use Payload::*;
    let mismatch = || Error::MalformedPayload {
        task,
        reason: "payload kind does not fit task".to_string(),
    };
    let vars = match (task, payload) {
        (TaskId::InsertionSort, Numbers { values }) => vec![
            var("array_literal", int_list(values)),
            var("n", values.len().to_string()),
            var("first_line", format!("1. i = 0, A[0] = {}.", values[0])),
        ],
        (TaskId::BubbleSort, Numbers { values }) => vec![
            var("array_literal", int_list(values)),
            var("n", values.len().to_string()),
            var("n_minus_1", (values.len() - 1).to_string()),
            var("first_line", format!("1. i = 0, A[0] = {}.", values[0])),
        ],
        (TaskId::Heapsort, Numbers { values }) => {
            let n = values.len();
            let root = n / 2 - 1;
            vec![
                var("array_literal", int_list(values)),
                var("n", n.to_string()),
                var("n_minus_1", (n - 1).to_string()),
                var("heap_root", root.to_string()),
                var(
                    "first_line",
                    format!("1. i = {root}, calling heapify(A, {n}, {root})."),
                ),
            ]
        }
        (TaskId::Quicksort, Numbers { values }) => vec![
            var("array_literal", int_list(values)),
            var("n", values.len().to_string()),
            var(
                "first_line",
                format!("1. Call quicksort(A, 0, {}).", values.len() - 1),
            ),
        ],
        (TaskId::Minimum, Numbers { values }) => vec![
            var("array_literal", int_list(values)),
            var("n", values.len().to_string()),
            var(
                "first_line",
                format!(
                    "1. min_ = 0, A[0] = {}; i = 1, A[1] = {}.",
                    values[0], values[1]
                ),
            ),
        ],
        (TaskId::BinarySearch, Search { values, target }) => {
            let r = values.len() - 1;
            let mid = r / 2;
            vec![
                var("array_assignments", assigns("A", values, 0)),
                var("n", values.len().to_string()),
                var("x", target.to_string()),
                var("r", r.to_string()),
                var(
                    "first_line",
                    format!("1. l = 0, r = {r}, mid = 0 + ({r} - 0) // 2 = {mid}."),
                ),
            ]
        }
        (TaskId::Quickselect, Select { values, k }) => {
            let r = values.len() - 1;
            vec![
                var("array_literal", int_list(values)),
                var("r", r.to_string()),
                var("k", k.to_string()),
                var(
                    "first_line",
                    format!("1. Call kthSmallest(A, L = 0, R = {r}, K = {k})."),
                ),
            ]
        }
        (TaskId::MaximumSubarray, Numbers { values }) => {
            let n = values.len();
            let r = n - 1;
            vec![
                var("array_assignments", assigns("A", values, 0)),
                var("n_minus_1", r.to_string()),
                var(
                    "first_line",
                    format!(
                        "1. maxSubArraySum(A, l=0, r={r}).\n1.1. r - l + 1 = {r} - 0 + 1 = {n}, {n} != 1."
                    ),
                ),
            ]
        }
        (TaskId::ActivitySelection, Activities { starts, finishes }) => vec![
            var("s_assignments", assigns("S", starts, 0)),
            var("f_assignments", assigns("F", finishes, 0)),
            var("n", starts.len().to_string()),
            var("first_line", "1. i = 0, j = 1.".to_string()),
        ],
        (
            TaskId::TaskScheduling,
            Jobs {
                deadlines,
                weights,
                slots,
            },
        ) => {
            let n = deadlines.len();
            let d_name = if mode == PromptMode::Code { "d" } else { "D" };
            let result = format!(
                "[{}]",
                std::iter::repeat_n("False", n).collect::<Vec<_>>().join(", ")
            );
            vec![
                var("d_assignments", assigns(d_name, deadlines, 0)),
                var("w_assignments", assigns("W", weights, 0)),
                var("n", n.to_string()),
                var("t", slots.to_string()),
                var("result_literal", result),
                var("job_literal", int_list(&vec![-1; n])),
                var("first_line", "1. i = 0.".to_string()),
            ]
        }
        (TaskId::MatrixChainMultiplication, Chain { dims }) => {
            let n = dims.len();
            vec![
                var("p_assignments", assigns("p", dims, 0)),
                var("n", n.to_string()),
                var("n_minus_1", (n - 1).to_string()),
                var(
                    "first_line",
                    format!("1. In Step 1, L = 2, 2 < {n}, so we perform the following sub-steps:"),
                ),
            ]
        }
        (TaskId::Lcs, StringPair { a, b }) => {
            let m = a.chars().count();
            let n = b.chars().count();
            let row: Vec<String> = (0..=n).map(|j| format!("f[0][{j}] = 0")).collect();
            let col: Vec<String> = (1..=m).map(|i| format!("f[{i}][0] = 0")).collect();
            vec![
                var("a_assignments", quoted_assigns("A", a)),
                var("b_assignments", quoted_assigns("B", b)),
                var("m", m.to_string()),
                var("n", n.to_string()),
                var("m_plus_1", (m + 1).to_string()),
                var("n_plus_1", (n + 1).to_string()),
                var(
                    "first_line",
                    format!("1. {}. \n {}.", row.join(", "), col.join(", ")),
                ),
            ]
        }
        (TaskId::OptimalBst, Probabilities { p, q }) => {
            let n = q.len();
            let q0 = fmt_fixed2(q[0]);
            vec![
                var("p_assignments", assigns("p", &fixed2_list(p), 0)),
                var("q_assignments", assigns("q", &fixed2_list(q), 0)),
                var("n", n.to_string()),
                var("n_minus_1", (n - 1).to_string()),
                var(
                    "first_line",
                    format!(
                        "1. i = 0, 0 <= {}, e[0][0] = q[0] = {q0}, w[0][0] = q[0] = {q0}.",
                        n - 1
                    ),
                ),
            ]
        }
        (TaskId::DepthFirstSearch, Graph { adj }) => {
            let n = adj.len();
            vec![
                var("matrix_assignments", matrix_assigns("A", adj, ".")),
                var("color_assignments", assigns("color", &zeros(n), 0)),
                var("d_assignments", assigns("d", &zeros(n), 0)),
                var("pi_assignments", assigns("pi", &identity(n), 0)),
                var("s_prev_assignments", assigns("s_prev", &identity(n), 0)),
                var("n", n.to_string()),
                var("first_line", format!("1. S = 0, 0 < {n}.")),
            ]
        }
        (TaskId::BreadthFirstSearch, Graph { adj }) => {
            let n = adj.len();
            let mut color = vec![0i64; n];
            color[0] = 1;
            let mut d = vec![6666i64; n];
            d[0] = 0;
            vec![
                var("matrix_assignments", matrix_assigns("A", adj, ".")),
                var("n", n.to_string()),
                var("color_literal", int_list(&color)),
                var("d_literal", int_list(&d)),
                var("first_line", "1. Q = [0]".to_string()),
            ]
        }
        (TaskId::TopologicalSort, Graph { adj }) => {
            let n = adj.len();
            let first = match mode {
                PromptMode::Nl => format!(
                    "1. s = 0, 0 < {n}. Since color[0] == 0, set s_last = 0, u = 0, go to Step 2."
                ),
                PromptMode::Code => {
                    format!("1. s = 0, 0 < {n}. Since color[0] == 0, set s_last = 0, u = 0.")
                }
            };
            vec![
                var("matrix_assignments", matrix_assigns("A", adj, ".")),
                var("color_assignments", assigns("color", &zeros(n), 0)),
                var("topo_assignments", assigns("topo", &identity(n), 0)),
                var("s_prev_assignments", assigns("s_prev", &identity(n), 0)),
                var("n", n.to_string()),
                var("first_line", first),
            ]
        }
        (TaskId::ArticulationPoints, Graph { adj }) => {
            let n = adj.len();
            vec![
                var("matrix_assignments", matrix_assigns("A", adj, ".")),
                var("color_assignments", assigns("color", &zeros(n), 0)),
                var("pi_assignments", assigns("pi", &identity(n), 0)),
                var("d_assignments", assigns("d", &zeros(n), 0)),
                var("s_prev_assignments", assigns("s_prev", &identity(n), 0)),
                var("low_assignments", assigns("low", &zeros(n), 0)),
                var("child_cnt_assignments", assigns("child_cnt", &zeros(n), 0)),
                var("is_cut_assignments", assigns("is_cut", &zeros(n), 0)),
                var("n", n.to_string()),
                var("n_minus_1", (n - 1).to_string()),
                var("first_line", "1. Step 1, set u = 0 and s_last = 0.".to_string()),
            ]
        }
        (TaskId::Bridges, Graph { adj }) => {
            let n = adj.len();
            vec![
                var("matrix_assignments", matrix_assigns("A", adj, ".")),
                var("color_assignments", assigns("color", &zeros(n), 0)),
                var("pi_assignments", assigns("pi", &identity(n), 0)),
                var("d_assignments", assigns("d", &zeros(n), 0)),
                var("s_prev_assignments", assigns("s_prev", &identity(n), 0)),
                var("low_assignments", assigns("low", &zeros(n), 0)),
                var("n", n.to_string()),
                var("n_minus_1", (n - 1).to_string()),
                var("first_line", "1. Step 1, set u = 0 and s_last = 0.".to_string()),
            ]
        }
        (TaskId::StronglyConnectedComponents, Graph { adj }) => {
            let n = adj.len();
            let transpose: Vec<Vec<i64>> = (0..n)
                .map(|i| (0..n).map(|j| adj[j][i]).collect())
                .collect();
            vec![
                var("matrix_assignments", matrix_assigns("A", adj, ".")),
                var("b_matrix_assignments", matrix_assigns("B", &transpose, ".")),
                var("color_assignments", assigns("color", &zeros(n), 0)),
                var("d_assignments", assigns("d", &zeros(n), 0)),
                var("f_assignments", assigns("f", &zeros(n), 0)),
                var("s_prev_assignments", assigns("s_prev", &identity(n), 0)),
                var("scc_id_assignments", assigns("scc_id", &identity(n), 0)),
                var("n", n.to_string()),
                var("n_minus_1", (n - 1).to_string()),
                var("first_line", "1. Step 1, set time = 0.".to_string()),
            ]
        }
        (
            TaskId::MstKruskal,
            Edges {
                xs,
                ys,
                ws,
                vertices,
            },
        ) => {
            let edges = format!(
                "{}, {}, {}",
                assigns("lx", xs, 0),
                assigns("ly", ys, 0),
                assigns("w", ws, 0)
            );
            vec![
                var("edge_assignments", edges),
                var("m", xs.len().to_string()),
                var("n", vertices.to_string()),
                var("n_minus_1", (vertices - 1).to_string()),
                var("pi_assignments", assigns("pi", &identity(*vertices), 0)),
                var("first_line", "1. In Step 3, i = 0.".to_string()),
            ]
        }
        (TaskId::MstPrim, Graph { adj }) => {
            let n = adj.len();
            let mut in_queue = vec![0i64; n];
            in_queue[0] = 1;
            vec![
                var("matrix_assignments", matrix_assigns("A", adj, ",")),
                var("n", n.to_string()),
                var("key_assignments", assigns("key", &zeros(n), 0)),
                var("mark_assignments", assigns("mark", &zeros(n), 0)),
                var("pi_assignments", assigns("pi", &zeros(n), 0)),
                var("in_queue_assignments", assigns("in_queue", &in_queue, 0)),
                var("first_line", "1. In Step 1, k = 0.".to_string()),
            ]
        }
        (TaskId::BellmanFord, Graph { adj }) => {
            let n = adj.len();
            let mut mask = vec![0i64; n];
            mask[0] = 1;
            let prev_d = assigns("prev_d", &zeros(n), 0);
            let prev_mask = assigns("prev_mask", &mask, 0);
            vec![
                var("matrix_assignments", matrix_assigns("A", adj, ",")),
                var("n", n.to_string()),
                var("d_assignments", assigns("d", &zeros(n), 0)),
                var("mask_assignments", assigns("mask", &mask, 0)),
                var(
                    "first_line",
                    format!(
                        "1. In Step 1, copy from d, prev_d is: {prev_d}. Copy from mask, prev_mask is: {prev_mask}."
                    ),
                ),
            ]
        }
        (TaskId::Dijkstra, Graph { adj }) => {
            let n = adj.len();
            let mut in_queue = vec![0i64; n];
            in_queue[0] = 1;
            vec![
                var("matrix_assignments", matrix_assigns("A", adj, ",")),
                var("n", n.to_string()),
                var("d_assignments", assigns("d", &zeros(n), 0)),
                var("mark_assignments", assigns("mark", &zeros(n), 0)),
                var("in_queue_assignments", assigns("in_queue", &in_queue, 0)),
                var("first_line", "1. In Step 1, k = 0.".to_string()),
            ]
        }
        (TaskId::FloydWarshall, Graph { adj }) => vec![
            var("matrix_assignments", matrix_assigns("dist", adj, ",")),
            var("n", adj.len().to_string()),
            var("first_line", "1. Step 1, k = 0.".to_string()),
        ],
        (TaskId::NaiveStringMatcher, Strings { pattern, text }) => {
            let m = pattern.chars().count();
            let n = text.chars().count();
            vec![
                var("pat_assignments", letter_assigns("pat", pattern)),
                var("txt_assignments", letter_assigns("txt", text)),
                var("m", m.to_string()),
                var("n", n.to_string()),
                var(
                    "first_line",
                    format!(
                        "1. Step 1, upper_i = N - M + 1 = {n} - {m} + 1 = {}.",
                        n - m + 1
                    ),
                ),
            ]
        }
        (TaskId::KmpMatcher, Strings { pattern, text }) => {
            let m = pattern.chars().count();
            let n = text.chars().count();
            let first = match mode {
                PromptMode::Nl => "1. Step 1, length = 0.".to_string(),
                PromptMode::Code => format!(
                    "1. Call KMPSearch({}, {}).",
                    letter_assigns("pat", pattern),
                    letter_assigns("txt", text)
                ),
            };
            vec![
                var("pat_assignments", letter_assigns("pat", pattern)),
                var("txt_assignments", letter_assigns("txt", text)),
                var("lps_assignments", assigns("lps", &zeros(m), 0)),
                var("m", m.to_string()),
                var("n", n.to_string()),
                var("first_line", first),
            ]
        }
        (TaskId::LeastSquareRegression, Series { xs, ys }) => vec![
            var("x_assignments", assigns("X", xs, 0)),
            var("y_assignments", assigns("Y", ys, 0)),
            var("n", xs.len().to_string()),
            var("first_line", "1. Step 1.1, initialize `sx` to 0.".to_string()),
        ],
        (TaskId::DiscreteFourierTransform, Numbers { values }) => {
            let literal = int_list(values);
            vec![
                var(
                    "first_line",
                    format!(
                        "level=1, 1. Step 1, Call FFT(x={literal}, recursive_level=1, next_step_x='')."
                    ),
                ),
                var("x_literal", literal),
            ]
        }
        (TaskId::GrahamScan, Points { xs, ys }) => {
            let n = xs.len();
            vec![
                var("xs_assignments", assigns("xs", &short2_list(xs), 0)),
                var("ys_assignments", assigns("ys", &short2_list(ys), 0)),
                var("n", n.to_string()),
                var("in_hull_assignments", assigns("in_hull", &zeros(n), 0)),
                var("stack_prev_assignments", assigns("stack_prev", &identity(n), 0)),
                var("atans_assignments", assigns("atans", &zeros(n), 0)),
                var("first_line", "1. Step 2, set `best` to 0.".to_string()),
            ]
        }
        (TaskId::JarvisMarch, Points { xs, ys }) => {
            let n = xs.len();
            vec![
                var("xs_assignments", assigns("xs", &short2_list(xs), 0)),
                var("ys_assignments", assigns("ys", &short2_list(ys), 0)),
                var("n", n.to_string()),
                var("in_hull_assignments", assigns("in_hull", &zeros(n), 0)),
                var("first_line", "1. Step 2, set `best` to 0.".to_string()),
            ]
        }
        (TaskId::ValidParentheses, Brackets { chars }) => {
            let n = chars.chars().count();
            let first_char = chars.chars().next().expect("non-empty");
            vec![
                var("p_assignments", quoted_assigns("P", chars)),
                var("n", n.to_string()),
                var("n_plus_1", (n + 1).to_string()),
                var(
                    "first_line",
                    format!("1. i = 1, copy from Initial, P[1] = '{first_char}'; Stack_1 = []."),
                ),
            ]
        }
        _ => return Err(mismatch()),
    };
    Ok(vars)
}
