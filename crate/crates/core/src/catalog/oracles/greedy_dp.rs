//! Greedy and dynamic-programming interpreters.

use crate::catalog::StepTrace;
use crate::value::{Answer, Snapshot};

/// Earliest-finish greedy over activities pre-sorted by finish time; the
/// first activity is always selected.
pub fn activity_selection(starts: &[i64], finishes: &[i64]) -> (Answer, StepTrace) {
    let mut selected = vec![0i64];
    let mut i = 0usize;
    for j in 1..starts.len() {
        if starts[j] >= finishes[i] {
            selected.push(j as i64);
            i = j;
        }
    }
    (Answer::IntList(selected), vec![])
}

/// Slot-filling job scheduling; the trace variable is the `job` array,
/// snapshotted after every assignment.
pub fn task_scheduling(deadlines: &[i64], slots: i64) -> (Answer, StepTrace) {
    let n = deadlines.len();
    let mut result = vec![false; n];
    let mut job = vec![-1i64; n];
    let mut trace = Vec::new();
    for i in 0..n {
        let mut j = slots.min(deadlines[i]);
        while j > -1 {
            if !result[j as usize] {
                result[j as usize] = true;
                job[j as usize] = i as i64;
                trace.push(Snapshot::Ints(job.clone()));
                break;
            }
            j -= 1;
        }
    }
    (Answer::IntList(job), trace)
}

/// Interval DP over 1-based indices `1..N-1`, with the prompts'
/// `66666666` sentinel; answers `m[1][N-1]`.
pub fn matrix_chain(dims: &[i64]) -> (Answer, StepTrace) {
    const MAXINT: i64 = 66_666_666;
    let n = dims.len();
    let mut m = vec![vec![0i64; n]; n];
    for len in 2..n {
        let upper_i = n - len + 1;
        for i in 1..upper_i {
            let j = i + len - 1;
            m[i][j] = MAXINT;
            for k in i..j {
                let q = m[i][k] + m[k + 1][j] + dims[i - 1] * dims[k] * dims[j];
                if m[i][j] - q > 0 {
                    m[i][j] = q;
                }
            }
        }
    }
    (Answer::Int(m[1][n - 1]), vec![])
}

/// Expected-cost optimal binary search tree.
///
/// The trace variable is the `e` matrix, snapshotted after each cell
/// is finalized: once per diagonal cell, then once per `(i, j)` cell after
/// its `r` scan completes. The `66666666` sentinel never appears in a
/// snapshot.
pub fn optimal_bst(p: &[f64], q: &[f64]) -> (Answer, StepTrace) {
    const MAXINT: f64 = 66_666_666.0;
    let n = q.len();
    let mut e = vec![vec![0f64; n]; n];
    let mut w = vec![vec![0f64; n]; n];
    let mut trace = Vec::new();
    // snapshots carry the two-decimal values the prompts print
    let rounded = |m: &[Vec<f64>]| {
        Snapshot::Matrix(
            m.iter()
                .map(|row| row.iter().map(|&x| crate::value::round2(x)).collect())
                .collect(),
        )
    };
    for i in 0..n {
        e[i][i] = q[i];
        w[i][i] = q[i];
        trace.push(rounded(&e));
    }
    for l in 1..n {
        let upper_i = n - l;
        for i in 0..upper_i {
            let j = i + l;
            e[i][j] = MAXINT;
            w[i][j] = w[i][j - 1] + p[j - 1] + q[j];
            for r in i..j {
                let t = e[i][r] + e[r + 1][j] + w[i][j];
                if t < e[i][j] {
                    e[i][j] = t;
                }
            }
            trace.push(rounded(&e));
        }
    }
    (Answer::Fixed2(crate::value::round2(e[0][n - 1])), trace)
}
