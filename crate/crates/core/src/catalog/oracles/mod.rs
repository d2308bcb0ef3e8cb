//! Instrumented reference interpreters.
//!
//! Each interpreter mirrors the control flow of the corresponding prompt
//! procedure (including tie-breaking and sentinel conventions), so the gold
//! answer and gold trace are exactly what a faithful executor of the prompt
//! would produce.

mod basic;
mod bigbench;
pub(crate) mod graphs;
mod greedy_dp;
mod numeric;

use super::{Payload, StepTrace, TaskId};
use crate::error::{Error, Result};
use crate::value::Answer;

pub fn run(task: TaskId, payload: &Payload) -> Result<(Answer, StepTrace)> {
    use Payload::*;
    use TaskId::*;
    let mismatch = || {
        Err(Error::MalformedPayload {
            task,
            reason: "payload kind does not fit task".to_string(),
        })
    };
    let out = match (task, payload) {
        (InsertionSort, Numbers { values }) => basic::insertion_sort(values),
        (BubbleSort, Numbers { values }) => basic::bubble_sort(values),
        (Heapsort, Numbers { values }) => basic::heapsort(values),
        (Quicksort, Numbers { values }) => basic::quicksort(values),
        (Minimum, Numbers { values }) => basic::minimum(values),
        (BinarySearch, Search { values, target }) => basic::binary_search(values, *target),
        (Quickselect, Select { values, k }) => basic::quickselect(values, *k),
        (MaximumSubarray, Numbers { values }) => basic::maximum_subarray(values),
        (ActivitySelection, Activities { starts, finishes }) => {
            greedy_dp::activity_selection(starts, finishes)
        }
        (
            TaskScheduling,
            Jobs {
                deadlines,
                weights: _,
                slots,
            },
        ) => greedy_dp::task_scheduling(deadlines, *slots),
        (MatrixChainMultiplication, Chain { dims }) => greedy_dp::matrix_chain(dims),
        (Lcs, StringPair { a, b }) => basic::lcs(a, b),
        (OptimalBst, Probabilities { p, q }) => greedy_dp::optimal_bst(p, q),
        (DepthFirstSearch, Graph { adj }) => graphs::depth_first_search(adj),
        (BreadthFirstSearch, Graph { adj }) => graphs::breadth_first_search(adj),
        (TopologicalSort, Graph { adj }) => graphs::topological_sort(adj),
        (ArticulationPoints, Graph { adj }) => graphs::articulation_points(adj),
        (Bridges, Graph { adj }) => graphs::bridges(adj),
        (StronglyConnectedComponents, Graph { adj }) => graphs::strongly_connected(adj),
        (
            MstKruskal,
            Edges {
                xs,
                ys,
                ws,
                vertices,
            },
        ) => graphs::mst_kruskal(xs, ys, ws, *vertices),
        (MstPrim, Graph { adj }) => graphs::mst_prim(adj),
        (BellmanFord, Graph { adj }) => graphs::bellman_ford(adj),
        (Dijkstra, Graph { adj }) => graphs::dijkstra(adj),
        (FloydWarshall, Graph { adj }) => graphs::floyd_warshall(adj),
        (NaiveStringMatcher, Strings { pattern, text }) => basic::naive_match(pattern, text),
        (KmpMatcher, Strings { pattern, text }) => basic::kmp_match(pattern, text),
        (LeastSquareRegression, Series { xs, ys }) => numeric::least_square_regression(xs, ys),
        (DiscreteFourierTransform, Numbers { values }) => numeric::dft(values),
        (GrahamScan, Points { xs, ys }) => numeric::graham_scan(xs, ys),
        (JarvisMarch, Points { xs, ys }) => numeric::jarvis_march(xs, ys),
        (ValidParentheses, Brackets { chars }) => bigbench::valid_parentheses(chars),
        (KeywordIteration, Keyword { iterations, .. }) => bigbench::keyword(*iterations),
        _ => return mismatch(),
    };
    Ok(out)
}
