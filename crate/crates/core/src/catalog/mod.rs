//! The task registry: 32 classical-algorithm tasks with seeded instance
//! samplers, instrumented reference interpreters (gold answers + gold step
//! traces) and independent brute-force cross-oracles.

mod brute;
mod oracles;
mod payload;
mod sample;

pub use payload::Payload;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::value::{Answer, CompareMode, Snapshot};

/// Identifier of one benchmark task.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TaskId {
    InsertionSort,
    BubbleSort,
    Heapsort,
    Quicksort,
    Minimum,
    BinarySearch,
    Quickselect,
    MaximumSubarray,
    ActivitySelection,
    TaskScheduling,
    MatrixChainMultiplication,
    Lcs,
    OptimalBst,
    DepthFirstSearch,
    BreadthFirstSearch,
    TopologicalSort,
    ArticulationPoints,
    Bridges,
    StronglyConnectedComponents,
    MstKruskal,
    MstPrim,
    BellmanFord,
    Dijkstra,
    FloydWarshall,
    NaiveStringMatcher,
    KmpMatcher,
    LeastSquareRegression,
    DiscreteFourierTransform,
    GrahamScan,
    JarvisMarch,
    ValidParentheses,
    KeywordIteration,
}

impl TaskId {
    pub const ALL: [TaskId; 32] = [
        TaskId::InsertionSort,
        TaskId::BubbleSort,
        TaskId::Heapsort,
        TaskId::Quicksort,
        TaskId::Minimum,
        TaskId::BinarySearch,
        TaskId::Quickselect,
        TaskId::MaximumSubarray,
        TaskId::ActivitySelection,
        TaskId::TaskScheduling,
        TaskId::MatrixChainMultiplication,
        TaskId::Lcs,
        TaskId::OptimalBst,
        TaskId::DepthFirstSearch,
        TaskId::BreadthFirstSearch,
        TaskId::TopologicalSort,
        TaskId::ArticulationPoints,
        TaskId::Bridges,
        TaskId::StronglyConnectedComponents,
        TaskId::MstKruskal,
        TaskId::MstPrim,
        TaskId::BellmanFord,
        TaskId::Dijkstra,
        TaskId::FloydWarshall,
        TaskId::NaiveStringMatcher,
        TaskId::KmpMatcher,
        TaskId::LeastSquareRegression,
        TaskId::DiscreteFourierTransform,
        TaskId::GrahamScan,
        TaskId::JarvisMarch,
        TaskId::ValidParentheses,
        TaskId::KeywordIteration,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TaskId::InsertionSort => "insertion_sort",
            TaskId::BubbleSort => "bubble_sort",
            TaskId::Heapsort => "heapsort",
            TaskId::Quicksort => "quicksort",
            TaskId::Minimum => "minimum",
            TaskId::BinarySearch => "binary_search",
            TaskId::Quickselect => "quickselect",
            TaskId::MaximumSubarray => "maximum_subarray",
            TaskId::ActivitySelection => "activity_selection",
            TaskId::TaskScheduling => "task_scheduling",
            TaskId::MatrixChainMultiplication => "matrix_chain_multiplication",
            TaskId::Lcs => "lcs",
            TaskId::OptimalBst => "optimal_bst",
            TaskId::DepthFirstSearch => "depth_first_search",
            TaskId::BreadthFirstSearch => "breadth_first_search",
            TaskId::TopologicalSort => "topological_sort",
            TaskId::ArticulationPoints => "articulation_points",
            TaskId::Bridges => "bridges",
            TaskId::StronglyConnectedComponents => "strongly_connected_components",
            TaskId::MstKruskal => "mst_kruskal",
            TaskId::MstPrim => "mst_prim",
            TaskId::BellmanFord => "bellman_ford",
            TaskId::Dijkstra => "dijkstra",
            TaskId::FloydWarshall => "floyd_warshall",
            TaskId::NaiveStringMatcher => "naive_string_matcher",
            TaskId::KmpMatcher => "kmp_matcher",
            TaskId::LeastSquareRegression => "least_square_regression",
            TaskId::DiscreteFourierTransform => "discrete_fourier_transform",
            TaskId::GrahamScan => "graham_scan",
            TaskId::JarvisMarch => "jarvis_march",
            TaskId::ValidParentheses => "valid_parentheses",
            TaskId::KeywordIteration => "keyword_iteration",
        }
    }

    pub fn parse(s: &str) -> Result<TaskId> {
        TaskId::ALL
            .iter()
            .copied()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::UnknownTask(s.to_string()))
    }

    /// The 26 tasks of the CLRS-mini set, in registry order.
    pub fn clrs_mini() -> Vec<TaskId> {
        TaskId::ALL
            .iter()
            .copied()
            .filter(|t| !matches!(spec(*t).family, Family::Numeric | Family::BigBench | Family::Constraint))
            .collect()
    }

    /// The four numeric-operation-intensive tasks.
    pub fn clrs_numeric() -> Vec<TaskId> {
        TaskId::ALL
            .iter()
            .copied()
            .filter(|t| spec(*t).family == Family::Numeric)
            .collect()
    }
}

impl std::fmt::Display for TaskId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Task category.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Sorting,
    Searching,
    Strings,
    DivideAndConquer,
    Greedy,
    DynamicProgramming,
    Graphs,
    Numeric,
    BigBench,
    Constraint,
}

/// Kind of the final answer a task produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AnswerKind {
    ScalarInt,
    /// Scalar printed to two decimals.
    ScalarFixed2,
    IntList,
    IndexList,
    /// List of integer pairs.
    PairList,
    /// Square integer matrix.
    Matrix,
    FloatPair,
    ComplexList,
    BinaryLabel,
}

/// The variable whose snapshots form the gold trace, for the five
/// trace-scored tasks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceVar {
    /// Variable name as it appears in the prompts.
    pub name: &'static str,
    /// What one snapshot looks like.
    pub shape: TraceShape,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TraceShape {
    IntArray,
    Queue,
    Fixed2Matrix,
}

/// Registry entry for one task.
#[derive(Debug, Clone, Serialize)]
pub struct AlgorithmSpec {
    pub task_id: TaskId,
    pub family: Family,
    /// Admitted instance sizes (element counts / vertex counts; for the
    /// keyword task the iteration counts; for valid parentheses the maximum
    /// string length).
    pub sizes: &'static [usize],
    /// Input must be emitted sorted on the designated key.
    pub presorted: bool,
    pub trace_var: Option<TraceVar>,
    pub answer_kind: AnswerKind,
    pub compare_mode: CompareMode,
}

/// Ordered sequence of snapshots of the designated trace variable.
pub type StepTrace = Vec<Snapshot>;

/// A seeded, concrete problem input plus its oracle-computed gold final
/// answer and gold step trace.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub task_id: TaskId,
    pub seed: u64,
    pub size: usize,
    pub payload: Payload,
    pub gold_answer: Answer,
    pub gold_trace: StepTrace,
}

/// Returns the registry entry for `task`.
pub fn spec(task: TaskId) -> &'static AlgorithmSpec {
    &REGISTRY[TaskId::ALL.iter().position(|t| *t == task).unwrap()]
}

/// Returns all 32 task specs in stable registry order.
pub fn list_tasks() -> &'static [AlgorithmSpec] {
    &REGISTRY[..]
}

const fn trace(name: &'static str, shape: TraceShape) -> Option<TraceVar> {
    Some(TraceVar { name, shape })
}

macro_rules! entry {
    ($task:ident, $family:ident, $sizes:expr, $presorted:expr, $tv:expr, $ak:ident, $cmp:ident) => {
        AlgorithmSpec {
            task_id: TaskId::$task,
            family: Family::$family,
            sizes: $sizes,
            presorted: $presorted,
            trace_var: $tv,
            answer_kind: AnswerKind::$ak,
            compare_mode: CompareMode::$cmp,
        }
    };
}

static REGISTRY: [AlgorithmSpec; 32] = [
    entry!(InsertionSort, Sorting, &[4, 5], false, None, IntList, Exact),
    entry!(BubbleSort, Sorting, &[4, 5], false, trace("A", TraceShape::IntArray), IntList, Exact),
    entry!(Heapsort, Sorting, &[4, 5], false, None, IntList, Exact),
    entry!(Quicksort, Sorting, &[4, 5], false, None, IntList, Exact),
    entry!(Minimum, Searching, &[9, 10], false, None, ScalarInt, Exact),
    entry!(BinarySearch, Searching, &[9, 10], false, None, ScalarInt, Exact),
    entry!(Quickselect, Searching, &[4, 5], false, None, ScalarInt, Exact),
    entry!(MaximumSubarray, DivideAndConquer, &[4, 5], false, None, ScalarInt, Exact),
    entry!(ActivitySelection, Greedy, &[9, 10], true, None, IndexList, Exact),
    entry!(TaskScheduling, Greedy, &[9, 10], true, trace("job", TraceShape::IntArray), IntList, Exact),
    entry!(MatrixChainMultiplication, DynamicProgramming, &[4, 5], false, None, ScalarInt, Exact),
    entry!(Lcs, DynamicProgramming, &[4, 5, 6], false, None, ScalarInt, Exact),
    entry!(OptimalBst, DynamicProgramming, &[4, 5], false, trace("e", TraceShape::Fixed2Matrix), ScalarFixed2, Exact),
    entry!(DepthFirstSearch, Graphs, &[4, 5], false, None, IntList, Exact),
    entry!(BreadthFirstSearch, Graphs, &[4, 5], false, trace("Q", TraceShape::Queue), IntList, Exact),
    entry!(TopologicalSort, Graphs, &[4, 5], false, None, IntList, Exact),
    entry!(ArticulationPoints, Graphs, &[3, 4], false, None, IntList, Exact),
    entry!(Bridges, Graphs, &[3, 4], false, None, PairList, Exact),
    entry!(StronglyConnectedComponents, Graphs, &[4, 5], false, None, IntList, Exact),
    entry!(MstKruskal, Graphs, &[4, 5], true, None, ScalarInt, Exact),
    entry!(MstPrim, Graphs, &[4, 5], false, None, IntList, Exact),
    entry!(BellmanFord, Graphs, &[4, 5], false, None, IntList, Exact),
    entry!(Dijkstra, Graphs, &[4, 5], false, None, IntList, Exact),
    entry!(FloydWarshall, Graphs, &[4], false, None, Matrix, Exact),
    entry!(NaiveStringMatcher, Strings, &[4, 5], false, None, IndexList, Exact),
    entry!(KmpMatcher, Strings, &[4, 5], false, trace("lps", TraceShape::IntArray), IndexList, Exact),
    entry!(LeastSquareRegression, Numeric, &[9, 10], false, None, FloatPair, AbsTol),
    entry!(DiscreteFourierTransform, Numeric, &[8], false, None, ComplexList, ComplexAbsTol),
    entry!(GrahamScan, Numeric, &[9, 10], false, None, IntList, AbsTol),
    entry!(JarvisMarch, Numeric, &[9, 10], false, None, IntList, AbsTol),
    entry!(ValidParentheses, BigBench, &[20], false, None, BinaryLabel, Exact),
    entry!(KeywordIteration, Constraint, &[5, 10, 15, 20, 25], false, None, ScalarInt, Exact),
];

/// The 20 initial keywords of the iterative sentence-generation task.
pub const KEYWORDS: [&str; 20] = [
    "art", "business", "computer", "data", "entertainment", "environment", "fashion",
    "investigation", "lifestyle", "market", "medicine", "music", "politic", "science", "sports",
    "technology", "trade", "traffic", "weather", "world",
];

/// Samples a deterministic instance: payload, gold answer and gold trace
/// are pure functions of `(task, size, seed)`.
pub fn sample_instance(task: TaskId, size: usize, seed: u64) -> Result<Instance> {
    let sp = spec(task);
    if !sp.sizes.contains(&size) {
        return Err(Error::SizeNotAdmitted {
            task,
            size,
            admitted: sp.sizes.to_vec(),
        });
    }
    let payload = sample::sample_payload(task, size, seed)?;
    let (gold_answer, gold_trace) = run_oracle(task, &payload)?;
    Ok(Instance {
        task_id: task,
        seed,
        size,
        payload,
        gold_answer,
        gold_trace,
    })
}

/// Runs the instrumented reference interpreter for `task` on `payload`.
///
/// Returns the gold final answer together with the gold step trace (empty
/// for tasks without a designated trace variable). Pure and deterministic.
pub fn run_oracle(task: TaskId, payload: &Payload) -> Result<(Answer, StepTrace)> {
    payload.validate(task)?;
    oracles::run(task, payload)
}

/// Computes the gold answer by a structurally different method, for
/// cross-checking [`run_oracle`].
///
/// The keyword task has no independent oracle and returns
/// [`Error::NoBruteForceOracle`].
pub fn brute_force_oracle(task: TaskId, payload: &Payload) -> Result<Answer> {
    payload.validate(task)?;
    brute::run(task, payload)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_has_32_unique_stable_entries() {
        let tasks = list_tasks();
        assert_eq!(tasks.len(), 32);
        for (i, t) in tasks.iter().enumerate() {
            assert_eq!(TaskId::ALL[i], t.task_id);
            assert_eq!(TaskId::parse(t.task_id.as_str()).unwrap(), t.task_id);
        }
    }

    #[test]
    fn instance_records_serialize_with_fixed_field_order() {
        let inst = sample_instance(TaskId::DiscreteFourierTransform, 8, 1).unwrap();
        let json = serde_json::to_string(&inst).unwrap();
        let task_pos = json.find("\"task_id\"").unwrap();
        let seed_pos = json.find("\"seed\"").unwrap();
        let payload_pos = json.find("\"payload\"").unwrap();
        let answer_pos = json.find("\"gold_answer\"").unwrap();
        let trace_pos = json.find("\"gold_trace\"").unwrap();
        assert!(task_pos < seed_pos && seed_pos < payload_pos);
        assert!(payload_pos < answer_pos && answer_pos < trace_pos);
        // complex entries use the a+bj form
        assert!(json.contains("j\""), "spectrum serialized as a+bj strings: {json}");
        let back: Instance = serde_json::from_str(&json).unwrap();
        assert_eq!(back, inst);
    }

    #[test]
    fn oracle_reruns_reproduce_gold_values() {
        for task in [TaskId::Quicksort, TaskId::OptimalBst, TaskId::Dijkstra] {
            let spec = spec(task);
            let inst = sample_instance(task, spec.sizes[0], 9).unwrap();
            let (answer, trace) = run_oracle(task, &inst.payload).unwrap();
            assert_eq!(answer, inst.gold_answer);
            assert_eq!(trace, inst.gold_trace);
        }
    }
}
