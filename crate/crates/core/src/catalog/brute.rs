//! Independent cross-oracles.
//!
//! Every answer here is computed by a structurally different method from
//! the instrumented interpreter it checks: counting sort against the
//! comparison sorts, exhaustive recursion against the DP tables, exhaustive
//! path or subset enumeration against the graph procedures, direct
//! summation against the FFT, and the extreme-point definition against the
//! hull scans.

use super::oracles::graphs::BFS_UNREACHED;
use super::{Payload, TaskId};
use crate::error::{Error, Result};
use crate::value::{round2, Answer, Validity};

pub fn run(task: TaskId, payload: &Payload) -> Result<Answer> {
    use Payload::*;
    use TaskId::*;
    let mismatch = || {
        Err(Error::MalformedPayload {
            task,
            reason: "payload kind does not fit task".to_string(),
        })
    };
    let answer = match (task, payload) {
        (InsertionSort | BubbleSort | Heapsort | Quicksort, Numbers { values }) => {
            Answer::IntList(counting_sort(values))
        }
        (Minimum, Numbers { values }) => {
            let (idx, _) = values
                .iter()
                .enumerate()
                .min_by_key(|&(i, v)| (*v, i))
                .expect("non-empty");
            Answer::Int(idx as i64)
        }
        (BinarySearch, Search { values, target }) => {
            let pos = values.iter().position(|v| v == target);
            Answer::Int(pos.map_or(-1, |p| p as i64))
        }
        (Quickselect, Select { values, k }) => {
            let sorted = counting_sort(values);
            Answer::Int(sorted[*k as usize - 1])
        }
        (MaximumSubarray, Numbers { values }) => {
            let n = values.len();
            let mut best = i64::MIN;
            for i in 0..n {
                let mut sum = 0;
                for j in i..n {
                    sum += values[j];
                    best = best.max(sum);
                }
            }
            Answer::Int(best)
        }
        (ActivitySelection, Activities { starts, finishes }) => {
            Answer::IntList(best_activity_subset(starts, finishes))
        }
        (
            TaskScheduling,
            Jobs {
                deadlines,
                weights: _,
                slots,
            },
        ) => {
            // free-slot set instead of downward scan
            let n = deadlines.len();
            let mut free: std::collections::BTreeSet<i64> = (0..=*slots).collect();
            let mut job = vec![-1i64; n];
            for (i, &d) in deadlines.iter().enumerate() {
                let cap = (*slots).min(d);
                if let Some(&slot) = free.range(..=cap).next_back() {
                    free.remove(&slot);
                    job[slot as usize] = i as i64;
                }
            }
            Answer::IntList(job)
        }
        (MatrixChainMultiplication, Chain { dims }) => {
            fn cost(p: &[i64], i: usize, j: usize) -> i64 {
                if i == j {
                    return 0;
                }
                (i..j)
                    .map(|k| cost(p, i, k) + cost(p, k + 1, j) + p[i - 1] * p[k] * p[j])
                    .min()
                    .unwrap()
            }
            Answer::Int(cost(dims, 1, dims.len() - 1))
        }
        (Lcs, StringPair { a, b }) => {
            fn rec(a: &[char], b: &[char], i: usize, j: usize) -> i64 {
                if i == 0 || j == 0 {
                    return 0;
                }
                if a[i - 1] == b[j - 1] {
                    rec(a, b, i - 1, j - 1) + 1
                } else {
                    rec(a, b, i - 1, j).max(rec(a, b, i, j - 1))
                }
            }
            let ac: Vec<char> = a.chars().collect();
            let bc: Vec<char> = b.chars().collect();
            Answer::Int(rec(&ac, &bc, ac.len(), bc.len()))
        }
        (OptimalBst, Probabilities { p, q }) => {
            fn weight(p: &[f64], q: &[f64], i: usize, j: usize) -> f64 {
                q[i..=j].iter().sum::<f64>() + p[i..j].iter().sum::<f64>()
            }
            fn expected(p: &[f64], q: &[f64], i: usize, j: usize) -> f64 {
                if i == j {
                    return q[i];
                }
                (i..j)
                    .map(|r| expected(p, q, i, r) + expected(p, q, r + 1, j) + weight(p, q, i, j))
                    .fold(f64::INFINITY, f64::min)
            }
            Answer::Fixed2(round2(expected(p, q, 0, q.len() - 1)))
        }
        (DepthFirstSearch, Graph { adj }) => {
            let (pi, _, _) = recursive_dfs(adj);
            Answer::IntList(pi)
        }
        (BreadthFirstSearch, Graph { adj }) => {
            // unit-weight Floyd-Warshall row 0
            let n = adj.len();
            const INF: i64 = i64::MAX / 4;
            let mut dist = vec![vec![INF; n]; n];
            for (i, row) in dist.iter_mut().enumerate() {
                row[i] = 0;
            }
            for u in 0..n {
                for v in 0..n {
                    if adj[u][v] != 0 {
                        dist[u][v] = 1;
                    }
                }
            }
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        let t = dist[i][k].saturating_add(dist[k][j]);
                        if t < dist[i][j] {
                            dist[i][j] = t;
                        }
                    }
                }
            }
            Answer::IntList(
                (0..n)
                    .map(|v| if dist[0][v] >= INF { BFS_UNREACHED } else { dist[0][v] })
                    .collect(),
            )
        }
        (TopologicalSort, Graph { adj }) => {
            let (_, finish_order, _) = recursive_dfs(adj);
            let n = adj.len();
            let mut topo: Vec<i64> = (0..n as i64).collect();
            let mut topo_head = 0usize;
            let mut finished = vec![false; n];
            for &u in &finish_order {
                finished[u] = true;
                if finished[topo_head] {
                    topo[u] = topo_head as i64;
                    topo_head = u;
                }
            }
            Answer::IntList(topo)
        }
        (ArticulationPoints, Graph { adj }) => {
            let n = adj.len();
            let is_cut = (0..n)
                .map(|u| i64::from(components_without_vertex(adj, u) > 1))
                .collect();
            Answer::IntList(is_cut)
        }
        (Bridges, Graph { adj }) => Answer::PairList(definitional_bridges(adj)),
        (StronglyConnectedComponents, Graph { adj }) => {
            Answer::IntList(scc_by_closure(adj))
        }
        (
            MstKruskal,
            Edges {
                xs,
                ys,
                ws,
                vertices,
            },
        ) => Answer::Int(min_spanning_weight(xs, ys, ws, *vertices)),
        (MstPrim, Graph { adj }) => Answer::IntList(heap_prim(adj)),
        (BellmanFord | Dijkstra, Graph { adj }) => {
            let n = adj.len();
            Answer::IntList(
                (0..n)
                    .map(|v| shortest_simple_path(adj, 0, v).unwrap_or(0))
                    .collect(),
            )
        }
        (FloydWarshall, Graph { adj }) => {
            let mut dist = adj.to_vec();
            for (i, row) in dist.iter_mut().enumerate() {
                for (j, cell) in row.iter_mut().enumerate() {
                    if i != j {
                        if let Some(best) = shortest_simple_path(adj, i, j) {
                            *cell = (*cell).min(best);
                        }
                    }
                }
            }
            Answer::Matrix(dist)
        }
        (NaiveStringMatcher | KmpMatcher, Strings { pattern, text }) => {
            let pat: Vec<char> = pattern.chars().collect();
            let txt: Vec<char> = text.chars().collect();
            let mut res = Vec::new();
            if pat.len() <= txt.len() {
                for i in 0..=txt.len() - pat.len() {
                    if txt[i..i + pat.len()] == pat[..] {
                        res.push(i as i64);
                    }
                }
            }
            Answer::IntList(res)
        }
        (LeastSquareRegression, Series { xs, ys }) => {
            // centered formulation
            let n = xs.len() as f64;
            let mx = xs.iter().map(|&x| x as f64).sum::<f64>() / n;
            let my = ys.iter().map(|&y| y as f64).sum::<f64>() / n;
            let num: f64 = xs
                .iter()
                .zip(ys)
                .map(|(&x, &y)| (x as f64 - mx) * (y as f64 - my))
                .sum();
            let den: f64 = xs.iter().map(|&x| (x as f64 - mx).powi(2)).sum();
            let b = num / den;
            Answer::FloatPair(round2(my - b * mx), round2(b))
        }
        (DiscreteFourierTransform, Numbers { values }) => {
            // direct O(n^2) summation
            let n = values.len();
            let spectrum = (0..n)
                .map(|k| {
                    let (mut re, mut im) = (0f64, 0f64);
                    for (t, &v) in values.iter().enumerate() {
                        let theta = -2.0 * std::f64::consts::PI * (k * t) as f64 / n as f64;
                        re += v as f64 * theta.cos();
                        im += v as f64 * theta.sin();
                    }
                    (round2(re), round2(im))
                })
                .collect();
            Answer::ComplexList(spectrum)
        }
        (GrahamScan | JarvisMarch, Points { xs, ys }) => {
            Answer::IntList(extreme_points(xs, ys))
        }
        (ValidParentheses, Brackets { chars }) => {
            // reduce adjacent matched pairs to a fixpoint
            let mut s: Vec<char> = chars.chars().collect();
            loop {
                let mut reduced = Vec::with_capacity(s.len());
                let mut changed = false;
                let mut i = 0;
                while i < s.len() {
                    if i + 1 < s.len()
                        && matches!((s[i], s[i + 1]), ('(', ')') | ('[', ']') | ('{', '}'))
                    {
                        changed = true;
                        i += 2;
                    } else {
                        reduced.push(s[i]);
                        i += 1;
                    }
                }
                s = reduced;
                if !changed {
                    break;
                }
            }
            let verdict = if s.is_empty() {
                Validity::Valid
            } else {
                Validity::Invalid
            };
            Answer::Label(verdict)
        }
        (KeywordIteration, Keyword { .. }) => return Err(Error::NoBruteForceOracle(task)),
        _ => return mismatch(),
    };
    Ok(answer)
}

/// Comparison-free sort for bounded integer ranges.
fn counting_sort(values: &[i64]) -> Vec<i64> {
    let lo = *values.iter().min().expect("non-empty");
    let hi = *values.iter().max().expect("non-empty");
    let mut counts = vec![0usize; (hi - lo + 1) as usize];
    for &v in values {
        counts[(v - lo) as usize] += 1;
    }
    let mut out = Vec::with_capacity(values.len());
    for (offset, count) in counts.into_iter().enumerate() {
        out.extend(std::iter::repeat_n(lo + offset as i64, count));
    }
    out
}

/// Lexicographically smallest maximum-cardinality compatible subset,
/// found by exhaustive subset enumeration.
fn best_activity_subset(starts: &[i64], finishes: &[i64]) -> Vec<i64> {
    let n = starts.len();
    let mut best: Option<Vec<i64>> = None;
    for mask in 0u32..(1 << n) {
        let chosen: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let compatible = chosen
            .windows(2)
            .all(|w| starts[w[1]] >= finishes[w[0]]);
        if !compatible {
            continue;
        }
        let candidate: Vec<i64> = chosen.iter().map(|&i| i as i64).collect();
        best = match best {
            None => Some(candidate),
            Some(cur) => {
                if candidate.len() > cur.len() || (candidate.len() == cur.len() && candidate < cur)
                {
                    Some(candidate)
                } else {
                    Some(cur)
                }
            }
        };
    }
    best.unwrap_or_default()
}

/// Classic recursive DFS over ascending neighbors; returns parents, the
/// finish order, and finish times.
fn recursive_dfs(adj: &[Vec<i64>]) -> (Vec<i64>, Vec<usize>, Vec<i64>) {
    let n = adj.len();
    let mut pi: Vec<i64> = (0..n as i64).collect();
    let mut seen = vec![false; n];
    let mut finish_order = Vec::new();
    let mut finish_time = vec![0i64; n];
    let mut time = 0i64;

    fn visit(
        adj: &[Vec<i64>],
        u: usize,
        pi: &mut [i64],
        seen: &mut [bool],
        order: &mut Vec<usize>,
        finish_time: &mut [i64],
        time: &mut i64,
    ) {
        seen[u] = true;
        *time += 1;
        for v in 0..adj.len() {
            if adj[u][v] != 0 && !seen[v] {
                pi[v] = u as i64;
                visit(adj, v, pi, seen, order, finish_time, time);
            }
        }
        *time += 1;
        finish_time[u] = *time;
        order.push(u);
    }
    for s in 0..n {
        if !seen[s] {
            visit(
                adj,
                s,
                &mut pi,
                &mut seen,
                &mut finish_order,
                &mut finish_time,
                &mut time,
            );
        }
    }
    (pi, finish_order, finish_time)
}

fn components_without_vertex(adj: &[Vec<i64>], skip: usize) -> usize {
    let n = adj.len();
    let mut seen = vec![false; n];
    seen[skip] = true;
    let mut components = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        components += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if v != skip && adj[u][v] != 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
    }
    components
}

fn reachable_without_edge(adj: &[Vec<i64>], from: usize, to: usize, ea: usize, eb: usize) -> bool {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut stack = vec![from];
    seen[from] = true;
    while let Some(u) = stack.pop() {
        if u == to {
            return true;
        }
        for v in 0..n {
            let banned = (u == ea && v == eb) || (u == eb && v == ea);
            if !banned && adj[u][v] != 0 && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    false
}

/// Definitional bridges (edge removal disconnects its endpoints), oriented
/// parent-to-child and ordered by the recursive DFS finish events, which is
/// the order the reference procedure reports them in.
fn definitional_bridges(adj: &[Vec<i64>]) -> Vec<(i64, i64)> {
    let (pi, finish_order, _) = recursive_dfs(adj);
    let n = adj.len();
    let mut out = Vec::new();
    for &u in &finish_order {
        for v in 0..n {
            if pi[v] == u as i64 && v != u && !reachable_without_edge(adj, u, v, u, v) {
                out.push((u as i64, v as i64));
            }
        }
    }
    out
}

/// SCC labels from pairwise reachability closure; each component is labeled
/// by its member with the largest recursive-DFS finish time, which is the
/// root that discovers it in the transposed pass.
fn scc_by_closure(adj: &[Vec<i64>]) -> Vec<i64> {
    let n = adj.len();
    let mut reach = vec![vec![false; n]; n];
    for (i, row) in reach.iter_mut().enumerate() {
        row[i] = true;
    }
    for u in 0..n {
        for v in 0..n {
            if adj[u][v] != 0 {
                reach[u][v] = true;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    let (_, _, finish_time) = recursive_dfs(adj);
    let mut label = vec![0i64; n];
    for u in 0..n {
        let mut rep = u;
        for v in 0..n {
            if reach[u][v] && reach[v][u] && finish_time[v] > finish_time[rep] {
                rep = v;
            }
        }
        label[u] = rep as i64;
    }
    label
}

/// Minimum spanning weight by enumerating all (n-1)-edge subsets.
fn min_spanning_weight(xs: &[i64], ys: &[i64], ws: &[i64], n: usize) -> i64 {
    let m = xs.len();
    let need = n - 1;
    let mut best = i64::MAX;
    for mask in 0u32..(1 << m) {
        if mask.count_ones() as usize != need {
            continue;
        }
        // check the chosen edges form a spanning tree
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                parent[x] = find(parent, parent[x]);
            }
            parent[x]
        }
        let mut ok = true;
        let mut weight = 0;
        for e in 0..m {
            if mask & (1 << e) == 0 {
                continue;
            }
            let (a, b) = (find(&mut parent, xs[e] as usize), find(&mut parent, ys[e] as usize));
            if a == b {
                ok = false;
                break;
            }
            parent[a] = b;
            weight += ws[e];
        }
        if ok && weight < best {
            best = weight;
        }
    }
    best
}

/// Binary-heap Prim with the same strict-improvement and lowest-index tie
/// rules as the array-scan interpreter.
fn heap_prim(adj: &[Vec<i64>]) -> Vec<i64> {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;
    let n = adj.len();
    let mut pi = vec![0i64; n];
    let mut key = vec![0i64; n];
    let mut mark = vec![false; n];
    let mut in_queue = vec![false; n];
    let mut heap: BinaryHeap<Reverse<(i64, usize)>> = BinaryHeap::new();
    heap.push(Reverse((0, 0)));
    in_queue[0] = true;

    while let Some(Reverse((k, u))) = heap.pop() {
        if mark[u] || k > key[u] {
            continue;
        }
        mark[u] = true;
        in_queue[u] = false;
        for v in 0..n {
            if adj[u][v] != 0 && !mark[v] && (!in_queue[v] || adj[u][v] < key[v]) {
                pi[v] = u as i64;
                key[v] = adj[u][v];
                in_queue[v] = true;
                heap.push(Reverse((key[v], v)));
            }
        }
    }
    pi
}

/// Minimum simple-path weight by exhaustive enumeration.
fn shortest_simple_path(adj: &[Vec<i64>], from: usize, to: usize) -> Option<i64> {
    fn explore(
        adj: &[Vec<i64>],
        u: usize,
        to: usize,
        visited: &mut Vec<bool>,
        cost: i64,
        best: &mut Option<i64>,
    ) {
        if u == to {
            *best = Some(best.map_or(cost, |b: i64| b.min(cost)));
            return;
        }
        for v in 0..adj.len() {
            if adj[u][v] != 0 && !visited[v] {
                visited[v] = true;
                explore(adj, v, to, visited, cost + adj[u][v], best);
                visited[v] = false;
            }
        }
    }
    if from == to {
        return Some(0);
    }
    let mut visited = vec![false; adj.len()];
    visited[from] = true;
    let mut best = None;
    explore(adj, from, to, &mut visited, 0, &mut best);
    best
}

/// Hull membership by the extreme-point definition: a point is on the hull
/// iff it is not in the convex hull of the remaining points. Exact integer
/// arithmetic on the two-decimal grid.
fn extreme_points(xs: &[f64], ys: &[f64]) -> Vec<i64> {
    let n = xs.len();
    let xi: Vec<i64> = xs.iter().map(|&x| (x * 100.0).round() as i64).collect();
    let yi: Vec<i64> = ys.iter().map(|&y| (y * 100.0).round() as i64).collect();

    let cross = |o: (i64, i64), a: (i64, i64), b: (i64, i64)| -> i64 {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let on_segment = |a: (i64, i64), b: (i64, i64), p: (i64, i64)| -> bool {
        cross(a, b, p) == 0
            && p.0 >= a.0.min(b.0)
            && p.0 <= a.0.max(b.0)
            && p.1 >= a.1.min(b.1)
            && p.1 <= a.1.max(b.1)
    };
    let in_triangle = |a: (i64, i64), b: (i64, i64), c: (i64, i64), p: (i64, i64)| -> bool {
        let d1 = cross(a, b, p);
        let d2 = cross(b, c, p);
        let d3 = cross(c, a, p);
        let has_neg = d1 < 0 || d2 < 0 || d3 < 0;
        let has_pos = d1 > 0 || d2 > 0 || d3 > 0;
        !(has_neg && has_pos)
    };

    (0..n)
        .map(|p| {
            let pt = (xi[p], yi[p]);
            let others: Vec<(i64, i64)> = (0..n).filter(|&q| q != p).map(|q| (xi[q], yi[q])).collect();
            let mut inside = others.contains(&pt);
            'outer: for a in 0..others.len() {
                if inside {
                    break;
                }
                for b in a + 1..others.len() {
                    if on_segment(others[a], others[b], pt) {
                        inside = true;
                        break 'outer;
                    }
                    for c in b + 1..others.len() {
                        let degenerate = cross(others[a], others[b], others[c]) == 0;
                        if !degenerate && in_triangle(others[a], others[b], others[c], pt) {
                            inside = true;
                            break 'outer;
                        }
                    }
                }
            }
            i64::from(!inside)
        })
        .collect()
}
