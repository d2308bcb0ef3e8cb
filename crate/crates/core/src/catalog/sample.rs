//! Seeded payload samplers.
//!
//! Value ranges are part of the external contract:
//!
//! - array elements: integers uniform in `[0, 20)` (maximum subarray uses
//!   `[-10, 10)` so that negative runs occur),
//! - edge weights: integers uniform in `[1, 10)`,
//! - graph edges: present independently with probability 0.5 (undirected
//!   tasks symmetrized, zero diagonal),
//! - matching alphabet `{A,B,C}`, subsequence alphabet `{a,b,c}`,
//! - optimal-BST probabilities: uniform in `[0, 0.25)` rounded to two
//!   decimals, not normalized,
//! - hull coordinates: uniform in `[0, 20)` rounded to two decimals,
//! - regression: distinct sorted x in `[0, 100)`, y uniform in `[0, 300)`.
//!
//! Samplers that need structure (reachable start vertex, connected graph)
//! reject and re-draw from the same seeded stream, so rejection is
//! deterministic.

use super::payload::Payload;
use super::TaskId;
use crate::error::Result;
use crate::rng::SplitMix64;
use crate::value::round2;

pub fn sample_payload(task: TaskId, size: usize, seed: u64) -> Result<Payload> {
    let mut rng = SplitMix64::new(seed);
    let payload = match task {
        TaskId::InsertionSort | TaskId::BubbleSort | TaskId::Heapsort | TaskId::Quicksort => {
            Payload::Numbers {
                values: ints(&mut rng, size, 0, 20),
            }
        }
        TaskId::Minimum => Payload::Numbers {
            values: ints(&mut rng, size, 0, 20),
        },
        TaskId::MaximumSubarray => Payload::Numbers {
            values: ints(&mut rng, size, -10, 10),
        },
        TaskId::BinarySearch => {
            let values = distinct_sorted(&mut rng, size, 0, 20);
            // half present, half absent targets
            let target = if rng.chance(0.5) {
                values[rng.below(size as u64) as usize]
            } else {
                loop {
                    let t = rng.range_i64(0, 20);
                    if !values.contains(&t) {
                        break t;
                    }
                }
            };
            Payload::Search { values, target }
        }
        TaskId::Quickselect => Payload::Select {
            values: ints(&mut rng, size, 0, 20),
            k: rng.range_i64(1, size as i64 + 1),
        },
        TaskId::ActivitySelection => {
            let mut pairs: Vec<(i64, i64)> = (0..size)
                .map(|_| {
                    let s = rng.range_i64(0, 10);
                    let f = s + rng.range_i64(1, 8);
                    (s, f)
                })
                .collect();
            pairs.sort_by_key(|&(_, f)| f);
            Payload::Activities {
                starts: pairs.iter().map(|&(s, _)| s).collect(),
                finishes: pairs.iter().map(|&(_, f)| f).collect(),
            }
        }
        TaskId::TaskScheduling => {
            let slots = size as i64 - 1;
            let deadlines = (0..size).map(|_| rng.range_i64(0, slots + 1)).collect();
            let mut weights = ints(&mut rng, size, 1, 100);
            weights.sort();
            Payload::Jobs {
                deadlines,
                weights,
                slots,
            }
        }
        TaskId::MatrixChainMultiplication => Payload::Chain {
            dims: ints(&mut rng, size, 1, 10),
        },
        TaskId::Lcs => Payload::StringPair {
            a: word(&mut rng, size, b'a'),
            b: word(&mut rng, size - 1, b'a'),
        },
        TaskId::OptimalBst => {
            let p = (0..size - 1).map(|_| prob(&mut rng)).collect();
            let q = (0..size).map(|_| prob(&mut rng)).collect();
            Payload::Probabilities { p, q }
        }
        TaskId::DepthFirstSearch | TaskId::TopologicalSort => Payload::Graph {
            adj: digraph(&mut rng, size),
        },
        TaskId::BreadthFirstSearch => {
            // reject graphs whose start vertex has no outgoing edge
            let adj = loop {
                let a = digraph(&mut rng, size);
                if a[0].iter().any(|&e| e != 0) {
                    break a;
                }
            };
            Payload::Graph { adj }
        }
        TaskId::StronglyConnectedComponents => Payload::Graph {
            adj: digraph(&mut rng, size),
        },
        TaskId::ArticulationPoints | TaskId::Bridges => {
            let adj = loop {
                let a = ugraph(&mut rng, size, false);
                if connected(&a) {
                    break a;
                }
            };
            Payload::Graph { adj }
        }
        TaskId::MstPrim => {
            let adj = loop {
                let a = ugraph(&mut rng, size, true);
                if connected(&a) {
                    break a;
                }
            };
            Payload::Graph { adj }
        }
        TaskId::MstKruskal => {
            let adj = loop {
                let a = ugraph(&mut rng, size, true);
                if connected(&a) {
                    break a;
                }
            };
            let mut edges: Vec<(i64, i64, i64)> = Vec::new();
            for u in 0..size {
                for v in u + 1..size {
                    if adj[u][v] != 0 {
                        edges.push((adj[u][v], u as i64, v as i64));
                    }
                }
            }
            edges.sort();
            Payload::Edges {
                xs: edges.iter().map(|&(_, u, _)| u).collect(),
                ys: edges.iter().map(|&(_, _, v)| v).collect(),
                ws: edges.iter().map(|&(w, _, _)| w).collect(),
                vertices: size,
            }
        }
        TaskId::BellmanFord | TaskId::Dijkstra => {
            let adj = loop {
                let a = ugraph(&mut rng, size, true);
                if a[0].iter().any(|&e| e != 0) {
                    break a;
                }
            };
            Payload::Graph { adj }
        }
        TaskId::FloydWarshall => {
            // complete directed weight matrix with zero diagonal
            let adj = (0..size)
                .map(|i| {
                    (0..size)
                        .map(|j| if i == j { 0 } else { rng.range_i64(1, 10) })
                        .collect()
                })
                .collect();
            Payload::Graph { adj }
        }
        TaskId::NaiveStringMatcher | TaskId::KmpMatcher => Payload::Strings {
            pattern: word(&mut rng, 3, b'A'),
            text: word(&mut rng, size, b'A'),
        },
        TaskId::LeastSquareRegression => Payload::Series {
            xs: distinct_sorted(&mut rng, size, 0, 100),
            ys: ints(&mut rng, size, 0, 300),
        },
        TaskId::DiscreteFourierTransform => Payload::Numbers {
            values: ints(&mut rng, size, 0, 10),
        },
        TaskId::GrahamScan | TaskId::JarvisMarch => {
            // reject duplicate points and exact collinear triples; the hull
            // procedures' tie handling is a design decision and degenerate
            // sets would make vertex membership ambiguous
            let (xs, ys) = loop {
                let xs: Vec<f64> = (0..size).map(|_| coord(&mut rng)).collect();
                let ys: Vec<f64> = (0..size).map(|_| coord(&mut rng)).collect();
                if point_set_in_general_position(&xs, &ys) {
                    break (xs, ys);
                }
            };
            Payload::Points { xs, ys }
        }
        TaskId::ValidParentheses => Payload::Brackets {
            chars: brackets(&mut rng, size),
        },
        // the seed selects the word directly (mod 20) so consecutive seeds
        // enumerate the word list; the suite runner relies on that to cover
        // the 20-word by 5-count grid exactly
        TaskId::KeywordIteration => Payload::Keyword {
            word: super::KEYWORDS[(seed % super::KEYWORDS.len() as u64) as usize].to_string(),
            iterations: size,
        },
    };
    payload.validate(task)?;
    Ok(payload)
}

fn ints(rng: &mut SplitMix64, n: usize, lo: i64, hi: i64) -> Vec<i64> {
    (0..n).map(|_| rng.range_i64(lo, hi)).collect()
}

fn distinct_sorted(rng: &mut SplitMix64, n: usize, lo: i64, hi: i64) -> Vec<i64> {
    assert!((hi - lo) as usize >= n);
    let mut out: Vec<i64> = Vec::with_capacity(n);
    while out.len() < n {
        let v = rng.range_i64(lo, hi);
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out.sort();
    out
}

fn word(rng: &mut SplitMix64, n: usize, base: u8) -> String {
    (0..n)
        .map(|_| (base + rng.below(3) as u8) as char)
        .collect()
}

fn prob(rng: &mut SplitMix64) -> f64 {
    round2(rng.unit_f64() * 0.25)
}

fn coord(rng: &mut SplitMix64) -> f64 {
    round2(rng.unit_f64() * 20.0)
}

fn digraph(rng: &mut SplitMix64, n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i != j && rng.chance(0.5) { 1 } else { 0 })
                .collect()
        })
        .collect()
}

fn ugraph(rng: &mut SplitMix64, n: usize, weighted: bool) -> Vec<Vec<i64>> {
    let mut adj = vec![vec![0i64; n]; n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(0.5) {
                let w = if weighted { rng.range_i64(1, 10) } else { 1 };
                adj[u][v] = w;
                adj[v][u] = w;
            }
        }
    }
    adj
}

/// No duplicate points and no three exactly collinear points, checked in
/// exact integer arithmetic on the two-decimal grid.
fn point_set_in_general_position(xs: &[f64], ys: &[f64]) -> bool {
    let n = xs.len();
    let xi: Vec<i64> = xs.iter().map(|&x| (x * 100.0).round() as i64).collect();
    let yi: Vec<i64> = ys.iter().map(|&y| (y * 100.0).round() as i64).collect();
    for a in 0..n {
        for b in a + 1..n {
            if xi[a] == xi[b] && yi[a] == yi[b] {
                return false;
            }
            for c in b + 1..n {
                let cross =
                    (xi[b] - xi[a]) * (yi[c] - yi[a]) - (yi[b] - yi[a]) * (xi[c] - xi[a]);
                if cross == 0 {
                    return false;
                }
            }
        }
    }
    true
}

fn connected(adj: &[Vec<i64>]) -> bool {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if adj[u][v] != 0 && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Bracket strings: half the draws are balanced constructions, half are
/// uniform random bracket characters, so Valid/Invalid labels stay roughly
/// balanced.
fn brackets(rng: &mut SplitMix64, max_len: usize) -> String {
    const OPEN: [char; 3] = ['(', '[', '{'];
    const CLOSE: [char; 3] = [')', ']', '}'];
    if rng.chance(0.5) {
        // balanced string of even length in [2, max_len]
        let pairs = rng.range_i64(1, (max_len / 2) as i64 + 1) as usize;
        let mut out = String::new();
        let mut stack: Vec<usize> = Vec::new();
        let mut opens_left = pairs;
        while out.len() < pairs * 2 {
            let must_close = opens_left == 0;
            let must_open = stack.is_empty();
            if must_open || (!must_close && rng.chance(0.5)) {
                let t = rng.below(3) as usize;
                out.push(OPEN[t]);
                stack.push(t);
                opens_left -= 1;
            } else {
                out.push(CLOSE[stack.pop().unwrap()]);
            }
        }
        out
    } else {
        let len = rng.range_i64(2, max_len as i64 + 1) as usize;
        (0..len)
            .map(|_| {
                let t = rng.below(6) as usize;
                if t < 3 {
                    OPEN[t]
                } else {
                    CLOSE[t - 3]
                }
            })
            .collect()
    }
}
