//! Sorting, searching, divide-and-conquer and string interpreters.

use crate::catalog::StepTrace;
use crate::value::{Answer, Snapshot};

pub fn insertion_sort(values: &[i64]) -> (Answer, StepTrace) {
    let mut a = values.to_vec();
    for i in 0..a.len() {
        let key = a[i];
        let mut j = i as i64 - 1;
        while j >= 0 && a[j as usize] > key {
            a.swap(j as usize + 1, j as usize);
            j -= 1;
        }
    }
    (Answer::IntList(a), vec![])
}

/// Bubble sort; the trace variable is the array `A`, snapshotted after
/// every swap.
pub fn bubble_sort(values: &[i64]) -> (Answer, StepTrace) {
    let mut a = values.to_vec();
    let n = a.len();
    let mut trace = Vec::new();
    for i in 0..n.saturating_sub(1) {
        for j in 0..n - i - 1 {
            if a[j] > a[j + 1] {
                a.swap(j, j + 1);
                trace.push(Snapshot::Ints(a.clone()));
            }
        }
    }
    (Answer::IntList(a), trace)
}

pub fn heapsort(values: &[i64]) -> (Answer, StepTrace) {
    fn heapify(a: &mut [i64], n: usize, i: usize) {
        let mut largest = i;
        let l = 2 * i + 1;
        let r = 2 * i + 2;
        if l < n && a[l] > a[largest] {
            largest = l;
        }
        if r < n && a[r] > a[largest] {
            largest = r;
        }
        if largest != i {
            a.swap(i, largest);
            heapify(a, n, largest);
        }
    }
    let mut a = values.to_vec();
    let n = a.len();
    for i in (0..n / 2).rev() {
        heapify(&mut a, n, i);
    }
    for i in (1..n).rev() {
        a.swap(0, i);
        heapify(&mut a, i, 0);
    }
    (Answer::IntList(a), vec![])
}

/// Lomuto partition with the last element as pivot.
pub fn quicksort(values: &[i64]) -> (Answer, StepTrace) {
    fn partition(a: &mut [i64], low: i64, high: i64) -> i64 {
        let pivot = a[high as usize];
        let mut i = low - 1;
        for j in low..high {
            if a[j as usize] <= pivot {
                i += 1;
                a.swap(i as usize, j as usize);
            }
        }
        a.swap((i + 1) as usize, high as usize);
        i + 1
    }
    fn sort(a: &mut [i64], low: i64, high: i64) {
        if low < high {
            let pi = partition(a, low, high);
            sort(a, low, pi - 1);
            sort(a, pi + 1, high);
        }
    }
    let mut a = values.to_vec();
    let n = a.len() as i64;
    sort(&mut a, 0, n - 1);
    (Answer::IntList(a), vec![])
}

/// Index of the first minimum (only strictly smaller elements update).
pub fn minimum(values: &[i64]) -> (Answer, StepTrace) {
    let mut min = 0usize;
    for i in 1..values.len() {
        if values[min] > values[i] {
            min = i;
        }
    }
    (Answer::Int(min as i64), vec![])
}

pub fn binary_search(values: &[i64], target: i64) -> (Answer, StepTrace) {
    let mut l = 0i64;
    let mut r = values.len() as i64 - 1;
    while l <= r {
        let mid = l + (r - l) / 2;
        match values[mid as usize].cmp(&target) {
            std::cmp::Ordering::Equal => return (Answer::Int(mid), vec![]),
            std::cmp::Ordering::Less => l = mid + 1,
            std::cmp::Ordering::Greater => r = mid - 1,
        }
    }
    (Answer::Int(-1), vec![])
}

/// k-th smallest by repeated partitioning.
///
/// The partition variant here starts `i` at `low`, swaps before
/// incrementing, and finally swaps the pivot to `i`, returning `i`.
pub fn quickselect(values: &[i64], k: i64) -> (Answer, StepTrace) {
    fn partition(a: &mut [i64], low: usize, high: usize) -> usize {
        let pivot = a[high];
        let mut i = low;
        for j in low..high {
            if a[j] <= pivot {
                a.swap(i, j);
                i += 1;
            }
        }
        a.swap(i, high);
        i
    }
    fn kth(a: &mut [i64], low: usize, high: usize, k: i64) -> i64 {
        let index = partition(a, low, high);
        let len_left = index as i64 - low as i64 + 1;
        if len_left == k {
            a[index]
        } else if len_left > k {
            kth(a, low, index - 1, k)
        } else {
            kth(a, index + 1, high, k - len_left)
        }
    }
    let mut a = values.to_vec();
    let n = a.len();
    (Answer::Int(kth(&mut a, 0, n - 1, k)), vec![])
}

/// Divide-and-conquer maximum subarray sum with the prompts' `-100`
/// sentinel for the crossing scans.
pub fn maximum_subarray(values: &[i64]) -> (Answer, StepTrace) {
    fn solve(a: &[i64], l: i64, r: i64) -> i64 {
        if r - l + 1 == 1 {
            return a[l as usize];
        }
        let m = l + (r - l) / 2;
        let left_max = solve(a, l, m);
        let right_max = solve(a, m + 1, r);
        let mut right_sum = -100i64;
        let mut sum = 0i64;
        for i in m + 1..=r {
            sum += a[i as usize];
            right_sum = right_sum.max(sum);
        }
        let mut left_sum = -100i64;
        sum = 0;
        for i in (l..=m).rev() {
            sum += a[i as usize];
            left_sum = left_sum.max(sum);
        }
        let cross_max = left_sum + right_sum;
        cross_max.max(left_max).max(right_max)
    }
    let n = values.len() as i64;
    (Answer::Int(solve(values, 0, n - 1)), vec![])
}

pub fn lcs(a: &str, b: &str) -> (Answer, StepTrace) {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let mut f = vec![vec![0i64; b.len() + 1]; a.len() + 1];
    for i in 1..=a.len() {
        for j in 1..=b.len() {
            f[i][j] = if a[i - 1] == b[j - 1] {
                f[i - 1][j - 1] + 1
            } else {
                f[i - 1][j].max(f[i][j - 1])
            };
        }
    }
    (Answer::Int(f[a.len()][b.len()]), vec![])
}

/// Naive sliding-window matcher; overlapping occurrences all count.
pub fn naive_match(pattern: &str, text: &str) -> (Answer, StepTrace) {
    let pat: Vec<char> = pattern.chars().collect();
    let txt: Vec<char> = text.chars().collect();
    let mut res = Vec::new();
    let upper_i = txt.len() as i64 - pat.len() as i64 + 1;
    for i in 0..upper_i.max(0) {
        let ok = (0..pat.len()).all(|j| txt[i as usize + j] == pat[j]);
        if ok {
            res.push(i);
        }
    }
    (Answer::IntList(res), vec![])
}

/// KMP matcher; the trace variable is the `lps` array, snapshotted after
/// every write (including writes of zero).
pub fn kmp_match(pattern: &str, text: &str) -> (Answer, StepTrace) {
    let pat: Vec<char> = pattern.chars().collect();
    let txt: Vec<char> = text.chars().collect();
    let m = pat.len();
    let n = txt.len();
    let mut lps = vec![0i64; m];
    let mut trace = Vec::new();

    let mut length = 0usize;
    let mut i = 1usize;
    while i < m {
        if pat[i] == pat[length] {
            length += 1;
            lps[i] = length as i64;
            trace.push(Snapshot::Ints(lps.clone()));
            i += 1;
        } else if length != 0 {
            length = lps[length - 1] as usize;
        } else {
            lps[i] = 0;
            trace.push(Snapshot::Ints(lps.clone()));
            i += 1;
        }
    }

    let mut res = Vec::new();
    let mut i = 0usize;
    let mut j = 0usize;
    while (n as i64 - i as i64) >= (m as i64 - j as i64) {
        if pat[j] == txt[i] {
            i += 1;
            j += 1;
        }
        if j == m {
            res.push((i - j) as i64);
            j = lps[j - 1] as usize;
        } else if i < n && pat[j] != txt[i] {
            if j != 0 {
                j = lps[j - 1] as usize;
            } else {
                i += 1;
            }
        }
    }
    (Answer::IntList(res), trace)
}
