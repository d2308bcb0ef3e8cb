//! Floating-point interpreters: regression, DFT and the two convex hulls.

use crate::catalog::StepTrace;
use crate::value::{round2, Answer};

/// Least-squares fit `y = a + b*x` via the sum formulation; answers the
/// pair `(a, b)` rounded to two decimals.
pub fn least_square_regression(xs: &[i64], ys: &[i64]) -> (Answer, StepTrace) {
    let n = xs.len() as f64;
    let sx: f64 = xs.iter().map(|&x| x as f64).sum();
    let sy: f64 = ys.iter().map(|&y| y as f64).sum();
    let sxsy: f64 = xs.iter().zip(ys).map(|(&x, &y)| (x * y) as f64).sum();
    let sx2: f64 = xs.iter().map(|&x| (x * x) as f64).sum();
    let b = (n * sxsy - sx * sy) / (n * sx2 - sx * sx);
    let a = sy / n - b * (sx / n);
    (Answer::FloatPair(round2(a), round2(b)), vec![])
}

/// Radix-2 decimation-in-time FFT; answers the spectrum rounded to two
/// decimals component-wise.
pub fn dft(values: &[i64]) -> (Answer, StepTrace) {
    fn fft(x: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
        let n = x.len();
        if n == 1 {
            return x;
        }
        let even = fft(x.iter().step_by(2).copied().collect());
        let odd = fft(x.iter().skip(1).step_by(2).copied().collect());
        let mut out = vec![(0.0, 0.0); n];
        for k in 0..n / 2 {
            let theta = -2.0 * std::f64::consts::PI * k as f64 / n as f64;
            let (fr, fi) = (theta.cos(), theta.sin());
            let (or_, oi) = odd[k];
            let prod = (fr * or_ - fi * oi, fr * oi + fi * or_);
            out[k] = (even[k].0 + prod.0, even[k].1 + prod.1);
            out[k + n / 2] = (even[k].0 - prod.0, even[k].1 - prod.1);
        }
        out
    }
    let x: Vec<(f64, f64)> = values.iter().map(|&v| (v as f64, 0.0)).collect();
    let spectrum = fft(x)
        .into_iter()
        .map(|(re, im)| (round2(re), round2(im)))
        .collect();
    (Answer::ComplexList(spectrum), vec![])
}

fn cross(xs: &[f64], ys: &[f64], i: usize, j: usize, k: usize) -> f64 {
    (xs[j] - xs[i]) * (ys[k] - ys[i]) - (ys[j] - ys[i]) * (xs[k] - xs[i])
}

fn lowest_point(xs: &[f64], ys: &[f64]) -> usize {
    let mut best = 0usize;
    for i in 0..xs.len() {
        if ys[i] < ys[best] || (ys[i] == ys[best] && xs[i] < xs[best]) {
            best = i;
        }
    }
    best
}

/// Graham scan producing per-point hull membership.
///
/// The candidate order sorts by polar angle around the anchor with squared
/// distance as tie key; turns with cross product `<= 0` pop, so collinear
/// points drop out of the hull. Popping stops at the anchor.
pub fn graham_scan(xs: &[f64], ys: &[f64]) -> (Answer, StepTrace) {
    let n = xs.len();
    let best = lowest_point(xs, ys);
    let mut in_hull = vec![0i64; n];
    in_hull[best] = 1;
    let mut last_stack = best;
    let mut stack_prev: Vec<usize> = (0..n).collect();

    let mut atans = vec![0f64; n];
    for i in 0..n {
        if i != best {
            atans[i] = (ys[i] - ys[best]).atan2(xs[i] - xs[best]);
        }
    }
    atans[best] = -123456789.0;
    let mut ind: Vec<usize> = (0..n).collect();
    let dist2 = |i: usize| (xs[i] - xs[best]).powi(2) + (ys[i] - ys[best]).powi(2);
    ind.sort_by(|&a, &b| {
        atans[a]
            .partial_cmp(&atans[b])
            .unwrap()
            .then(dist2(a).partial_cmp(&dist2(b)).unwrap())
    });

    for (t, &p) in ind.iter().enumerate().skip(1) {
        if t >= 3 {
            while last_stack != stack_prev[last_stack]
                && cross(xs, ys, stack_prev[last_stack], last_stack, p) <= 0.0
            {
                let prev_last = last_stack;
                last_stack = stack_prev[last_stack];
                stack_prev[prev_last] = prev_last;
                in_hull[prev_last] = 0;
            }
        }
        in_hull[p] = 1;
        stack_prev[p] = last_stack;
        last_stack = p;
    }
    (Answer::IntList(in_hull), vec![])
}

/// Gift-wrapping march producing per-point hull membership.
pub fn jarvis_march(xs: &[f64], ys: &[f64]) -> (Answer, StepTrace) {
    let n = xs.len();
    let best = lowest_point(xs, ys);
    let mut in_hull = vec![0i64; n];
    in_hull[best] = 1;
    let mut last_point = best;
    let mut endpoint = 0usize;

    loop {
        for i in 0..n {
            let flag = i != last_point && i != endpoint && cross(xs, ys, last_point, endpoint, i) <= 0.0;
            if endpoint == last_point || flag {
                endpoint = i;
            }
        }
        if in_hull[endpoint] > 0 {
            break;
        }
        in_hull[endpoint] = 1;
        last_point = endpoint;
        endpoint = 0;
    }
    (Answer::IntList(in_hull), vec![])
}
