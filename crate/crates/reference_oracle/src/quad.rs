//! Quadrature kernels: double-exponential, adaptive Gauss–Kronrod, and
//! Wynn's epsilon algorithm for alternating panel sums.

use std::f64::consts::PI;

use num_complex::Complex64;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quad<T> {
    pub value: T,
    pub err: f64,
    pub evals: usize,
}

/// Half-width of the `t` range; at `t = 4.5` the nodes sit `e^{−141}` from the ends.
const T_MAX: f64 = 4.5;
const MAX_LEVEL: u32 = 10;

/// Tanh-sinh rule on `[a, b]`.
///
/// Nodes are mapped through `q = 1/(1 + e^{−π sinh t})` so that points next to
/// either end are formed without cancellation. Within each level the
/// integrand is called in increasing order of `x`. The error is the
/// difference between the last two levels.
pub fn tanh_sinh<F>(mut f: F, a: f64, b: f64, rel_tol: f64, abs_tol: f64) -> Quad<Complex64>
where
    F: FnMut(f64) -> Complex64,
{
    let len = b - a;
    let mut node = |t: f64| -> Complex64 {
        let y = 0.5 * PI * t.sinh();
        let e = (2.0 * y).exp();
        let q = e / (1.0 + e);
        let qc = 1.0 / (1.0 + e);
        let x = if t < 0.0 { a + len * q } else { b - len * qc };
        let w = len * PI * t.cosh() * q * qc;
        if w == 0.0 || !w.is_finite() {
            return Complex64::new(0.0, 0.0);
        }
        f(x) * w
    };
    let mut evals = 0;
    let mut h = 1.0;
    let mut sum = Complex64::new(0.0, 0.0);
    let n0 = T_MAX as i64;
    for k in -n0..=n0 {
        sum += node(k as f64);
        evals += 1;
    }
    let mut prev = sum * h;
    let mut err = f64::INFINITY;
    for level in 1..=MAX_LEVEL {
        h *= 0.5;
        let steps = (T_MAX / h) as i64;
        let mut k = -steps | 1;
        if k < -steps {
            k += 2;
        }
        while k <= steps {
            sum += node(k as f64 * h);
            evals += 1;
            k += 2;
        }
        let cur = sum * h;
        err = (cur - prev).norm();
        prev = cur;
        if level >= 3 && err <= abs_tol.max(rel_tol * cur.norm()) {
            break;
        }
    }
    Quad {
        value: prev,
        err,
        evals,
    }
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gk15<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = WGK[7] * fc;
    let mut g = WG[3] * fc;
    for j in 0..7 {
        let d = h * XGK[j];
        let s = f(c - d) + f(c + d);
        k += WGK[j] * s;
        if j % 2 == 1 {
            g += WG[j / 2] * s;
        }
    }
    (k * h, ((k - g) * h).abs())
}

/// Globally adaptive 7/15-point Gauss–Kronrod over the given breakpoints.
/// The interval with the largest `|K − G|` is bisected until the total is
/// within tolerance or `max_intervals` is reached.
pub fn gauss_kronrod<F: FnMut(f64) -> f64>(
    mut f: F,
    breaks: &[f64],
    rel_tol: f64,
    abs_tol: f64,
    max_intervals: usize,
) -> Quad<f64> {
    let mut parts: Vec<(f64, f64, f64, f64)> = breaks
        .windows(2)
        .map(|w| {
            let (v, e) = gk15(&mut f, w[0], w[1]);
            (w[0], w[1], v, e)
        })
        .collect();
    let mut evals = 15 * parts.len();
    loop {
        let total: f64 = parts.iter().map(|p| p.2).sum();
        let err: f64 = parts.iter().map(|p| p.3).sum();
        if err <= abs_tol.max(rel_tol * total.abs()) || parts.len() >= max_intervals {
            return Quad {
                value: total,
                err,
                evals,
            };
        }
        let (i, _) = parts
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .expect("at least one interval");
        let (a, b, _, _) = parts.swap_remove(i);
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            // interval exhausted at machine resolution
            return Quad {
                value: total,
                err,
                evals,
            };
        }
        let (v1, e1) = gk15(&mut f, a, m);
        let (v2, e2) = gk15(&mut f, m, b);
        evals += 30;
        parts.push((a, m, v1, e1));
        parts.push((m, b, v2, e2));
    }
}

/// Limit of a sequence of partial sums by Wynn's epsilon algorithm.
///
/// Returns the last even-column estimate and its distance from the previous one.
pub fn wynn_epsilon(sums: &[f64]) -> (f64, f64) {
    let n = sums.len();
    if n < 3 {
        let last = *sums.last().unwrap_or(&0.0);
        return (last, f64::INFINITY);
    }
    // column k of the table, indexed by starting position
    let mut prev: Vec<f64> = vec![0.0; n + 1];
    let mut cur: Vec<f64> = sums.to_vec();
    let mut estimates: Vec<f64> = vec![sums[n - 1]];
    let mut k = 0;
    while cur.len() > 1 {
        let mut next = Vec::with_capacity(cur.len() - 1);
        for j in 0..cur.len() - 1 {
            let d = cur[j + 1] - cur[j];
            if d == 0.0 {
                // column has converged exactly
                return (cur[j + 1], 0.0);
            }
            next.push(prev[j + 1] + 1.0 / d);
        }
        prev = cur;
        cur = next;
        k += 1;
        if k % 2 == 0 {
            let e = *cur.last().expect("nonempty");
            if e.is_finite() {
                estimates.push(e);
            }
        }
    }
    let m = estimates.len();
    if m < 2 {
        return (estimates[0], f64::INFINITY);
    }
    (estimates[m - 1], (estimates[m - 1] - estimates[m - 2]).abs())
}
