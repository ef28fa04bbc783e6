//! Phase function, saddle data, and the steepest-descent branch solver.

use std::collections::BTreeMap;
use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::OracleError;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `ψ(u) = i(tan u + s·a·u)` with `s = −1` for `x > 0` and `s = +1` for the
/// negative-argument form.
pub fn psi(s: f64, a: f64, u: Complex64) -> Complex64 {
    I * (u.tan() + s * a * u)
}

/// `Re tan(ξ + iη)`, written so that large `|η|` does not overflow.
pub fn re_tan(xi: f64, eta: f64) -> f64 {
    let e = (-2.0 * eta.abs()).exp();
    // sin2ξ/(cos2ξ + cosh2η) with cosh2η = (1 + e²)/(2e)
    2.0 * e * (2.0 * xi).sin() / (2.0 * e * (2.0 * xi).cos() + 1.0 + e * e)
}

/// `Im ψ(ξ + iη)` for `x > 0`: `Re tan u − aξ`.
pub fn im_psi_pos(a: f64, xi: f64, eta: f64) -> f64 {
    re_tan(xi, eta) - a * xi
}

/// `c = a·arctan√(a−1) − √(a−1)`, positive for `a > 1`; the saddle phase is `−c`.
pub fn osc_c(a: f64) -> f64 {
    let s = (a - 1.0).sqrt();
    a * s.atan() - s
}

/// `Ψ = tanh y₀ − a·y₀` at `y₀ = artanh√(1−a)`, so that `ψ(u₀) = −Ψ` for `a < 1`.
pub fn mono_depth(a: f64) -> (f64, f64) {
    let s = (1.0 - a).sqrt();
    let y0 = s.atanh();
    (y0, s - a * y0)
}

/// `β` with `sinh β = 1/√a`: the negative-argument saddles sit at `½π ± iβ`.
pub fn neg_beta(a: f64) -> f64 {
    (1.0 / a.sqrt()).asinh()
}

/// `tan δ − δ`, by its Maclaurin series when `δ` is small.
fn tan_minus(d: Complex64) -> Complex64 {
    if d.norm() < 0.1 {
        let d2 = d * d;
        const C: [f64; 6] = [
            1.0 / 3.0,
            2.0 / 15.0,
            17.0 / 315.0,
            62.0 / 2835.0,
            1382.0 / 155_925.0,
            21_844.0 / 6_081_075.0,
        ];
        let mut p = Complex64::new(0.0, 0.0);
        for c in C.iter().rev() {
            p = p * d2 + c;
        }
        p * d2 * d
    } else {
        d.tan() - d
    }
}

/// A steepest-descent branch `ψ(u) − ψ(u₀) = −w^m`, `w ≥ 0`, leaving the
/// saddle `u₀` (or the origin when `m = 3`).
///
/// Solutions are cached and each new `w` is reached by marching from the
/// nearest solved point below it, Euler predictor plus Newton corrector.
pub struct DescentBranch {
    u0: Complex64,
    t0: Complex64,
    b: Complex64,
    m: i32,
    slope: Complex64,
    max_step: f64,
    solved: BTreeMap<u64, Complex64>,
}

impl DescentBranch {
    /// `t0 = tan u₀`; `b = 1 + t0²`; `slope` is `du/dw` at `w = 0`.
    pub fn new(u0: Complex64, t0: Complex64, m: i32, slope: Complex64, w_max: f64) -> Self {
        let mut solved = BTreeMap::new();
        solved.insert(0f64.to_bits(), Complex64::new(0.0, 0.0));
        DescentBranch {
            u0,
            t0,
            b: 1.0 + t0 * t0,
            m,
            slope,
            max_step: w_max / 128.0,
            solved,
        }
    }

    /// Branch through a quadratic saddle; `sign = +1` picks the direction
    /// `√(−1/(i·b·t0))`, the other sign its reflection.
    pub fn quadratic(u0: Complex64, t0: Complex64, sign: f64, w_max: f64) -> Self {
        let b = 1.0 + t0 * t0;
        let slope = sign * (-1.0 / (I * b * t0)).sqrt();
        DescentBranch::new(u0, t0, 2, slope, w_max)
    }

    /// The `a = 1` branch out of the origin toward `½π`, where `ψ = −w³`.
    pub fn cubic(w_max: f64) -> Self {
        let slope = 3f64.cbrt() * Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_6);
        DescentBranch::new(
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            3,
            slope,
            w_max,
        )
    }

    /// Power `m` in `−w^m`.
    pub fn order(&self) -> i32 {
        self.m
    }

    /// `(ψ(u) − ψ(u₀))/i` in terms of `δ = u − u₀`, free of cancellation.
    fn excess(&self, d: Complex64) -> Complex64 {
        let tt = d.tan();
        self.b * (tan_minus(d) + self.t0 * d * tt) / (1.0 - self.t0 * tt)
    }

    /// `ψ'(u) = i(t − t0)(t + t0)` with `t = tan(u₀ + δ)`.
    fn dpsi(&self, d: Complex64) -> Complex64 {
        let tt = d.tan();
        let diff = self.b * tt / (1.0 - self.t0 * tt);
        I * diff * (diff + 2.0 * self.t0)
    }

    fn velocity(&self, w: f64, d: Complex64) -> Complex64 {
        if w == 0.0 {
            return self.slope;
        }
        -(self.m as f64) * w.powi(self.m - 1) / self.dpsi(d)
    }

    fn newton(&self, w: f64, mut d: Complex64) -> Result<Complex64, OracleError> {
        let target = w.powi(self.m);
        for _ in 0..40 {
            let f = I * self.excess(d) + target;
            let step = f / self.dpsi(d);
            d -= step;
            if !d.is_finite() {
                break;
            }
            if step.norm() <= 1e-13 * d.norm().max(1e-300) {
                // one more step after the quadratic phase has set in
                let f = I * self.excess(d) + target;
                return Ok(d - f / self.dpsi(d));
            }
        }
        Err(OracleError::PathTracing {
            xi: (self.u0 + d).re,
        })
    }

    /// `δ(w) = u(w) − u₀`.
    pub fn delta(&mut self, w: f64) -> Result<Complex64, OracleError> {
        let key = w.to_bits();
        if let Some(d) = self.solved.get(&key) {
            return Ok(*d);
        }
        let (&k0, &d0) = self
            .solved
            .range(..key)
            .next_back()
            .expect("w = 0 is always solved");
        let mut wc = f64::from_bits(k0);
        let mut d = d0;
        while wc < w {
            let wn = (wc + self.max_step).min(w);
            let guess = if wc == 0.0 {
                self.slope * wn
            } else {
                d + self.velocity(wc, d) * (wn - wc)
            };
            d = self.newton(wn, guess)?;
            wc = wn;
        }
        self.solved.insert(key, d);
        Ok(d)
    }

    /// `u(w)` and `du/dw`.
    pub fn point(&mut self, w: f64) -> Result<(Complex64, Complex64), OracleError> {
        let d = self.delta(w)?;
        Ok((self.u0 + d, self.velocity(w, d)))
    }

    /// Residual `|Im(ψ(u) − ψ(u₀))|` and `Re(ψ(u) − ψ(u₀))` at a solved `w`.
    pub fn phase_residual(&mut self, w: f64) -> Result<(f64, f64), OracleError> {
        let d = self.delta(w)?;
        let e = I * self.excess(d);
        Ok((e.im.abs(), e.re))
    }

    /// Solved points in increasing `w`.
    pub fn nodes(&self) -> impl Iterator<Item = (f64, Complex64)> + '_ {
        self.solved
            .iter()
            .map(move |(k, d)| (f64::from_bits(*k), self.u0 + d))
    }
}

/// Saddle of the positive-argument phase for `a > 1`: `u₀ = arctan√(a−1)`.
pub fn osc_saddle(a: f64) -> (Complex64, Complex64) {
    let s = (a - 1.0).sqrt();
    (Complex64::new(s.atan(), 0.0), Complex64::new(s, 0.0))
}

/// Saddle for `a < 1`: `u₀ = i·artanh√(1−a)`.
pub fn mono_saddle(a: f64) -> (Complex64, Complex64) {
    let s = (1.0 - a).sqrt();
    (Complex64::new(0.0, s.atanh()), Complex64::new(0.0, s))
}

/// Upper negative-argument saddle `½π + iβ`, where `tan u₀ = i√(1+a)`.
pub fn neg_saddle(a: f64) -> (Complex64, Complex64) {
    (
        Complex64::new(FRAC_PI_2, neg_beta(a)),
        Complex64::new(0.0, (1.0 + a).sqrt()),
    )
}
