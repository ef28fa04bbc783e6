use std::f64::consts::{FRAC_2_PI, FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::geometry::{self, DescentBranch};
use crate::quad::{gauss_kronrod, tanh_sinh, wynn_epsilon, Quad};
use crate::{
    cos_half_pi, sin_half_pi, OracleConfig, OracleError, OracleMethod, QuadratureResult, Which,
};

fn real<F: FnMut(f64) -> f64>(mut f: F) -> impl FnMut(f64) -> Complex64 {
    move |t| Complex64::new(f(t), 0.0)
}

fn check(value: f64, err: f64, scale: f64, tol: f64) -> Result<(), OracleError> {
    let tolerance = tol * scale.max(f64::MIN_POSITIVE);
    if !value.is_finite() || !(err <= tolerance) {
        return Err(OracleError::Tolerance {
            estimate: err,
            tolerance,
        });
    }
    Ok(())
}

fn validate(x: f64, nu: f64) -> Result<(), OracleError> {
    if !x.is_finite() || !nu.is_finite() || nu < 0.0 {
        return Err(OracleError::Domain(format!(
            "need finite x and nu >= 0, got x = {x}, nu = {nu}"
        )));
    }
    Ok(())
}

/// Smallest `t ≥ lo` with `θ(t) = target`, for `θ` increasing on `[lo, ∞)`.
fn solve_increasing<F: Fn(f64) -> f64>(theta: F, target: f64, lo: f64, step: f64) -> f64 {
    let mut a = lo;
    let mut step = step;
    let mut b = lo + step;
    while theta(b) < target {
        a = b;
        step *= 2.0;
        b += step;
    }
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        if theta(m) < target {
            a = m;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// Real-axis integration after `t = tan u`:
/// `(2/π)∫₀^∞ trig(xt − ν·arctan t)/(1 + t²) dt`.
///
/// A head interval past the last stationary point of the phase is handled
/// by adaptive Gauss–Kronrod; the rest is cut at consecutive zeros of the
/// integrand and the alternating panel sums are extrapolated with Wynn's
/// epsilon algorithm.
pub fn oracle_direct(
    x: f64,
    nu: f64,
    which: Which,
    cfg: &OracleConfig,
) -> Result<QuadratureResult, OracleError> {
    validate(x, nu)?;
    let big_x = x.abs();
    if big_x > cfg.direct_max_abs_x {
        return Err(OracleError::Domain(format!(
            "direct method needs |x| <= {}, got {x}",
            cfg.direct_max_abs_x
        )));
    }
    // θ(t) = X t + σ ν arctan t; the Havelock integrand changes sign with x
    let sigma = if x < 0.0 { 1.0 } else { -1.0 };
    let flip = if x < 0.0 && which == Which::Havelock { -1.0 } else { 1.0 };
    let trig = |th: f64| match which {
        Which::Bateman => th.cos(),
        Which::Havelock => th.sin(),
    };
    let tol = cfg.rel_tol;
    if big_x == 0.0 {
        let q = gauss_kronrod(|u| trig(-nu * u), &[0.0, FRAC_PI_2], tol, 1e-16, 200);
        return finish_direct(q.value * FRAC_2_PI, q.err * FRAC_2_PI, q.evals);
    }
    let theta = |t: f64| big_x * t + sigma * nu * t.atan();
    let g = |t: f64| trig(theta(t)) / (1.0 + t * t);

    let t0 = if sigma < 0.0 {
        (nu / big_x - 1.0).max(0.0).sqrt()
    } else {
        0.0
    };
    let t1 = if t0 > 0.0 { t0 + 1.0 } else { 0.0 };
    // zeros of cos sit at θ = π/2 + mπ, of sin at θ = mπ
    let offset = match which {
        Which::Bateman => FRAC_PI_2,
        Which::Havelock => 0.0,
    };
    let mut m = ((theta(t1) - offset) / PI).floor() + 1.0;
    let spacing = PI / (big_x + nu);
    let mut z = solve_increasing(theta, offset + m * PI, t1, spacing.max(1e-3));

    let mut breaks = vec![0.0];
    let n_uniform = (z / spacing).ceil();
    // the head holds about this many half-oscillations
    if !(n_uniform <= cfg.max_zeros as f64) {
        return Err(OracleError::OscillationBudget {
            zeros: n_uniform.min(usize::MAX as f64) as usize,
        });
    }
    let n_uniform = n_uniform as usize;
    let mut decade = 1e-2;
    while decade < z {
        breaks.push(decade);
        decade *= 10.0;
    }
    if n_uniform > 1 {
        breaks.extend((1..n_uniform).map(|j| j as f64 * z / n_uniform as f64));
    }
    breaks.push(z);
    breaks.sort_by(f64::total_cmp);
    breaks.dedup();
    let head = gauss_kronrod(g, &breaks, tol, 1e-17, 20 * breaks.len() + 200);
    let mut evals = head.evals;
    let mut err = head.err;

    let mut sums = Vec::new();
    let mut total = head.value;
    let mut last_estimate: Option<f64> = None;
    let mut panels = 0usize;
    loop {
        m += 1.0;
        let zn = solve_increasing(theta, offset + m * PI, z, spacing);
        let p = gauss_kronrod(g, &[z, zn], tol, 1e-18, 64);
        evals += p.evals;
        err += p.err;
        total += p.value;
        sums.push(total);
        z = zn;
        panels += 1;
        if panels >= 30 && panels % 10 == 0 {
            let from = sums.len().saturating_sub(40);
            let (v, e) = wynn_epsilon(&sums[from..]);
            if let Some(prev) = last_estimate {
                let delta = (v - prev).abs().max(e);
                if delta <= 1e-15 * v.abs().max(1e-3) {
                    return finish_direct(
                        flip * FRAC_2_PI * v,
                        FRAC_2_PI * (err + delta),
                        evals,
                    );
                }
            }
            last_estimate = Some(v);
        }
        if panels >= cfg.max_zeros {
            return Err(OracleError::OscillationBudget { zeros: panels });
        }
    }
}

fn finish_direct(value: f64, err: f64, evals: usize) -> Result<QuadratureResult, OracleError> {
    check(value, err, 1.0, 1e-12)?;
    Ok(QuadratureResult {
        value,
        abs_err_estimate: err,
        n_evals: evals,
        method: OracleMethod::Direct,
    })
}

struct Pieces {
    /// `(2/π)` times the contour integral `J`, so `k = re`, `h = im`.
    j: Complex64,
    /// Sum of the moduli of the pieces entering `k` and `h`, the scale for
    /// the error test.
    scale: [f64; 2],
    err: [f64; 2],
    evals: usize,
}

/// `∫₀^W e^{−x w^m} u'(w) dw` along a solved branch, with a phase check at
/// every solved node.
fn branch_integral(
    br: &mut DescentBranch,
    x: f64,
    w_max: f64,
    tol: f64,
) -> Result<Quad<Complex64>, OracleError> {
    let m = br.order();
    let mut fail = None;
    let q = tanh_sinh(
        |w| match br.point(w) {
            Ok((_, du)) => du * (-x * w.powi(m)).exp(),
            Err(e) => {
                fail.get_or_insert(e);
                Complex64::new(0.0, 0.0)
            }
        },
        0.0,
        w_max,
        tol,
        0.0,
    );
    if let Some(e) = fail {
        return Err(e);
    }
    let ws: Vec<f64> = br.nodes().map(|(w, _)| w).collect();
    for w in ws {
        let (res, _) = br.phase_residual(w)?;
        if res > 1e-8 {
            return Err(OracleError::Certification(format!(
                "phase residual {res:e} at w = {w}"
            )));
        }
    }
    Ok(q)
}

fn pos_contour(x: f64, a: f64, cfg: &OracleConfig) -> Result<Pieces, OracleError> {
    let depth = -cfg.cutoff.ln();
    let tol = cfg.rel_tol * 0.1;
    let c2 = Complex64::new(FRAC_2_PI, 0.0);
    if a == 1.0 {
        let w_max = (depth / x).cbrt();
        let mut br = DescentBranch::cubic(w_max);
        let q = branch_integral(&mut br, x, w_max, tol)?;
        return Ok(Pieces {
            j: c2 * q.value,
            scale: [FRAC_2_PI * q.value.norm(); 2],
            err: [FRAC_2_PI * q.err; 2],
            evals: q.evals,
        });
    }
    let w_max = (depth / x).sqrt();
    if a > 1.0 {
        // −i∫₀^∞ e^{−x(ay − tanh y)} dy, then the two saddle branches
        let y_max = (depth / x + 1.0) / a;
        let axis = tanh_sinh(
            real(|y: f64| (-x * (a * y - y.tanh())).exp()),
            0.0,
            y_max,
            tol,
            0.0,
        );
        let (u0, t0) = geometry::osc_saddle(a);
        let mut up = DescentBranch::quadratic(u0, t0, 1.0, w_max);
        let mut lo = DescentBranch::quadratic(u0, t0, -1.0, w_max);
        let bu = branch_integral(&mut up, x, w_max, tol)?;
        let bl = branch_integral(&mut lo, x, w_max, tol)?;
        let phase = Complex64::from_polar(1.0, -x * geometry::osc_c(a));
        let axis_part = Complex64::new(0.0, -axis.value.re);
        let saddle_part = phase * (bu.value - bl.value);
        Ok(Pieces {
            j: c2 * (axis_part + saddle_part),
            scale: [FRAC_2_PI * (axis.value.re.abs() + bu.value.norm() + bl.value.norm()); 2],
            err: [FRAC_2_PI * (axis.err + bu.err + bl.err); 2],
            evals: axis.evals + bu.evals + bl.evals,
        })
    } else {
        // i∫₀^{y₀} e^{−x(tanh y − ay)} dy, then the branch from i·y₀ to ½π
        let (y0, big_psi) = geometry::mono_depth(a);
        let axis = tanh_sinh(
            real(|y: f64| (-x * (y.tanh() - a * y)).exp()),
            0.0,
            y0,
            tol,
            0.0,
        );
        let (u0, t0) = geometry::mono_saddle(a);
        let mut up = DescentBranch::quadratic(u0, t0, 1.0, w_max);
        let bu = branch_integral(&mut up, x, w_max, tol)?;
        let damp = (-x * big_psi).exp();
        let j = Complex64::new(0.0, axis.value.re) + damp * bu.value;
        Ok(Pieces {
            j: c2 * j,
            scale: [FRAC_2_PI * (axis.value.re.abs() + damp * bu.value.norm()); 2],
            err: [FRAC_2_PI * (axis.err + damp * bu.err); 2],
            evals: axis.evals + bu.evals,
        })
    }
}

/// Height at which `e^{−X(f(y) − f_min)}` has dropped by `e^{−depth}`, for `f`
/// increasing on `[from, ∞)`.
fn decay_height<F: Fn(f64) -> f64>(f: F, fmin: f64, x: f64, depth: f64, from: f64) -> f64 {
    solve_increasing(|y| x * (f(y) - fmin), depth, from, 1.0)
}

/// The negative-argument contour: the imaginary axis and the line `Re u = ½π`.
///
/// `k_ν(−X) = (2/π)sin(½πν)·L` and `h_ν(−X) = (2/π)(cos(½πν)·L − P)` with
/// `L = ∫₀^∞ e^{−X(coth y + ay)} dy` and `P = ∫₀^∞ e^{−X(tanh y + ay)} dy`.
fn neg_contour(big_x: f64, a: f64, nu: f64, cfg: &OracleConfig) -> Result<Pieces, OracleError> {
    let depth = -cfg.cutoff.ln();
    let tol = cfg.rel_tol * 0.1;
    let beta = geometry::neg_beta(a);
    let line = |y: f64| 1.0 / y.tanh() + a * y;
    let f0 = line(beta);
    let top = decay_height(line, f0, big_x, depth, beta).max(cfg.neg_height);
    // below β the exponent grows like X/y
    let bottom = {
        let mut lo = 0.0;
        let mut hi = beta;
        for _ in 0..200 {
            let m = 0.5 * (lo + hi);
            if big_x * (line(m) - f0) > depth {
                lo = m;
            } else {
                hi = m;
            }
        }
        lo
    };
    let gl = |y: f64| (-big_x * (line(y) - f0)).exp();
    let l1 = tanh_sinh(real(gl), bottom, beta, tol, 0.0);
    let l2 = tanh_sinh(real(gl), beta, top, tol, 0.0);
    let lscale = (-big_x * f0).exp();
    let l = lscale * (l1.value.re + l2.value.re);
    let lerr = lscale * (l1.err + l2.err);

    let axis = |y: f64| y.tanh() + a * y;
    let p_top = decay_height(axis, 0.0, big_x, depth, 0.0).max(cfg.neg_height);
    let p = tanh_sinh(real(|y| (-big_x * axis(y)).exp()), 0.0, p_top, tol, 0.0);
    let s = sin_half_pi(nu);
    let c = cos_half_pi(nu);
    let k = FRAC_2_PI * s * l;
    let h = FRAC_2_PI * (c * l - p.value.re);
    Ok(Pieces {
        j: Complex64::new(k, h),
        // k involves L only
        scale: [FRAC_2_PI * s.abs() * l, FRAC_2_PI * (c.abs() * l + p.value.re.abs())],
        err: [FRAC_2_PI * s.abs() * lerr, FRAC_2_PI * (c.abs() * lerr + p.err)],
        evals: l1.evals + l2.evals + p.evals,
    })
}

/// Integration along steepest-descent paths.
///
/// The error estimate is checked against `rel_tol` times the sum of the
/// moduli of the contributing path pieces, so values that cancel to near
/// zero are still accepted.
pub fn oracle_contour(
    x: f64,
    nu: f64,
    which: Which,
    cfg: &OracleConfig,
) -> Result<QuadratureResult, OracleError> {
    validate(x, nu)?;
    let big_x = x.abs();
    if big_x < 5.0 {
        return Err(OracleError::Domain(format!(
            "contour method needs |x| >= 5, got {x}"
        )));
    }
    let a = nu / big_x;
    if !(a > 0.0) {
        return Err(OracleError::Domain("contour method needs nu > 0".into()));
    }
    let p = if x < 0.0 {
        neg_contour(big_x, a, nu, cfg)?
    } else {
        pos_contour(big_x, a, cfg)?
    };
    let (value, i) = match which {
        Which::Bateman => (p.j.re, 0),
        Which::Havelock => (p.j.im, 1),
    };
    let value = if value == 0.0 { 0.0 } else { value };
    check(value, p.err[i], p.scale[i], cfg.rel_tol.max(1e-13))?;
    Ok(QuadratureResult {
        value,
        abs_err_estimate: p.err[i],
        n_evals: p.evals,
        method: OracleMethod::Contour,
    })
}

/// `k_ν(−x) = (1/π)e^{−x}Γ(½ν)sin(½πν)U(½ν, 0, 2x)` for `x > 0`, with
/// `U(α, 0, z) = Γ(α)⁻¹z^{−α}∫₀^∞ e^{−τ}τ^{α−1}(1 + τ/z)^{−α−1} dτ`.
///
/// On `[0, 1]` the substitution `τ = s^{1/α}` removes the `τ^{α−1}`
/// singularity. Even `ν` gives exactly 0, and `ν = 0` the limit `e^{−x}`.
pub fn oracle_u_negative(
    x: f64,
    nu: f64,
    cfg: &OracleConfig,
) -> Result<QuadratureResult, OracleError> {
    validate(x, nu)?;
    if !(x > 0.0) {
        return Err(OracleError::Domain(format!(
            "U integral takes the magnitude x > 0, got {x}"
        )));
    }
    let exact = |value| {
        Ok(QuadratureResult {
            value,
            abs_err_estimate: 0.0,
            n_evals: 0,
            method: OracleMethod::UIntegral,
        })
    };
    if nu == 0.0 {
        return exact((-x).exp());
    }
    let s = sin_half_pi(nu);
    if s == 0.0 {
        return exact(0.0);
    }
    let alpha = 0.5 * nu;
    let z = 2.0 * x;
    let tail = |t: f64| (-(alpha + 1.0) * (t / z).ln_1p()).exp();
    let tol = cfg.rel_tol * 0.1;
    let near = tanh_sinh(
        real(|s: f64| {
            let t = s.powf(1.0 / alpha);
            (-t).exp() * tail(t) / alpha
        }),
        0.0,
        1.0,
        tol,
        0.0,
    );
    let t_max = 2.0 * alpha + 120.0;
    let mut breaks = vec![1.0];
    while *breaks.last().expect("nonempty") < t_max {
        let b = breaks.last().expect("nonempty") * 2.0;
        breaks.push(b.min(t_max));
    }
    let far = gauss_kronrod(
        |t| ((alpha - 1.0) * t.ln() - t).exp() * tail(t),
        &breaks,
        tol,
        0.0,
        500,
    );
    let integral = near.value.re + far.value;
    let pre = (-alpha * z.ln() - x).exp() * s / PI;
    let value = pre * integral;
    let err = pre.abs() * (near.err + far.err);
    check(value, err, value.abs(), cfg.rel_tol.max(1e-13))?;
    Ok(QuadratureResult {
        value,
        abs_err_estimate: err,
        n_evals: near.evals + far.evals,
        method: OracleMethod::UIntegral,
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Deviation {
    pub first: OracleMethod,
    pub second: OracleMethod,
    pub abs: f64,
    /// `|v₁ − v₂| / max(|v₁|, |v₂|)`, or 0 when both vanish.
    pub rel: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CrossCheck {
    pub results: Vec<(OracleMethod, Result<QuadratureResult, OracleError>)>,
    pub deviations: Vec<Deviation>,
    pub certified: QuadratureResult,
}

impl CrossCheck {
    pub fn max_rel_deviation(&self) -> f64 {
        self.deviations.iter().map(|d| d.rel).fold(0.0, f64::max)
    }
}

/// Methods that apply at `(x, ν)`, in order of preference.
pub fn applicable(x: f64, nu: f64, which: Which, cfg: &OracleConfig) -> Vec<OracleMethod> {
    let mut v = Vec::new();
    if x.abs() >= 5.0 && nu > 0.0 {
        v.push(OracleMethod::Contour);
    }
    // k₀ is even, so the U form also covers ν = 0 with x > 0
    if which == Which::Bateman && x != 0.0 && (x < 0.0 || nu == 0.0) {
        v.push(OracleMethod::UIntegral);
    }
    if x.abs() <= cfg.direct_max_abs_x {
        v.push(OracleMethod::Direct);
    }
    v
}

/// Runs every applicable method and compares them pairwise. The certified
/// value is the first success in the order contour, U integral, direct.
pub fn oracle_cross_check(
    x: f64,
    nu: f64,
    which: Which,
    cfg: &OracleConfig,
) -> Result<CrossCheck, OracleError> {
    validate(x, nu)?;
    let results: Vec<_> = applicable(x, nu, which, cfg)
        .into_iter()
        .map(|m| {
            let r = match m {
                OracleMethod::Contour => oracle_contour(x, nu, which, cfg),
                OracleMethod::UIntegral => oracle_u_negative(x.abs(), nu, cfg),
                OracleMethod::Direct => oracle_direct(x, nu, which, cfg),
            };
            (m, r)
        })
        .collect();
    let ok: Vec<QuadratureResult> = results
        .iter()
        .filter_map(|(_, r)| r.as_ref().ok().copied())
        .collect();
    let certified = *ok.first().ok_or(OracleError::AllFailed)?;
    let mut deviations = Vec::new();
    for (i, p) in ok.iter().enumerate() {
        for q in &ok[i + 1..] {
            let abs = (p.value - q.value).abs();
            let den = p.value.abs().max(q.value.abs());
            deviations.push(Deviation {
                first: p.method,
                second: q.method,
                abs,
                rel: if den == 0.0 { 0.0 } else { abs / den },
            });
        }
    }
    Ok(CrossCheck {
        results,
        deviations,
        certified,
    })
}

/// Best available value: the certified result of the cross check.
pub fn certified_value(
    x: f64,
    nu: f64,
    which: Which,
    cfg: &OracleConfig,
) -> Result<QuadratureResult, OracleError> {
    validate(x, nu)?;
    for m in applicable(x, nu, which, cfg) {
        let r = match m {
            OracleMethod::Contour => oracle_contour(x, nu, which, cfg),
            OracleMethod::UIntegral => oracle_u_negative(x.abs(), nu, cfg),
            OracleMethod::Direct => oracle_direct(x, nu, which, cfg),
        };
        if r.is_ok() {
            return r;
        }
    }
    Err(OracleError::AllFailed)
}
