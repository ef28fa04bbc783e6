//! Discretised steepest-descent paths, their certification, and CSV export.

use std::f64::consts::FRAC_PI_2;
use std::io;

use num_complex::Complex64;

use crate::geometry::{self, im_psi_pos, psi, re_tan};
use crate::{OracleError, Regime};

/// Integrand drop, `ln 10³⁰`, at which infinite legs are cut.
pub const TRUNCATION_DEPTH: f64 = 69.077_552_789_821_37;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    /// Leaves the saddle toward increasing `Re u` (or upward on `Re u = ½π`).
    Upper,
    /// Leaves the saddle the other way.
    Lower,
    /// Imaginary-axis leg from the endpoint `u = 0`.
    Axis,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::Upper => "upper",
            Branch::Lower => "lower",
            Branch::Axis => "axis",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ContourPath {
    pub nodes: Vec<Complex64>,
    pub regime: Regime,
    pub branch: Branch,
    pub a: f64,
    /// Conserved `Im ψ` along the path.
    pub phase_const: f64,
}

impl ContourPath {
    pub fn psi_at(&self, u: Complex64) -> Complex64 {
        psi(self.regime.linear_sign(), self.a, u)
    }
}

/// Closed-form `η ≥ 0` on the `a > 1` path at abscissa `ξ`:
/// `tanh²η = (tan ξ − aξ + c)/(tan ξ (1 + (aξ − c) tan ξ))`.
///
/// `None` outside `(c/a, ½π)`. The lower branch is `−η`.
pub fn b1_eta(a: f64, xi: f64) -> Option<f64> {
    let c = geometry::osc_c(a);
    if !(a > 1.0 && xi > c / a && xi < FRAC_PI_2) {
        return None;
    }
    let t = xi.tan();
    let ad = a * xi - c;
    let den = t * (1.0 + ad * t);
    let tau = ((t - ad) / den).max(0.0);
    let one_minus = ad * (1.0 + t * t) / den;
    let eta = if tau >= 0.25 {
        let r = tau.sqrt();
        0.5 * ((1.0 + r) * (1.0 + r) / one_minus).ln()
    } else {
        tau.sqrt().atanh()
    };
    Some(eta)
}

/// `η` with `Im ψ(ξ + iη) = phase` for `x > 0`, by bisection on
/// `[0, 40]` (or `[−40, 0]` when `lower`).
pub fn level_set_eta(a: f64, xi: f64, phase: f64, lower: bool) -> Result<f64, OracleError> {
    let g = |e: f64| im_psi_pos(a, xi, e) - phase;
    let (mut lo, mut hi) = (0.0, 40.0);
    if !(g(lo) >= 0.0 && g(hi) <= 0.0) {
        return Err(OracleError::PathTracing { xi });
    }
    while hi - lo > 0.0 {
        let m = 0.5 * (lo + hi);
        if m <= lo || m >= hi {
            break;
        }
        if g(m) >= 0.0 {
            lo = m;
        } else {
            hi = m;
        }
    }
    let eta = 0.5 * (lo + hi);
    Ok(if lower { -eta } else { eta })
}

/// `|∂ Im ψ/∂η|` at `ξ + iη`; small values mean `η` is poorly determined by
/// the level-set equation.
pub fn level_set_slope(xi: f64, eta: f64) -> f64 {
    let e = eta.abs();
    let den = (2.0 * xi).cos() + (2.0 * e).cosh();
    (2.0 * (2.0 * xi).sin() * (2.0 * e).sinh() / (den * den)).abs()
}

/// Keeps nodes until the integrand has fallen by `e^{−depth}` from the first.
fn truncate(nodes: &mut Vec<Complex64>, f: impl Fn(Complex64) -> f64, abs_x: f64) {
    let Some(&first) = nodes.first() else { return };
    let r0 = f(first);
    if let Some(cut) = nodes
        .iter()
        .position(|&u| abs_x * (r0 - f(u)) > TRUNCATION_DEPTH)
    {
        nodes.truncate(cut + 1);
    }
}

/// Steepest-descent paths for `regime` at `a = ν/|x|`, `n` nodes per branch.
///
/// `abs_x` fixes where the infinite legs are cut: the last node kept is the
/// first one where the integrand is below `10⁻³⁰` of its starting value.
/// Every returned branch has passed [`certify`].
pub fn trace_path(
    regime: Regime,
    a: f64,
    n: usize,
    abs_x: f64,
) -> Result<Vec<ContourPath>, OracleError> {
    if n < 64 {
        return Err(OracleError::Domain(format!("need n >= 64 nodes, got {n}")));
    }
    if !(a > 0.0 && a.is_finite() && abs_x > 0.0) {
        return Err(OracleError::Domain(format!(
            "need a > 0 and |x| > 0, got a = {a}, |x| = {abs_x}"
        )));
    }
    let s = regime.linear_sign();
    let re_psi = |u: Complex64| psi(s, a, u).re;
    let nf = n as f64;
    let mut out = Vec::new();
    let mut push = |mut nodes: Vec<Complex64>, branch, phase_const, cut: bool| {
        if cut {
            truncate(&mut nodes, re_psi, abs_x);
        }
        out.push(ContourPath {
            nodes,
            regime,
            branch,
            a,
            phase_const,
        });
    };
    match regime {
        Regime::PosOsc => {
            if !(a > 1.0) {
                return Err(OracleError::Domain("oscillatory paths need a > 1".into()));
            }
            let c = geometry::osc_c(a);
            let u0 = (a - 1.0).sqrt().atan();
            let left = c / a;
            let eta = |xi| b1_eta(a, xi).ok_or(OracleError::PathTracing { xi });
            let mut upper = vec![Complex64::new(u0, 0.0)];
            for j in 1..n {
                let xi = u0 + (FRAC_PI_2 - u0) * j as f64 / nf;
                upper.push(Complex64::new(xi, eta(xi)?));
            }
            let mut lower = vec![Complex64::new(u0, 0.0)];
            for j in 1..n {
                let r = (1.0 - j as f64 / nf).powi(2);
                let xi = left + (u0 - left) * r;
                lower.push(Complex64::new(xi, -eta(xi)?));
            }
            // geometric tail below the last regular node, down the asymptote
            let last = (u0 - left) / (nf * nf);
            for k in 1..=6 {
                let xi = left + last * 10f64.powi(-k);
                lower.push(Complex64::new(xi, -eta(xi)?));
            }
            let y_max = (TRUNCATION_DEPTH / abs_x + 1.0) / a;
            let axis = (0..=n)
                .map(|j| Complex64::new(0.0, -y_max * j as f64 / nf))
                .collect();
            push(upper, Branch::Upper, -c, true);
            push(lower, Branch::Lower, -c, true);
            push(axis, Branch::Axis, 0.0, false);
        }
        Regime::PosMono => {
            if !(a < 1.0) {
                return Err(OracleError::Domain("monotone paths need a < 1".into()));
            }
            let (y0, _) = geometry::mono_depth(a);
            let axis = (0..=n)
                .map(|j| Complex64::new(0.0, y0 * j as f64 / nf))
                .collect();
            let mut upper = vec![Complex64::new(0.0, y0)];
            for j in 1..n {
                let xi = FRAC_PI_2 * j as f64 / nf;
                upper.push(Complex64::new(xi, level_set_eta(a, xi, 0.0, false)?));
            }
            push(axis, Branch::Axis, 0.0, false);
            push(upper, Branch::Upper, 0.0, true);
        }
        Regime::PosCoalesce => {
            if a != 1.0 {
                return Err(OracleError::Domain(
                    "coalescing paths are traced at a = 1 only".into(),
                ));
            }
            let mut upper = vec![Complex64::new(0.0, 0.0)];
            for j in 1..n {
                let xi = FRAC_PI_2 * j as f64 / nf;
                upper.push(Complex64::new(xi, level_set_eta(a, xi, 0.0, false)?));
            }
            let y_max = TRUNCATION_DEPTH / abs_x + 1.0;
            let axis = (0..=n)
                .map(|j| Complex64::new(0.0, -y_max * j as f64 / nf))
                .collect();
            push(upper, Branch::Upper, 0.0, true);
            push(axis, Branch::Axis, 0.0, false);
        }
        Regime::NegArg => {
            let beta = geometry::neg_beta(a);
            let line = |y: f64| 1.0 / y.tanh() + a * y;
            let f0 = line(beta);
            let mut top = beta + 1.0;
            while abs_x * (line(top) - f0) <= TRUNCATION_DEPTH {
                top += 1.0;
            }
            let mut bottom = beta;
            while bottom > 0.0 && abs_x * (line(bottom) - f0) <= TRUNCATION_DEPTH {
                bottom *= 0.5;
            }
            let up = (0..n)
                .map(|j| Complex64::new(FRAC_PI_2, beta + (top - beta) * j as f64 / nf))
                .collect();
            let down = (0..n)
                .map(|j| Complex64::new(FRAC_PI_2, beta - (beta - bottom) * j as f64 / nf))
                .collect();
            let mut y_axis: f64 = 1.0;
            while abs_x * (y_axis.tanh() + a * y_axis) <= TRUNCATION_DEPTH {
                y_axis += 1.0;
            }
            let axis = (0..=n)
                .map(|j| Complex64::new(0.0, y_axis * j as f64 / nf))
                .collect();
            let phase = FRAC_PI_2 * a;
            push(up, Branch::Upper, phase, true);
            push(down, Branch::Lower, phase, true);
            push(axis, Branch::Axis, 0.0, false);
        }
    }
    for p in &out {
        certify(p)?;
    }
    Ok(out)
}

/// Checks `|Im ψ − phase_const| ≤ 10⁻⁸` at interior nodes and that `Re ψ`
/// strictly decreases along the node order.
pub fn certify(path: &ContourPath) -> Result<(), OracleError> {
    let n = path.nodes.len();
    if n < 2 {
        return Err(OracleError::Certification("path has fewer than 2 nodes".into()));
    }
    let vals: Vec<Complex64> = path.nodes.iter().map(|&u| path.psi_at(u)).collect();
    for (j, v) in vals.iter().enumerate().take(n - 1).skip(1) {
        let r = (v.im - path.phase_const).abs();
        if !(r <= 1e-8) {
            return Err(OracleError::Certification(format!(
                "{} branch: |Im psi - const| = {r:e} at node {j}",
                path.branch.name()
            )));
        }
    }
    for (j, w) in vals.windows(2).enumerate() {
        if !(w[1].re < w[0].re) {
            return Err(OracleError::Certification(format!(
                "{} branch: Re psi not decreasing at node {}",
                path.branch.name(),
                j + 1
            )));
        }
    }
    Ok(())
}

/// `Im ψ(ξ + iη)` for `x > 0`, the function whose zero set the level-set tracer follows.
pub fn level_set_value(a: f64, xi: f64, eta: f64) -> f64 {
    re_tan(xi, eta) - a * xi
}

/// CSV with columns `regime, branch, re_u, im_u, re_psi, im_psi`.
pub fn write_paths_csv<W: io::Write>(paths: &[ContourPath], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["regime", "branch", "re_u", "im_u", "re_psi", "im_psi"])?;
    for p in paths {
        for &u in &p.nodes {
            let v = p.psi_at(u);
            w.write_record([
                p.regime.name().to_string(),
                p.branch.name().to_string(),
                format!("{:.11e}", u.re),
                format!("{:.11e}", u.im),
                format!("{:.11e}", v.re),
                format!("{:.11e}", v.im),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}
