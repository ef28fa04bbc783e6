//! The seven large-order expansions.
//!
//! Each evaluator builds every available term of its constituent series
//! (contributions with prefactor, plus an envelope used for truncation),
//! then cuts each series according to the policy.

use std::f64::consts::PI;

use saddle_coefficients::CoefficientFamily as F;

use crate::special::{cos_half_pi, factorial, gamma, lower_gamma_int, pochhammer, sin_half_pi};
use crate::{
    coefficients, phases, EvalError, EvalPoint, ExpansionResult, Method, Regime,
    TruncationPolicy, Warning, Which,
};

/// All available terms of one series.
struct Terms {
    label: &'static str,
    values: Vec<f64>,
    /// Magnitude of each term with oscillating factors removed.
    envelope: Vec<f64>,
    /// Highest index covered by the printed coefficient list.
    printed: usize,
}

struct Cut {
    values: Vec<f64>,
    estimate: f64,
    at_last: bool,
}

impl Terms {
    fn cut(self, policy: TruncationPolicy, main: bool) -> Result<Cut, EvalError> {
        let n = self.values.len();
        let k = match policy {
            TruncationPolicy::All => self.printed,
            TruncationPolicy::Fixed(k) if k + 1 < n => k,
            TruncationPolicy::Fixed(k) if main => {
                return Err(EvalError::Truncation {
                    k,
                    available: n - 1,
                    series: self.label,
                })
            }
            TruncationPolicy::Fixed(_) => n - 2,
            TruncationPolicy::Optimal => {
                let m = (1..n)
                    .min_by(|&i, &j| self.envelope[i].total_cmp(&self.envelope[j]))
                    .unwrap_or(1);
                m - 1
            }
        };
        Ok(Cut {
            estimate: self.envelope[k + 1],
            at_last: policy == TruncationPolicy::Optimal && k + 2 == n,
            values: self.values[..=k].to_vec(),
        })
    }
}

fn finish(
    main: Terms,
    algebraic: Option<Terms>,
    policy: TruncationPolicy,
    regime: Regime,
    method: Method,
    mut warnings: Vec<Warning>,
) -> Result<ExpansionResult, EvalError> {
    let m = main.cut(policy, true)?;
    let mut estimate = m.estimate;
    let mut at_last = m.at_last;
    let alg = match algebraic {
        Some(t) => {
            let c = t.cut(policy, false)?;
            estimate += c.estimate;
            at_last |= c.at_last;
            c.values
        }
        None => Vec::new(),
    };
    if at_last {
        warnings.push(Warning::OptimalAtLastTerm);
    }
    let mut r = ExpansionResult::assemble(m.values, alg, estimate, regime, method, warnings);
    if r.value == 0.0 {
        r.value = 0.0;
    }
    Ok(r)
}

fn need(cond: bool, what: &str) -> Result<(), EvalError> {
    if cond {
        Ok(())
    } else {
        Err(EvalError::Domain(what.to_string()))
    }
}

/// `cos(Φ + jπ/2)` and `sin(Φ + jπ/2)` from `cos Φ`, `sin Φ` without rounding `jπ/2`.
fn rotate(c: f64, s: f64, j: usize) -> (f64, f64) {
    match j % 4 {
        0 => (c, s),
        1 => (-s, c),
        2 => (-c, -s),
        _ => (s, -c),
    }
}

/// `Σ (2k)! C_k / λ^{2k}` terms scaled by `scale`, i.e. the complete-gamma limit.
fn algebraic_complete(c: &[f64], lambda: f64, scale: f64) -> Terms {
    let values: Vec<f64> = c
        .iter()
        .enumerate()
        .map(|(k, ck)| scale * factorial(2 * k as u32) * ck / lambda.powi(2 * k as i32))
        .collect();
    Terms {
        label: "C",
        envelope: values.iter().map(|v| v.abs()).collect(),
        values,
        printed: 6,
    }
}

/// Main series for `a > 1`: `pre·A_{2j}(½)_j/x^j` rotated by `jπ/2`.
fn pos_osc_terms(p: &EvalPoint, which: Which) -> Result<(Terms, f64), EvalError> {
    let a = p.a();
    let x = p.x;
    need(x > 0.0 && a > 1.0, "a > 1 expansion needs x > 0 and a > 1")?;
    let ph = phases(a, x)?;
    let big_phi = ph.big_phi.expect("a > 1");
    let (c, s) = (big_phi.cos(), big_phi.sin());
    let coeff = coefficients(F::A, Some(a))?;
    let pre = 2.0 * (a - 1.0).powf(-0.25) / (PI * a * x).sqrt();
    let mut values = Vec::new();
    let mut envelope = Vec::new();
    for (j, aj) in coeff.iter().enumerate() {
        let amp = pre * aj * pochhammer(0.5, j as u32) / x.powi(j as i32);
        let (cj, sj) = rotate(c, s, j);
        values.push(amp * if which == Which::Bateman { cj } else { sj });
        envelope.push(amp.abs());
    }
    Ok((
        Terms {
            label: "A",
            values,
            envelope,
            printed: 4,
        },
        pre,
    ))
}

/// Theorem 1: `k_ν(x)`, `ν = ax`, `a > 1`.
pub fn eval_k_pos_osc(p: EvalPoint, policy: TruncationPolicy) -> Result<ExpansionResult, EvalError> {
    let (main, _) = pos_osc_terms(&p, Which::Bateman)?;
    finish(main, None, policy, Regime::PosOsc, Method::Thm1, vec![])
}

/// Theorem 4: `h_ν(x)`, `ν = ax`, `a > 1`; the oscillatory part minus the
/// algebraic series in `λ = x(a − 1)`.
pub fn eval_h_pos_osc(p: EvalPoint, policy: TruncationPolicy) -> Result<ExpansionResult, EvalError> {
    let (main, _) = pos_osc_terms(&p, Which::Havelock)?;
    let a = p.a();
    let lambda = p.x * (a - 1.0);
    let c = coefficients(F::C, Some(a))?;
    let alg = algebraic_complete(&c, lambda, -2.0 / (PI * lambda));
    finish(main, Some(alg), policy, Regime::PosOsc, Method::Thm4, vec![])
}

/// Amplitude `2(a−1)^{−1/4}/√(πax)·√(S_c² + S_s²)` of the Theorem 1 form, where
/// `k = pre(S_c cos Φ − S_s sin Φ)`.
pub fn pos_osc_envelope(p: EvalPoint, policy: TruncationPolicy) -> Result<f64, EvalError> {
    let (main, pre) = pos_osc_terms(&p, Which::Bateman)?;
    let kept = main.cut(policy, true)?.values.len();
    let coeff = coefficients(F::A, Some(p.a()))?;
    let (mut sc, mut ss) = (0.0, 0.0);
    for (j, aj) in coeff.iter().enumerate().take(kept) {
        let t = aj * pochhammer(0.5, j as u32) / p.x.powi(j as i32);
        let (cj, sj) = rotate(1.0, 0.0, j);
        sc += t * cj;
        ss += t * sj;
    }
    Ok(pre * sc.hypot(ss))
}

/// Theorem 2: `k_ν(x)`, `0 < a < 1`, exponentially small.
pub fn eval_k_pos_mono(p: EvalPoint, policy: TruncationPolicy) -> Result<ExpansionResult, EvalError> {
    let a = p.a();
    let x = p.x;
    need(x > 0.0 && a > 0.0 && a < 1.0, "a < 1 expansion needs x > 0 and 0 < a < 1")?;
    let psi = phases(a, x)?.psi.expect("a < 1");
    let pre = (1.0 - a).powf(-0.25) / (PI * a * x).sqrt() * (-x * psi).exp();
    let coeff = coefficients(F::AhatEven, Some(a))?;
    let values: Vec<f64> = coeff
        .iter()
        .enumerate()
        .map(|(k, ak)| pre * pochhammer(0.5, k as u32) * ak / x.powi(k as i32))
        .collect();
    let main = Terms {
        label: "AhatEven",
        envelope: values.iter().map(|v| v.abs()).collect(),
        values,
        printed: 4,
    };
    finish(main, None, policy, Regime::PosMono, Method::Thm2, vec![])
}

/// Theorem 5: `h_ν(x)`, `0 < a < 1`. The odd-Â series is weighted by
/// `e^{−xΨ}/(πx)`, and the algebraic series by `γ(2k+1, xΨ)`.
pub fn eval_h_pos_mono(p: EvalPoint, policy: TruncationPolicy) -> Result<ExpansionResult, EvalError> {
    let a = p.a();
    let x = p.x;
    need(x > 0.0 && a > 0.0 && a < 1.0, "a < 1 expansion needs x > 0 and 0 < a < 1")?;
    let psi = phases(a, x)?.psi.expect("a < 1");
    let pre = (-x * psi).exp() / (PI * x);
    let odd = coefficients(F::AhatOdd, Some(a))?;
    let values: Vec<f64> = odd
        .iter()
        .enumerate()
        .map(|(k, ak)| {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            pre * sign * factorial(k as u32) * ak / x.powi(k as i32)
        })
        .collect();
    let main = Terms {
        label: "AhatOdd",
        envelope: values.iter().map(|v| v.abs()).collect(),
        values,
        printed: 4,
    };
    let c = coefficients(F::C, Some(a))?;
    let lambda = (1.0 - a) * x;
    let scale = 2.0 / (PI * lambda);
    let values: Vec<f64> = c
        .iter()
        .enumerate()
        .map(|(k, ck)| scale * ck * lower_gamma_int(2 * k as u32, x * psi) / lambda.powi(2 * k as i32))
        .collect();
    let alg = Terms {
        label: "C",
        envelope: values.iter().map(|v| v.abs()).collect(),
        values,
        printed: 6,
    };
    finish(main, Some(alg), policy, Regime::PosMono, Method::Thm5, vec![])
}

fn coalesce_terms(nu: f64, which: Which) -> Result<Terms, EvalError> {
    need(nu > 0.0 && nu.is_finite(), "coalescence expansion needs nu > 0")?;
    let b = coefficients(F::B, None)?;
    let pre = 2.0 / (3.0 * PI * nu.cbrt());
    let mut values = Vec::new();
    let mut envelope = Vec::new();
    for (k, pair) in b.chunks(2).enumerate() {
        let w = pre * gamma((2 * k + 1) as f64 / 3.0) / nu.powf(2.0 * k as f64 / 3.0);
        let part = if which == Which::Bateman { pair[0] } else { pair[1] };
        // B_1, B_4, … are pure imaginary: drop the round-off in their real parts
        let part = if which == Which::Bateman && k % 3 == 1 { 0.0 } else { part };
        values.push(w * part);
        envelope.push((w * pair[0].hypot(pair[1])).abs());
    }
    Ok(Terms {
        label: "B",
        values,
        envelope,
        printed: 7,
    })
}

/// Theorem 3: `k_ν(ν)`.
pub fn eval_k_coalesce(nu: f64, policy: TruncationPolicy) -> Result<ExpansionResult, EvalError> {
    let main = coalesce_terms(nu, Which::Bateman)?;
    finish(main, None, policy, Regime::PosCoalesce, Method::Thm3, vec![])
}

/// Theorem 6: `h_ν(ν)`. The algebraic tail comes out of the same sum through
/// the pure-imaginary `B_1, B_4, …`.
pub fn eval_h_coalesce(nu: f64, policy: TruncationPolicy) -> Result<ExpansionResult, EvalError> {
    let main = coalesce_terms(nu, Which::Havelock)?;
    finish(main, None, policy, Regime::PosCoalesce, Method::Thm6, vec![])
}

/// Theorem 7: `k_ν(−|x|)` or `h_ν(−|x|)` for `x < 0`. Uses `Â_{2k}(−a)` and the
/// algebraic denominator `λ^{2k}`, `λ = |x|(1 + a)`.
pub fn eval_neg(
    p: EvalPoint,
    which: Which,
    policy: TruncationPolicy,
) -> Result<ExpansionResult, EvalError> {
    need(p.x < 0.0, "negative-argument expansion needs x < 0")?;
    let x = p.abs_x();
    let a = p.a();
    let nu = p.nu;
    if a == 0.0 && which == Which::Bateman {
        // the sin(πν/2) factor vanishes; the function itself is e^{−|x|}
        return Ok(ExpansionResult::assemble(
            vec![0.0],
            vec![],
            0.0,
            Regime::NegArg,
            Method::Thm7,
            vec![Warning::BatemanOrderZeroNegative],
        ));
    }
    need(a > 0.0, "negative-argument expansion needs a > 0")?;
    let omega = phases(a, x)?.omega;
    let pre = 2.0 * (1.0 + a).powf(-0.25) / (PI * a * x).sqrt() * (-x * omega).exp();
    let trig = if which == Which::Bateman {
        sin_half_pi(nu)
    } else {
        cos_half_pi(nu)
    };
    let coeff = coefficients(F::AhatEven, Some(-a))?;
    let mut values = Vec::new();
    let mut envelope = Vec::new();
    for (k, ak) in coeff.iter().enumerate() {
        let amp = pre * pochhammer(0.5, k as u32) * ak / x.powi(k as i32);
        values.push(amp * trig);
        envelope.push(amp.abs());
    }
    let main = Terms {
        label: "AhatEven(-a)",
        values,
        envelope,
        printed: 4,
    };
    let alg = if which == Which::Havelock {
        let lambda = x * (1.0 + a);
        let c = coefficients(F::C, Some(-a))?;
        Some(algebraic_complete(&c, lambda, -2.0 / (PI * lambda)))
    } else {
        None
    };
    finish(main, alg, policy, Regime::NegArg, Method::Thm7, vec![])
}
