//! Expansions for bounded order as `|x| → ∞`.

use std::f64::consts::PI;
use std::str::FromStr;

use saddle_coefficients::CoefficientFamily as F;

use crate::special::{gamma, sin_half_pi};
use crate::{
    coefficients, EvalError, EvalPoint, ExpansionResult, Method, Regime, TruncationPolicy,
    Warning, Which,
};

/// Which side of the origin the argument lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArgSign {
    Pos,
    Neg,
}

impl FromStr for ArgSign {
    type Err = EvalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pos" | "+" => Ok(ArgSign::Pos),
            "neg" | "-" => Ok(ArgSign::Neg),
            _ => Err(EvalError::Domain(format!("unknown sign '{s}'"))),
        }
    }
}

/// Terms generated for the Pochhammer series; they diverge well before this
/// for any `ν` where the expansion is useful.
const POCHHAMMER_TERMS: usize = 40;

/// Pochhammer-product series `Σ (−1)^k (p)_k (q)_k / (k! (2x)^k)` times `pre`.
fn pochhammer_terms(pre: f64, p: f64, q: f64, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(POCHHAMMER_TERMS);
    let mut t = pre;
    for k in 0..POCHHAMMER_TERMS {
        out.push(t);
        let kf = k as f64;
        t *= -(p + kf) * (q + kf) / ((kf + 1.0) * 2.0 * x);
    }
    out
}

/// `k_ν(±x)` or `h_ν(±x)` with `x = |p.x|`; `sign` selects the side.
///
/// Bateman uses the Pochhammer series, whose policy `All` means "up to the
/// smallest term" (it terminates for even `ν` on the positive side).
/// Havelock uses the `c_k(ν)` series and drops an `O(e^{−x})` piece.
pub fn eval_fixed_order(
    p: EvalPoint,
    which: Which,
    sign: ArgSign,
    policy: TruncationPolicy,
) -> Result<ExpansionResult, EvalError> {
    let x = p.abs_x();
    let nu = p.nu;
    let mut warnings = Vec::new();
    if nu > x / 4.0 {
        warnings.push(Warning::OrderNotSmall);
    }
    let regime = match sign {
        ArgSign::Pos => Regime::PosMono,
        ArgSign::Neg => Regime::NegArg,
    };
    let (values, printed) = match (which, sign) {
        (Which::Bateman, ArgSign::Pos) => {
            let pre = (0.5 * nu * (2.0 * x).ln() - x).exp() / gamma(1.0 + 0.5 * nu);
            (pochhammer_terms(pre, -0.5 * nu, 1.0 - 0.5 * nu, x), None)
        }
        (Which::Bateman, ArgSign::Neg) => {
            let s = sin_half_pi(nu);
            // Γ(ν/2) sin(πν/2) → π as ν → 0
            let gs = if nu == 0.0 {
                PI
            } else if s == 0.0 {
                0.0
            } else {
                gamma(0.5 * nu) * s
            };
            let pre = (-0.5 * nu * (2.0 * x).ln() - x).exp() * gs / PI;
            (pochhammer_terms(pre, 0.5 * nu, 1.0 + 0.5 * nu, x), None)
        }
        (Which::Havelock, _) => {
            warnings.push(Warning::NeglectedExponential);
            let c = coefficients(F::CNu, Some(nu))?;
            let pre = 2.0 / (PI * x);
            let v = c
                .iter()
                .enumerate()
                .map(|(k, ck)| {
                    let s = match sign {
                        ArgSign::Pos => 1.0,
                        ArgSign::Neg if k % 2 == 0 => -1.0,
                        ArgSign::Neg => 1.0,
                    };
                    s * pre * ck / x.powi(k as i32)
                })
                .collect::<Vec<_>>();
            (v, Some(F::CNu.printed_max()))
        }
    };
    let envelope: Vec<f64> = values.iter().map(|v| v.abs()).collect();
    let n = values.len();
    let smallest = || {
        (1..n)
            .min_by(|&i, &j| envelope[i].total_cmp(&envelope[j]))
            .unwrap_or(1)
            - 1
    };
    let k = match policy {
        TruncationPolicy::All => printed.unwrap_or_else(smallest),
        TruncationPolicy::Optimal => smallest(),
        TruncationPolicy::Fixed(k) if k + 1 < n => k,
        TruncationPolicy::Fixed(k) => {
            return Err(EvalError::Truncation {
                k,
                available: n - 1,
                series: if which == Which::Bateman { "pochhammer" } else { "cNu" },
            })
        }
    };
    if policy == TruncationPolicy::Optimal && k + 2 == n {
        warnings.push(Warning::OptimalAtLastTerm);
    }
    let mut r = ExpansionResult::assemble(
        values[..=k].to_vec(),
        vec![],
        envelope[k + 1],
        regime,
        Method::FixedOrder,
        warnings,
    );
    if r.value == 0.0 {
        r.value = 0.0;
    }
    Ok(r)
}
