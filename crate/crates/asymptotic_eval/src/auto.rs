use crate::{
    eval_airy_uniform, eval_fixed_order, eval_h_coalesce, eval_h_pos_mono, eval_h_pos_osc,
    eval_k_coalesce, eval_k_pos_mono, eval_k_pos_osc, eval_neg, ArgSign, EvalError, EvalPoint,
    ExpansionResult, Regime, TruncationPolicy, Warning, Which,
};

/// Half-width of the band around `a = 1` treated as coalescing.
pub const DEFAULT_TRANSITION_WIDTH: f64 = 0.05;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AutoConfig {
    pub transition_width: f64,
    pub policy: TruncationPolicy,
}

impl Default for AutoConfig {
    fn default() -> Self {
        AutoConfig {
            transition_width: DEFAULT_TRANSITION_WIDTH,
            policy: TruncationPolicy::All,
        }
    }
}

pub fn classify(p: &EvalPoint, transition_width: f64) -> Regime {
    let a = p.a();
    if p.x < 0.0 {
        Regime::NegArg
    } else if (a - 1.0).abs() < transition_width {
        Regime::PosCoalesce
    } else if a > 1.0 {
        Regime::PosOsc
    } else {
        Regime::PosMono
    }
}

/// Classifies `(x, ν)` and evaluates with the matching expansion.
///
/// Inside the coalescence band Bateman uses the uniform Airy form and
/// Havelock falls back to the one-sided expansion with a warning, except at
/// `a = 1` exactly. `ν = 0` goes to the fixed-order forms, the only ones
/// defined there.
pub fn auto_eval(
    x: f64,
    nu: f64,
    which: Which,
    cfg: &AutoConfig,
) -> Result<ExpansionResult, EvalError> {
    let p = EvalPoint::new(x, nu)?;
    if !(cfg.transition_width >= 0.0) {
        return Err(EvalError::Domain("transition width must be >= 0".into()));
    }
    let policy = cfg.policy;
    if nu == 0.0 {
        let sign = if x > 0.0 { ArgSign::Pos } else { ArgSign::Neg };
        return eval_fixed_order(p, which, sign, policy);
    }
    let a = p.a();
    let w = cfg.transition_width;
    let regime = classify(&p, w);
    let one_sided = |p: EvalPoint| match (which, a > 1.0) {
        (Which::Bateman, true) => eval_k_pos_osc(p, policy),
        (Which::Bateman, false) => eval_k_pos_mono(p, policy),
        (Which::Havelock, true) => eval_h_pos_osc(p, policy),
        (Which::Havelock, false) => eval_h_pos_mono(p, policy),
    };
    let mut r = match regime {
        Regime::NegArg => eval_neg(p, which, policy)?,
        _ if a == 1.0 => match which {
            Which::Bateman => eval_k_coalesce(nu, policy)?,
            Which::Havelock => eval_h_coalesce(nu, policy)?,
        },
        Regime::PosCoalesce => match which {
            Which::Bateman => eval_airy_uniform(p)?,
            Which::Havelock => {
                let mut r = one_sided(p)?;
                r.regime = Regime::PosCoalesce;
                r.warnings.push(Warning::HavelockInTransition);
                r
            }
        },
        _ => one_sided(p)?,
    };
    if regime != Regime::NegArg && regime != Regime::PosCoalesce && (a - 1.0).abs() < 2.0 * w {
        r.warnings.push(Warning::NearCoalescence);
    }
    Ok(r)
}
