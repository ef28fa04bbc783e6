//! Leading-order uniform approximation of `k_ν(x)` across `a ≈ 1`.

use crate::phases::zeta_ratio;
use crate::special::{airy_ai, airy_bi, AI_UNDERFLOW};
use crate::{EvalError, EvalPoint, ExpansionResult, Method, Regime, Warning};

fn uniform_parts(p: &EvalPoint) -> Result<(f64, f64), EvalError> {
    let a = p.a();
    if !(p.x > 0.0 && a > 0.0) {
        return Err(EvalError::Domain(
            "uniform form needs x > 0 and a > 0".into(),
        ));
    }
    let r = zeta_ratio(a);
    let scale = 2.0 / (a.sqrt() * p.x.cbrt()) * r.powf(0.25);
    let z = p.x.powf(2.0 / 3.0) * r * (1.0 - a);
    Ok((scale, z))
}

/// `2/(√a·x^{1/3}) (ζ/(1−a))^{1/4} Ai(x^{2/3}ζ)`.
///
/// There are no correction terms at this order, so `trunc_estimate` is 0.
pub fn eval_airy_uniform(p: EvalPoint) -> Result<ExpansionResult, EvalError> {
    let (scale, z) = uniform_parts(&p)?;
    let mut warnings = Vec::new();
    if z > AI_UNDERFLOW {
        warnings.push(Warning::AiryUnderflow);
    }
    Ok(ExpansionResult::assemble(
        vec![scale * airy_ai(z)],
        vec![],
        0.0,
        Regime::PosCoalesce,
        Method::AiryUniform,
        warnings,
    ))
}

/// Same prefactor times the Airy modulus `√(Ai² + Bi²)`; on the oscillatory
/// side this is the amplitude that the uniform form attaches to `k_ν(x)`.
pub fn airy_uniform_envelope(p: EvalPoint) -> Result<f64, EvalError> {
    let (scale, z) = uniform_parts(&p)?;
    Ok(scale * airy_ai(z).hypot(airy_bi(z)))
}
