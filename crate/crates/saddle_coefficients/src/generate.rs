use num_traits::{One, Zero};
use series_engine::{
    cx, tanh_taylor, taylor_phase, Cdd, Dd, ExpansionPoint, Regime, SqrtBranch, TruncatedSeries,
};

use crate::{CoeffError, CoefficientFamily, CoefficientTable, MAX_INDEX};

/// Generates subscripts `0..=k_max` of a family by the saddle construction.
///
/// For the quadratic saddles `−w² = ψ(u) − ψ(u₀)` is solved for `w(u)` with
/// the principal root of `−(ψ − ψ₀)/(u − u₀)²`, reverted and differentiated;
/// with `d_n = [w^n] du/dw` the stored values are
/// `A_{2k} = d_{2k}/(d_0 i^k)`, `Â_{2k} = d_{2k}/d_0` and
/// `Â_{2k+1} = d_{2k+1}/(i(−1)^k)`. The odd family carries no `d_0` division:
/// that is the normalization under which the printed odd forms hold.
///
/// A negative parameter for `AhatEven` gives `Â_{2k}(−a)`, expanded at the
/// saddle `π/2 + iβ` of the negative-argument phase.
pub fn generate_family(
    family: CoefficientFamily,
    parameter: Option<f64>,
    k_max: usize,
) -> Result<CoefficientTable, CoeffError> {
    family.check_parameter(parameter)?;
    if k_max > MAX_INDEX {
        return Err(CoeffError::Budget(k_max));
    }
    let subs = family.subscripts(k_max);
    if subs.is_empty() {
        return Err(CoeffError::Domain(format!(
            "{family} has no subscript <= {k_max}"
        )));
    }
    let p = parameter.map(Dd::from_f64).unwrap_or(Dd::ONE);
    let i = cx::i();
    let values: Vec<Cdd> = match family {
        CoefficientFamily::A => {
            let d = quadratic_saddle_dudw(Regime::PosOsc, p, k_max)?;
            let mut ik = Cdd::one();
            subs.iter()
                .map(|&k| {
                    let v = d[k] / (d[0] * ik);
                    ik = ik * i;
                    v
                })
                .collect()
        }
        CoefficientFamily::AhatEven => {
            let d = if p.is_sign_negative() {
                quadratic_saddle_dudw(Regime::NegArg, -p, k_max)?
            } else {
                quadratic_saddle_dudw(Regime::PosMono, p, k_max)?
            };
            subs.iter().map(|&k| d[k] / d[0]).collect()
        }
        CoefficientFamily::AhatOdd => {
            let d = quadratic_saddle_dudw(Regime::PosMono, p, k_max)?;
            subs.iter()
                .map(|&k| {
                    let sign = if (k / 2) % 2 == 0 { i } else { -i };
                    d[k] / sign
                })
                .collect()
        }
        CoefficientFamily::B => {
            let d = cubic_saddle_dudw(2 * k_max)?;
            subs.iter().map(|&k| d[2 * k]).collect()
        }
        CoefficientFamily::C => {
            let d = endpoint_dydw(p, 2 * k_max)?;
            subs.iter().map(|&k| d[2 * k]).collect()
        }
        CoefficientFamily::CNu => fixed_order(p, k_max)?,
    };
    Ok(CoefficientTable::new(family, parameter, k_max, values))
}

/// `[w^0..=w^n]` of `du/dw` for `−w² = ψ(u) − ψ(u₀)`.
fn quadratic_saddle_dudw(regime: Regime, a: Dd, n: usize) -> Result<Vec<Cdd>, CoeffError> {
    let center = ExpansionPoint::saddle(regime, a)?;
    let psi = taylor_phase(regime, a, &center, n + 3)?;
    let q = psi.shift_down(2)?.scale(-Cdd::one());
    let w = q.sqrt(SqrtBranch::Principal)?.shift_up(1);
    Ok(w.revert()?.derivative().coeffs()[..=n].to_vec())
}

/// `[w^0..=w^n]` of `du/dw` for `−w³ = ψ(u)` at `a = 1`, on the cube-root
/// branch that makes `d_0 = μ`.
fn cubic_saddle_dudw(n: usize) -> Result<Vec<Cdd>, CoeffError> {
    let psi = taylor_phase(Regime::PosCoalesce, Dd::ONE, &ExpansionPoint::origin(), n + 4)?;
    let q = psi.shift_down(3)?.scale(-Cdd::one());
    let w = q.cbrt(0)?.shift_up(1);
    Ok(w.revert()?.derivative().coeffs()[..=n].to_vec())
}

/// `[w^0..=w^n]` of `dy/dw` for `(a − 1)w = ay − tanh y`.
fn endpoint_dydw(a: Dd, n: usize) -> Result<Vec<Cdd>, CoeffError> {
    let inv = Dd::ONE / (a - Dd::ONE);
    let mut s = tanh_taylor(Cdd::zero(), n + 1);
    for c in s.iter_mut() {
        *c = -*c;
    }
    s[1] = s[1] + cx::real(a);
    let s = TruncatedSeries::new(Cdd::zero(), s)?.scale(cx::real(inv));
    Ok(s.revert()?.derivative().coeffs()[..=n].to_vec())
}

/// `k!·[w^k]` of `e^{ν arctanh w}/(1 − w²)`.
fn fixed_order(nu: Dd, n: usize) -> Result<Vec<Cdd>, CoeffError> {
    let atanh: Vec<Cdd> = (0..=n)
        .map(|k| {
            if k % 2 == 1 {
                cx::real(nu / Dd::from_i64(k as i64))
            } else {
                Cdd::zero()
            }
        })
        .collect();
    let e = TruncatedSeries::new(Cdd::zero(), atanh)?.exp()?;
    let geometric: Vec<Cdd> = (0..=n)
        .map(|k| if k % 2 == 0 { Cdd::one() } else { Cdd::zero() })
        .collect();
    let g = e.mul(&TruncatedSeries::new(Cdd::zero(), geometric)?)?;
    let mut fact = Dd::ONE;
    Ok((0..=n)
        .map(|k| {
            if k > 0 {
                fact = fact * Dd::from_i64(k as i64);
            }
            g.coeff(k).scale(fact)
        })
        .collect())
}
