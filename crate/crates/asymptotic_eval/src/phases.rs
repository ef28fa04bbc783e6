use std::f64::consts::PI;

use crate::EvalError;

/// Phase constants at the saddles. Entries outside their range of `a` are `None`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhasePack {
    /// `φ(u₀) = √(a−1) − a·arctan√(a−1)`, `a > 1`.
    pub phi0: Option<f64>,
    /// `Φ = xφ(u₀) + π/4`, `a > 1`.
    pub big_phi: Option<f64>,
    /// `Ψ = √(1−a) − a·arctanh√(1−a)`, `0 < a < 1`.
    pub psi: Option<f64>,
    /// `Ω = √(1+a) + a·arctanh(1/√(1+a))`.
    pub omega: f64,
    /// Airy variable; positive for `a < 1`.
    pub zeta: f64,
    /// `c = a·arctan√(a−1) − √(a−1)`, `a > 1`.
    pub c_asym: Option<f64>,
    /// `|x|·|a − 1|`.
    pub lambda_pos: f64,
    /// `|x|(1 + a)`.
    pub lambda_neg: f64,
}

/// `ζ/(1−a)` as a series in `ε = 1 − a`; used where the closed form cancels.
const ZETA_RATIO: [(i64, i64); 6] = [
    (1, 1),
    (2, 15),
    (83, 1575),
    (2008, 70875),
    (1451482, 81860625),
    (194094988, 15962821875),
];

/// Below this `|1 − a|` the series for `ζ/(1−a)` replaces the closed form.
pub(crate) const ZETA_SERIES_BAND: f64 = 1e-3;

pub(crate) fn zeta_ratio(a: f64) -> f64 {
    let eps = 1.0 - a;
    if eps.abs() < ZETA_SERIES_BAND {
        return ZETA_RATIO
            .iter()
            .rev()
            .fold(0.0, |acc, &(p, q)| acc * eps + p as f64 / q as f64);
    }
    zeta_closed(a) / eps
}

fn zeta_closed(a: f64) -> f64 {
    if a < 1.0 {
        let s = (1.0 - a).sqrt();
        (1.5 * (s - a * s.atanh())).powf(2.0 / 3.0)
    } else {
        let s = (a - 1.0).sqrt();
        -(1.5 * (a * s.atan() - s)).powf(2.0 / 3.0)
    }
}

pub fn phases(a: f64, x: f64) -> Result<PhasePack, EvalError> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(EvalError::Domain(format!("phases need a > 0, got {a}")));
    }
    let ax = x.abs();
    let (phi0, c_asym) = if a > 1.0 {
        let s = (a - 1.0).sqrt();
        let phi0 = s - a * s.atan();
        (Some(phi0), Some(-phi0))
    } else {
        (None, None)
    };
    let psi = (a < 1.0).then(|| {
        let s = (1.0 - a).sqrt();
        s - a * s.atanh()
    });
    let r = (1.0 + a).sqrt();
    let zeta = if a == 1.0 {
        0.0
    } else {
        zeta_ratio(a) * (1.0 - a)
    };
    Ok(PhasePack {
        phi0,
        big_phi: phi0.map(|p| ax * p + PI / 4.0),
        psi,
        omega: r + a * (1.0 / r).atanh(),
        zeta,
        c_asym,
        lambda_pos: ax * (a - 1.0).abs(),
        lambda_neg: ax * (1.0 + a),
    })
}
