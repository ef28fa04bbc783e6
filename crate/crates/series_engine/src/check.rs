//! Round-trip diagnostics shared by tests and the acceptance report.

use num_traits::Zero;

use crate::dd::{cx, Cdd};
use crate::series::TruncatedSeries;
use crate::SeriesError;

/// Coefficient-wise comparison of `compose(s, revert(s))` with the identity.
#[derive(Debug, Clone)]
pub struct RoundTrip {
    /// `|[w^n](s∘t) − δ_{n1}|` for each `n`.
    pub abs_err: Vec<f64>,
    /// `[w^n]` of `|s|∘|t|`: the size of the terms that cancel in coefficient `n`.
    pub magnitude: Vec<f64>,
}

impl RoundTrip {
    pub fn max_abs_err(&self) -> f64 {
        self.abs_err.iter().copied().fold(0.0, f64::max)
    }

    /// Largest `abs_err / max(1, magnitude)`.
    pub fn max_scaled_err(&self) -> f64 {
        self.abs_err
            .iter()
            .zip(&self.magnitude)
            .map(|(e, m)| e / m.max(1.0))
            .fold(0.0, f64::max)
    }
}

pub fn reversion_round_trip(s: &TruncatedSeries) -> Result<RoundTrip, SeriesError> {
    let t = s.revert()?;
    let id = s.compose(&t)?;
    let abs_err = (0..=id.order())
        .map(|n| {
            let want = if n == 1 { 1.0 } else { 0.0 };
            cx::abs(id.coeff(n) - cx::from_f64(want, 0.0)).to_f64()
        })
        .collect();
    let abs_s = majorant(s);
    let abs_t = majorant(&t);
    let magnitude = abs_s
        .compose(&abs_t)?
        .coeffs()
        .iter()
        .map(|c| c.re.to_f64())
        .collect();
    Ok(RoundTrip { abs_err, magnitude })
}

fn majorant(s: &TruncatedSeries) -> TruncatedSeries {
    let coeffs = s
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, &c)| {
            if k == 0 && c.is_zero() {
                Cdd::zero()
            } else {
                cx::real(cx::abs(c))
            }
        })
        .collect();
    TruncatedSeries::new(Cdd::zero(), coeffs).expect("finite input")
}
