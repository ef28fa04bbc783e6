//! Taylor expansion of the phase `ψ(u) = i(tan u ∓ a·u)` about a chosen point.
//!
//! Every saddle has an algebraic tangent value, so the expansion only ever
//! needs `tan(center)`: the remaining coefficients follow from `t' = 1 + t²`.

use num_traits::{One, Zero};

use crate::dd::{cx, Cdd, Dd};
use crate::series::TruncatedSeries;
use crate::SeriesError;

/// Which expansion applies at a point `(x, ν)`, with `a = ν/|x|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `x > 0`, `a > 1`: real saddles, oscillatory.
    PosOsc,
    /// `x > 0`, `a < 1`: saddles on the imaginary axis.
    PosMono,
    /// `x > 0`, `a ≈ 1`: saddles coalesce at the origin.
    PosCoalesce,
    /// `x < 0`: saddles on `Re u = π/2`.
    NegArg,
}

impl Regime {
    /// Sign `s` in `ψ(u) = i(tan u + s·a·u)`.
    pub fn linear_sign(self) -> f64 {
        match self {
            Regime::NegArg => 1.0,
            _ => -1.0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Regime::PosOsc => "pos-osc",
            Regime::PosMono => "pos-mono",
            Regime::PosCoalesce => "pos-coalesce",
            Regime::NegArg => "neg",
        }
    }
}

impl std::str::FromStr for Regime {
    type Err = String;
    fn from_str(s: &str) -> Result<Regime, String> {
        match s {
            "pos-osc" => Ok(Regime::PosOsc),
            "pos-mono" => Ok(Regime::PosMono),
            "pos-coalesce" => Ok(Regime::PosCoalesce),
            "neg" => Ok(Regime::NegArg),
            _ => Err(format!("unknown regime '{s}'")),
        }
    }
}

/// The cosine (Bateman, `k`) or sine (Havelock, `h`) integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Which {
    Bateman,
    Havelock,
}

impl Which {
    pub fn symbol(self) -> &'static str {
        match self {
            Which::Bateman => "k",
            Which::Havelock => "h",
        }
    }
}

impl std::str::FromStr for Which {
    type Err = String;
    fn from_str(s: &str) -> Result<Which, String> {
        match s {
            "k" | "bateman" => Ok(Which::Bateman),
            "h" | "havelock" => Ok(Which::Havelock),
            _ => Err(format!("unknown function '{s}'")),
        }
    }
}

/// An expansion point together with the tangent there.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExpansionPoint {
    /// Location; carries `f64` accuracy for non-origin saddles.
    pub u: Cdd,
    /// `tan u`, exact to working precision.
    pub tan_u: Cdd,
}

impl ExpansionPoint {
    pub fn origin() -> Self {
        ExpansionPoint {
            u: Cdd::zero(),
            tan_u: Cdd::zero(),
        }
    }

    /// The saddle used by each regime:
    /// `arctan√(a−1)`, `i·arctanh√(1−a)`, `0` (only at `a = 1`),
    /// and `π/2 + iβ` with `tan = i√(1+a)` for the negative argument.
    pub fn saddle(regime: Regime, a: Dd) -> Result<Self, SeriesError> {
        let af = a.to_f64();
        match regime {
            Regime::PosOsc if a > Dd::ONE => {
                let s = (a - Dd::ONE).sqrt();
                Ok(ExpansionPoint {
                    u: cx::from_f64(s.to_f64().atan(), 0.0),
                    tan_u: cx::real(s),
                })
            }
            Regime::PosMono if a > Dd::ZERO && a < Dd::ONE => {
                let s = (Dd::ONE - a).sqrt();
                Ok(ExpansionPoint {
                    u: cx::from_f64(0.0, s.to_f64().atanh()),
                    tan_u: cx::new(Dd::ZERO, s),
                })
            }
            Regime::PosCoalesce if a == Dd::ONE => Ok(Self::origin()),
            Regime::NegArg if a > Dd::ZERO => {
                let s = (Dd::ONE + a).sqrt();
                let beta = (1.0 / s.to_f64()).atanh();
                Ok(ExpansionPoint {
                    u: cx::new(Dd::PI * Dd::from_f64(0.5), Dd::from_f64(beta)),
                    tan_u: cx::new(Dd::ZERO, s),
                })
            }
            _ => Err(SeriesError::Domain(format!(
                "no {} saddle at a = {af}",
                regime.name()
            ))),
        }
    }

    /// Arbitrary point; the tangent is taken in `f64` and the point must stay
    /// clear of the poles `π/2 + mπ`.
    pub fn at(u: Cdd) -> Result<Self, SeriesError> {
        let z = cx::to_c64(u);
        if z.cos().norm() < 1e-8 {
            return Err(SeriesError::Pole(z.re, z.im));
        }
        Ok(ExpansionPoint {
            u,
            tan_u: cx::from_c64(z.tan()),
        })
    }
}

/// Taylor coefficients of `tan` about a point with `tan = t0`, from `t' = 1 + t²`.
pub fn tan_taylor(t0: Cdd, n: usize) -> Vec<Cdd> {
    riccati_taylor(t0, n, Dd::ONE)
}

/// Taylor coefficients of `tanh` about a point with `tanh = h0`, from `h' = 1 − h²`.
pub fn tanh_taylor(h0: Cdd, n: usize) -> Vec<Cdd> {
    riccati_taylor(h0, n, -Dd::ONE)
}

// y' = 1 + s·y²: (k+1) y_{k+1} = [k = 0] + s·Σ_{j=0}^k y_j y_{k−j}
fn riccati_taylor(y0: Cdd, n: usize, s: Dd) -> Vec<Cdd> {
    let mut y = vec![Cdd::zero(); n + 1];
    y[0] = y0;
    for k in 0..n {
        let mut sq = Cdd::zero();
        for j in 0..=k {
            sq = sq + y[j] * y[k - j];
        }
        let mut rhs = sq.scale(s);
        if k == 0 {
            rhs = rhs + Cdd::one();
        }
        y[k + 1] = rhs.unscale(Dd::from_i64(k as i64 + 1));
    }
    y
}

/// `ψ(u) = i(tan u + s·a·u)` expanded about `center`, with `s` from the regime.
pub fn taylor_phase(
    regime: Regime,
    a: Dd,
    center: &ExpansionPoint,
    n: usize,
) -> Result<TruncatedSeries, SeriesError> {
    if n < 3 {
        return Err(SeriesError::Domain(format!("phase order {n} < 3")));
    }
    if !(a > Dd::ZERO) {
        return Err(SeriesError::Domain(format!("a = {} must be positive", a.to_f64())));
    }
    let sa = a.mul_f64(regime.linear_sign());
    let t = tan_taylor(center.tan_u, n);
    let i = cx::i();
    let mut coeffs: Vec<Cdd> = t.iter().map(|&c| i * c).collect();
    coeffs[0] = i * (center.tan_u + center.u.scale(sa));
    coeffs[1] = coeffs[1] + i.scale(sa);
    TruncatedSeries::new(center.u, coeffs)
}
