//! Truncated complex power series in double-double precision.
//!
//! The pieces needed to turn a phase function into steepest-descent
//! coefficients: Taylor expansion of `i(tan u ∓ a u)` about a saddle, series
//! square and cube roots, composition and reversion.

pub mod check;
pub mod dd;
pub mod phase;
pub mod series;

pub use check::{reversion_round_trip, RoundTrip};
pub use dd::{cx, Cdd, Dd};
pub use phase::{tan_taylor, tanh_taylor, taylor_phase, ExpansionPoint, Regime, Which};
pub use series::{series_arith, ArithKind, Operand, SqrtBranch, TruncatedSeries};

/// Default truncation order for coefficient generation.
pub const DEFAULT_ORDER: usize = 24;

/// Digits carried by [`Dd`]; the upper bound for `working_digits`.
pub const MAX_WORKING_DIGITS: u32 = 32;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SeriesError {
    #[error("series have different centers")]
    CenterMismatch,
    #[error("inner series must vanish at its center")]
    NonzeroInnerConstant,
    #[error("zero linear coefficient; reversion undefined")]
    ZeroLinearCoefficient,
    #[error("zero constant term")]
    ZeroConstantTerm,
    #[error("empty series")]
    Empty,
    #[error("non-finite coefficient at index {0}")]
    NonFinite(usize),
    #[error("operand does not fit operation {0:?}")]
    Operand(ArithKind),
    #[error("expansion point {0} + {1}i sits on a pole of tan")]
    Pole(f64, f64),
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Precision(String),
}

/// Digit budgets for coefficient generation and expansion evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrecisionConfig {
    pub working_digits: u32,
    pub eval_digits: u32,
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        PrecisionConfig {
            working_digits: 30,
            eval_digits: 15,
        }
    }
}

impl PrecisionConfig {
    pub fn new(working_digits: u32, eval_digits: u32) -> Result<Self, SeriesError> {
        if eval_digits < 15 || working_digits < eval_digits || working_digits < 30 {
            return Err(SeriesError::Precision(format!(
                "need working_digits >= 30 and working_digits >= eval_digits >= 15, got {working_digits}/{eval_digits}"
            )));
        }
        if working_digits > MAX_WORKING_DIGITS {
            return Err(SeriesError::Precision(format!(
                "working_digits {working_digits} exceeds the {MAX_WORKING_DIGITS} digits of the double-double backend"
            )));
        }
        Ok(PrecisionConfig {
            working_digits,
            eval_digits,
        })
    }

    /// `10^(−working_digits + 6)`: the coefficient-level agreement expected of
    /// round trips and saddle conditions.
    pub fn tolerance(&self) -> f64 {
        10f64.powi(6 - self.working_digits as i32)
    }
}
