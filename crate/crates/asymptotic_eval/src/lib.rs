//! Asymptotic evaluation of the Bateman function `k_ν(x)` and the Havelock
//! function `h_ν(x)` for `ν = a|x|` with `|x|` large.
//!
//! One evaluator per regime of the saddle geometry, fixed-order expansions
//! for bounded `ν`, the leading uniform Airy form, and [`auto_eval`] which
//! classifies a point and dispatches. All values are assembled in real
//! arithmetic from the coefficient tables of `saddle_coefficients`.

mod auto;
mod cache;
mod fixed;
mod phases;
pub mod special;
mod theorems;
mod uniform;

use std::fmt;
use std::str::FromStr;

pub use auto::{auto_eval, classify, AutoConfig, DEFAULT_TRANSITION_WIDTH};
pub use cache::coefficients;
pub use fixed::{eval_fixed_order, ArgSign};
pub use phases::{phases, PhasePack};
pub use series_engine::{Regime, Which};
pub use special::{airy_ai, airy_bi, lower_gamma_int};
pub use theorems::{
    eval_h_coalesce, eval_h_pos_mono, eval_h_pos_osc, eval_k_coalesce, eval_k_pos_mono,
    eval_k_pos_osc, eval_neg, pos_osc_envelope,
};
pub use uniform::{airy_uniform_envelope, eval_airy_uniform};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EvalError {
    #[error("{0}")]
    Domain(String),
    #[error("truncation index {k} exceeds the {available} available terms of {series}")]
    Truncation {
        k: usize,
        available: usize,
        series: &'static str,
    },
    #[error(transparent)]
    Coefficients(#[from] saddle_coefficients::CoeffError),
}

/// Argument and order. `a = ν/|x|` is always derived, never stored.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalPoint {
    pub x: f64,
    pub nu: f64,
}

impl EvalPoint {
    pub fn new(x: f64, nu: f64) -> Result<Self, EvalError> {
        if !x.is_finite() || !nu.is_finite() {
            return Err(EvalError::Domain(format!("non-finite input x={x}, nu={nu}")));
        }
        if x == 0.0 {
            return Err(EvalError::Domain("x must be nonzero".into()));
        }
        if nu < 0.0 {
            return Err(EvalError::Domain(format!("nu = {nu} must be >= 0")));
        }
        Ok(EvalPoint { x, nu })
    }

    /// Point with `ν = a|x|`.
    pub fn from_ratio(x: f64, a: f64) -> Result<Self, EvalError> {
        Self::new(x, a * x.abs())
    }

    pub fn a(&self) -> f64 {
        self.nu / self.x.abs()
    }

    pub fn abs_x(&self) -> f64 {
        self.x.abs()
    }
}

/// How many terms of each constituent series to keep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TruncationPolicy {
    /// The extent of the printed coefficient lists.
    #[default]
    All,
    /// Stop before the smallest term of each series.
    Optimal,
    /// Highest term index `K` of the main series; secondary series are cut at
    /// the same index where they have one.
    Fixed(usize),
}

impl FromStr for TruncationPolicy {
    type Err = EvalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(TruncationPolicy::All),
            "optimal" => Ok(TruncationPolicy::Optimal),
            _ => s
                .strip_prefix("K=")
                .and_then(|k| k.parse().ok())
                .map(TruncationPolicy::Fixed)
                .ok_or_else(|| EvalError::Domain(format!("bad truncation policy '{s}'"))),
        }
    }
}

impl fmt::Display for TruncationPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TruncationPolicy::All => f.write_str("all"),
            TruncationPolicy::Optimal => f.write_str("optimal"),
            TruncationPolicy::Fixed(k) => write!(f, "K={k}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Thm5,
    Thm6,
    Thm7,
    FixedOrder,
    AiryUniform,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Thm1 => "thm1",
            Method::Thm2 => "thm2",
            Method::Thm3 => "thm3",
            Method::Thm4 => "thm4",
            Method::Thm5 => "thm5",
            Method::Thm6 => "thm6",
            Method::Thm7 => "thm7",
            Method::FixedOrder => "fixed",
            Method::AiryUniform => "airy",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Warning {
    /// `a` lies within twice the transition width of 1 but outside it.
    NearCoalescence,
    /// Havelock inside the transition band: no uniform form exists, the
    /// one-sided expansion was used.
    HavelockInTransition,
    /// `k_0(−x)` from the negative-argument expansion is 0; the function is `e^{−x}`.
    BatemanOrderZeroNegative,
    /// An `O(e^{−|x|})` piece of the fixed-order Havelock form is dropped.
    NeglectedExponential,
    /// Fixed-order form used with `ν` large relative to `|x|`.
    OrderNotSmall,
    /// Airy argument beyond the underflow guard; the value is 0.
    AiryUnderflow,
    /// Optimal truncation found no minimum among the available terms.
    OptimalAtLastTerm,
}

impl Warning {
    pub fn code(self) -> &'static str {
        match self {
            Warning::NearCoalescence => "near-coalescence",
            Warning::HavelockInTransition => "havelock-in-transition",
            Warning::BatemanOrderZeroNegative => "k0-negative-is-exp",
            Warning::NeglectedExponential => "neglected-exponential",
            Warning::OrderNotSmall => "order-not-small",
            Warning::AiryUnderflow => "airy-underflow",
            Warning::OptimalAtLastTerm => "optimal-at-last-term",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExpansionResult {
    pub value: f64,
    /// Contributions of the main series, prefactor included, in index order.
    pub terms: Vec<f64>,
    /// Contributions of the algebraic (C or c) series, when present.
    pub algebraic_terms: Vec<f64>,
    /// Highest index kept in the main series.
    pub k_used: usize,
    /// Sum over constituent series of the first omitted term's magnitude.
    pub trunc_estimate: f64,
    pub regime: Regime,
    pub method: Method,
    pub warnings: Vec<Warning>,
}

impl ExpansionResult {
    fn assemble(
        terms: Vec<f64>,
        algebraic_terms: Vec<f64>,
        trunc_estimate: f64,
        regime: Regime,
        method: Method,
        warnings: Vec<Warning>,
    ) -> Self {
        let value = terms.iter().sum::<f64>() + algebraic_terms.iter().sum::<f64>();
        ExpansionResult {
            value,
            k_used: terms.len().saturating_sub(1),
            terms,
            algebraic_terms,
            trunc_estimate,
            regime,
            method,
            warnings,
        }
    }
}
