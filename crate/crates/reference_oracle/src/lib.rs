//! Independent quadrature values of `k_ν(x)` and `h_ν(x)` for either sign of
//! `x`: direct integration on the real axis, integration along steepest
//! descent paths, and the Laplace integral of `U(½ν, 0, 2x)` for `k_ν(−x)`.

pub mod geometry;
pub mod oracles;
pub mod paths;
pub mod quad;

use std::fmt;

pub use oracles::{
    applicable, certified_value, oracle_contour, oracle_cross_check, oracle_direct,
    oracle_u_negative, CrossCheck, Deviation,
};
pub use paths::{certify, level_set_eta, b1_eta, trace_path, write_paths_csv, Branch, ContourPath};
pub use series_engine::{Regime, Which};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OracleError {
    #[error("oscillation budget exceeded: {zeros} zeros needed or summed")]
    OscillationBudget { zeros: usize },
    #[error("path tracing failed at xi = {xi}")]
    PathTracing { xi: f64 },
    #[error("path failed certification: {0}")]
    Certification(String),
    #[error("error estimate {estimate:e} above tolerance {tolerance:e}")]
    Tolerance { estimate: f64, tolerance: f64 },
    #[error("{0}")]
    Domain(String),
    #[error("no oracle succeeded at this point")]
    AllFailed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OracleMethod {
    Direct,
    Contour,
    UIntegral,
}

impl OracleMethod {
    pub fn name(self) -> &'static str {
        match self {
            OracleMethod::Direct => "direct",
            OracleMethod::Contour => "contour",
            OracleMethod::UIntegral => "u_integral",
        }
    }
}

impl fmt::Display for OracleMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_err_estimate: f64,
    pub n_evals: usize,
    pub method: OracleMethod,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleConfig {
    /// Target relative accuracy of each quadrature.
    pub rel_tol: f64,
    /// Largest `|x|` accepted by the direct method.
    pub direct_max_abs_x: f64,
    /// Zero-to-zero panels summed before the direct method gives up.
    pub max_zeros: usize,
    /// Minimum height of the truncated legs of the negative-argument contour.
    pub neg_height: f64,
    /// Contour legs stop where the integrand falls below this fraction of
    /// its value at the saddle (or at the finite endpoint).
    pub cutoff: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            rel_tol: 1e-14,
            direct_max_abs_x: 30.0,
            max_zeros: 10_000,
            neg_height: 12.0,
            cutoff: 1e-30,
        }
    }
}

/// `sin(πν/2)`, exact at integers.
pub(crate) fn sin_half_pi(nu: f64) -> f64 {
    let r = nu.rem_euclid(4.0);
    match r {
        r if r == 0.0 || r == 2.0 => 0.0,
        r if r == 1.0 => 1.0,
        r if r == 3.0 => -1.0,
        _ => (std::f64::consts::FRAC_PI_2 * r).sin(),
    }
}

/// `cos(πν/2)`, exact at integers.
pub(crate) fn cos_half_pi(nu: f64) -> f64 {
    sin_half_pi(nu + 1.0)
}
