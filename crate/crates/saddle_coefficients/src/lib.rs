//! Coefficient families of the steepest-descent expansions of k_ν and h_ν.
//!
//! Every family is produced two ways: [`generate_family`] runs the saddle
//! construction through `series_engine` (expand the phase, take a root, revert,
//! differentiate), and [`closed_form`] evaluates the printed rational forms.
//! The two agree to working precision wherever both exist.

mod generate;
mod printed;

use std::fmt;
use std::str::FromStr;

use series_engine::{cx, Cdd, Dd, SeriesError};

pub use generate::generate_family;
pub use printed::closed_form;

/// Highest subscript [`generate_family`] will produce.
pub const MAX_INDEX: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoefficientFamily {
    /// `A_{2k}(a)`, oscillatory saddles, `a > 1`.
    A,
    /// `Â_{2k}(a)`, imaginary-axis saddles, `a < 1`.
    AhatEven,
    /// `Â_{2k+1}(a)`, the odd powers needed by h for `a < 1`.
    AhatOdd,
    /// `B_k`, the cubic saddle at `a = 1`.
    B,
    /// `C_k(a)`, the algebraic series from the endpoint `u = 0`.
    C,
    /// `c_k(ν)`, fixed-order coefficients.
    CNu,
}

impl CoefficientFamily {
    pub const ALL: [CoefficientFamily; 6] = [
        CoefficientFamily::A,
        CoefficientFamily::AhatEven,
        CoefficientFamily::AhatOdd,
        CoefficientFamily::B,
        CoefficientFamily::C,
        CoefficientFamily::CNu,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CoefficientFamily::A => "A",
            CoefficientFamily::AhatEven => "AhatEven",
            CoefficientFamily::AhatOdd => "AhatOdd",
            CoefficientFamily::B => "B",
            CoefficientFamily::C => "C",
            CoefficientFamily::CNu => "cNu",
        }
    }

    /// Subscript of the `j`-th stored value.
    pub fn subscript(self, j: usize) -> usize {
        match self {
            CoefficientFamily::A | CoefficientFamily::AhatEven => 2 * j,
            CoefficientFamily::AhatOdd => 2 * j + 1,
            _ => j,
        }
    }

    /// Subscripts `≤ k_max` that belong to the family.
    pub fn subscripts(self, k_max: usize) -> Vec<usize> {
        (0..=k_max)
            .map(|j| self.subscript(j))
            .take_while(|&k| k <= k_max)
            .collect()
    }

    /// Highest subscript with a printed closed form.
    pub fn printed_max(self) -> usize {
        match self {
            CoefficientFamily::A | CoefficientFamily::AhatEven | CoefficientFamily::CNu => 8,
            CoefficientFamily::AhatOdd => 9,
            CoefficientFamily::B => 7,
            CoefficientFamily::C => 6,
        }
    }

    pub fn is_printed(self, k: usize) -> bool {
        k <= self.printed_max() && self.subscripts(k).last() == Some(&k)
    }

    /// Whether the family takes a parameter at all (`B` does not).
    pub fn has_parameter(self) -> bool {
        self != CoefficientFamily::B
    }

    pub fn check_parameter(self, p: Option<f64>) -> Result<(), CoeffError> {
        let bad = |why: &str| {
            Err(CoeffError::Domain(format!(
                "{} needs {why}, got {p:?}",
                self.name()
            )))
        };
        match (self, p) {
            (CoefficientFamily::B, _) => Ok(()),
            (_, None) => bad("a parameter"),
            (_, Some(v)) if !v.is_finite() => bad("a finite parameter"),
            (CoefficientFamily::A, Some(a)) if a <= 1.0 => bad("a > 1"),
            // negative values are the reflected parameter used for x < 0
            (CoefficientFamily::AhatEven, Some(a)) if a >= 1.0 || a == 0.0 => {
                bad("a < 1, a != 0")
            }
            (CoefficientFamily::AhatOdd, Some(a)) if a >= 1.0 || a <= 0.0 => bad("0 < a < 1"),
            (CoefficientFamily::C, Some(a)) if a == 1.0 => bad("a != 1"),
            (CoefficientFamily::CNu, Some(nu)) if nu < 0.0 => bad("nu >= 0"),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for CoefficientFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CoefficientFamily {
    type Err = CoeffError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| CoeffError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CoeffError {
    #[error("unknown coefficient family '{0}'")]
    UnknownFamily(String),
    #[error("{0}")]
    Domain(String),
    #[error("index {0} exceeds the precision budget of {MAX_INDEX}")]
    Budget(usize),
    #[error("no printed closed form for {0}_{1}")]
    NotPrinted(CoefficientFamily, usize),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// One family evaluated at one parameter, subscripts `0..=max_index` as the
/// family allows.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientTable {
    pub family: CoefficientFamily,
    pub parameter: Option<f64>,
    pub max_index: usize,
    values: Vec<Cdd>,
}

impl CoefficientTable {
    pub(crate) fn new(
        family: CoefficientFamily,
        parameter: Option<f64>,
        max_index: usize,
        values: Vec<Cdd>,
    ) -> Self {
        CoefficientTable {
            family,
            parameter,
            max_index,
            values,
        }
    }

    /// Stored values in subscript order.
    pub fn values(&self) -> &[Cdd] {
        &self.values
    }

    pub fn subscripts(&self) -> Vec<usize> {
        self.family.subscripts(self.max_index)
    }

    /// Value at subscript `k`, if the family has it and it was generated.
    pub fn get(&self, k: usize) -> Option<Cdd> {
        let j = self.family.subscripts(self.max_index).iter().position(|&s| s == k)?;
        Some(self.values[j])
    }

    /// Real parts as `f64`, in storage order. Meaningful for the real families.
    pub fn real_f64(&self) -> Vec<f64> {
        self.values.iter().map(|c| c.re.to_f64()).collect()
    }

    pub fn complex_f64(&self) -> Vec<(f64, f64)> {
        self.values
            .iter()
            .map(|&c| {
                let z = cx::to_c64(c);
                (z.re, z.im)
            })
            .collect()
    }
}

/// `μ = 3^{1/3} e^{iπ/6}`, the value of `B_0`.
pub fn mu() -> Cdd {
    let three = Dd::from_f64(3.0);
    let r = three.cbrt();
    cx::new(r * three.sqrt() * Dd::from_f64(0.5), r * Dd::from_f64(0.5))
}
