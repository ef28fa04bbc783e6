//! Library behind the `bateman` command: point evaluation, table
//! reproduction, coefficient and contour export, and asymptotic-vs-oracle
//! sweeps. Every command produces a list of [`Record`]s that the binary writes
//! as CSV or JSON lines.

pub mod commands;
pub mod output;
pub mod parallel;
pub mod printed;

use std::fmt;
use std::str::FromStr;

use asymptotic_eval::{EvalError, TruncationPolicy, DEFAULT_TRANSITION_WIDTH};
use reference_oracle::OracleError;
use saddle_coefficients::CoeffError;
use series_engine::{PrecisionConfig, SeriesError};

pub use commands::{
    cmd_coeffs, cmd_compare, cmd_contour, cmd_eval, cmd_table, compare_rows, loglog_slope,
    rel_error, table_rows, CompareArgs, CompareRow, EvalArgs, EvalMethod, TableRow,
};
pub use output::{fmt_num, write_records, Field, Record};
pub use parallel::Exec;
pub use printed::{printed_cells, PrintedCell};

/// Exit status for domain and usage errors.
pub const EXIT_USAGE: i32 = 2;
/// Exit status when a numerical certificate is not met.
pub const EXIT_CERTIFICATION: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(CliError::Usage(format!("unknown format '{s}' (csv or json)"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

/// Settings shared by all commands. There is no seed: every command is
/// deterministic.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RunConfig {
    pub precision: PrecisionConfig,
    pub truncation: TruncationPolicy,
    pub transition_width: f64,
    pub format: Format,
    pub exec: Exec,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            precision: PrecisionConfig::default(),
            truncation: TruncationPolicy::All,
            transition_width: DEFAULT_TRANSITION_WIDTH,
            format: Format::Csv,
            exec: Exec::default(),
        }
    }
}

impl RunConfig {
    pub fn auto(&self) -> asymptotic_eval::AutoConfig {
        asymptotic_eval::AutoConfig {
            transition_width: self.transition_width,
            policy: self.truncation,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error(transparent)]
    Precision(#[from] SeriesError),
    #[error("cell {cell}: {source}")]
    Cell { cell: String, source: Box<CliError> },
    #[error("output: {0}")]
    Io(#[from] std::io::Error),
    #[error("output: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// 2 for bad input, 3 when an oracle or path certificate fails.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Oracle(OracleError::Domain(_)) => EXIT_USAGE,
            CliError::Oracle(_) => EXIT_CERTIFICATION,
            CliError::Cell { source, .. } => source.exit_code(),
            _ => EXIT_USAGE,
        }
    }

    pub fn is_broken_pipe(&self) -> bool {
        let io = match self {
            CliError::Io(e) => Some(e),
            CliError::Csv(e) => match e.kind() {
                csv::ErrorKind::Io(e) => Some(e),
                _ => None,
            },
            _ => None,
        };
        io.is_some_and(|e| e.kind() == std::io::ErrorKind::BrokenPipe)
    }

    pub(crate) fn in_cell(self, cell: impl Into<String>) -> CliError {
        CliError::Cell {
            cell: cell.into(),
            source: Box::new(self),
        }
    }
}
