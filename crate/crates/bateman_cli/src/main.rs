use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use asymptotic_eval::TruncationPolicy;
use bateman_cli::{
    cmd_coeffs, cmd_compare, cmd_contour, cmd_eval, cmd_table, write_records, CliError,
    CompareArgs, EvalArgs, EvalMethod, Format, Record, RunConfig,
};
use clap::{Args, Parser, Subcommand};
use series_engine::{PrecisionConfig, Regime, Which};

/// Bateman k_ν(x) and Havelock h_ν(x): asymptotic expansions checked against
/// quadrature oracles.
#[derive(Parser, Debug)]
#[command(name = "bateman", version)]
struct Cli {
    /// Working digits for coefficient generation (30 to 32).
    #[arg(long, global = true, default_value_t = 30)]
    precision_digits: u32,
    /// Truncation policy: all, optimal or K=<n>.
    #[arg(long, global = true, default_value = "all", value_parser = parse_policy)]
    trunc: TruncationPolicy,
    /// Half-width of the band around a = 1 treated as coalescing.
    #[arg(long, global = true, default_value_t = asymptotic_eval::DEFAULT_TRANSITION_WIDTH)]
    transition_width: f64,
    #[arg(long, global = true, default_value = "csv", value_parser = parse_format)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one point.
    Eval(EvalCmd),
    /// Recompute table 1, 2 or 3 next to the printed values.
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        table: u8,
    },
    /// Dump a coefficient family.
    Coeffs {
        /// A, AhatEven, AhatOdd, B, C or cNu.
        #[arg(long)]
        family: String,
        #[arg(long, allow_negative_numbers = true, conflicts_with = "nu")]
        a: Option<f64>,
        #[arg(long)]
        nu: Option<f64>,
        /// Highest subscript; defaults to the printed extent.
        #[arg(long = "K")]
        k: Option<usize>,
    },
    /// Dump steepest-descent path nodes.
    Contour {
        /// pos-osc, pos-mono, pos-coalesce or neg.
        #[arg(long, value_parser = parse_regime)]
        regime: Regime,
        #[arg(long)]
        a: f64,
        #[arg(long, default_value_t = 256)]
        n: usize,
        /// |x| fixing where infinite legs are cut; larger values give shorter legs.
        #[arg(long, default_value_t = 5.0)]
        x: f64,
    },
    /// Sweep a log-spaced x grid, expansion against oracle.
    Compare {
        #[arg(long = "fn", value_parser = parse_which)]
        which: Which,
        #[arg(long)]
        a: f64,
        /// Range as <min>:<max>.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
        x: (f64, f64),
        #[arg(long, default_value_t = 8)]
        n: usize,
    },
}

#[derive(Args, Debug)]
struct EvalCmd {
    #[arg(long = "fn", value_parser = parse_which)]
    which: Which,
    #[arg(long, allow_negative_numbers = true)]
    x: f64,
    #[arg(long, conflicts_with = "a", required_unless_present = "a")]
    nu: Option<f64>,
    #[arg(long)]
    a: Option<f64>,
    /// auto, thm1..thm7, fixed, airy, oracle-direct, oracle-contour or oracle-u.
    #[arg(long, default_value = "auto", value_parser = parse_method)]
    method: EvalMethod,
}

fn parse_policy(s: &str) -> Result<TruncationPolicy, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_which(s: &str) -> Result<Which, String> {
    s.parse().map_err(|_| format!("unknown function '{s}' (k or h)"))
}

fn parse_regime(s: &str) -> Result<Regime, String> {
    s.parse().map_err(|_| format!("unknown regime '{s}'"))
}

fn parse_method(s: &str) -> Result<EvalMethod, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s.split_once(':').ok_or("expected <min>:<max>")?;
    let p = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("'{t}': {e}"));
    Ok((p(lo)?, p(hi)?))
}

fn run(cli: &Cli) -> Result<Vec<Record>, CliError> {
    let cfg = RunConfig {
        precision: PrecisionConfig::new(cli.precision_digits, 15)?,
        truncation: cli.trunc,
        transition_width: cli.transition_width,
        format: cli.format,
        ..RunConfig::default()
    };
    if !(cfg.transition_width >= 0.0) {
        return Err(CliError::Usage("--transition-width must be >= 0".into()));
    }
    match &cli.command {
        Command::Eval(e) => cmd_eval(
            &EvalArgs {
                which: e.which,
                x: e.x,
                nu: e.nu,
                a: e.a,
                method: e.method,
            },
            &cfg,
        ),
        Command::Table { table } => cmd_table(*table, &cfg),
        Command::Coeffs { family, a, nu, k } => cmd_coeffs(family, a.or(*nu), *k),
        Command::Contour { regime, a, n, x } => cmd_contour(*regime, *a, *n, *x),
        Command::Compare { which, a, x, n } => cmd_compare(
            &CompareArgs {
                which: *which,
                a: *a,
                x_min: x.0,
                x_max: x.1,
                n: *n,
            },
            &cfg,
        ),
    }
}

fn emit(cli: &Cli, records: &[Record]) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            write_records(records, cli.format, &mut w)?;
            w.flush()?;
        }
        None => write_records(records, cli.format, io::stdout().lock())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli).and_then(|r| emit(&cli, &r)) {
        Ok(()) => ExitCode::SUCCESS,
        // reader went away, as with `| head`
        Err(e) if e.is_broken_pipe() => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("bateman: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
