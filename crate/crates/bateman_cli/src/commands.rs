//! The five subcommands, each returning records in deterministic order.

use std::fmt;
use std::str::FromStr;

use asymptotic_eval::{
    auto_eval, classify, eval_airy_uniform, eval_fixed_order, eval_h_coalesce, eval_h_pos_mono,
    eval_h_pos_osc, eval_k_coalesce, eval_k_pos_mono, eval_k_pos_osc, eval_neg, ArgSign,
    EvalError, EvalPoint, ExpansionResult,
};
use reference_oracle::{
    certified_value, oracle_contour, oracle_direct, oracle_u_negative, trace_path, OracleConfig,
    QuadratureResult,
};
use saddle_coefficients::{closed_form, generate_family, CoefficientFamily};
use series_engine::{cx, Regime, Which};

use crate::output::{Field, Record};
use crate::printed::{function_name, printed_cells, PrintedCell};
use crate::{CliError, RunConfig};

/// `|asymptotic − exact| / |exact|`, 0 when both vanish.
pub fn rel_error(exact: f64, asymptotic: f64) -> f64 {
    if exact == 0.0 {
        if asymptotic == 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    } else {
        (asymptotic - exact).abs() / exact.abs()
    }
}

fn warnings(r: &ExpansionResult) -> String {
    r.warnings.iter().map(|w| w.code()).collect::<Vec<_>>().join(";")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalMethod {
    Auto,
    /// Theorem number 1..=7.
    Thm(u8),
    Fixed,
    Airy,
    OracleDirect,
    OracleContour,
    OracleU,
}

impl FromStr for EvalMethod {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let m = match s {
            "auto" => EvalMethod::Auto,
            "fixed" => EvalMethod::Fixed,
            "airy" => EvalMethod::Airy,
            "oracle-direct" => EvalMethod::OracleDirect,
            "oracle-contour" => EvalMethod::OracleContour,
            "oracle-u" => EvalMethod::OracleU,
            _ => match s.strip_prefix("thm").and_then(|n| n.parse::<u8>().ok()) {
                Some(n @ 1..=7) => EvalMethod::Thm(n),
                _ => return Err(CliError::Usage(format!("unknown method '{s}'"))),
            },
        };
        Ok(m)
    }
}

impl fmt::Display for EvalMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalMethod::Auto => f.write_str("auto"),
            EvalMethod::Thm(n) => write!(f, "thm{n}"),
            EvalMethod::Fixed => f.write_str("fixed"),
            EvalMethod::Airy => f.write_str("airy"),
            EvalMethod::OracleDirect => f.write_str("oracle-direct"),
            EvalMethod::OracleContour => f.write_str("oracle-contour"),
            EvalMethod::OracleU => f.write_str("oracle-u"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalArgs {
    pub which: Which,
    pub x: f64,
    pub nu: Option<f64>,
    pub a: Option<f64>,
    pub method: EvalMethod,
}

impl EvalArgs {
    pub fn order(&self) -> Result<f64, CliError> {
        match (self.nu, self.a) {
            (Some(nu), None) => Ok(nu),
            (None, Some(a)) => Ok(a * self.x.abs()),
            _ => Err(CliError::Usage("give exactly one of --nu and --a".into())),
        }
    }
}

fn only_for(which: Which, wanted: Which, method: EvalMethod) -> Result<(), CliError> {
    if which == wanted {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "{method} evaluates {} only",
            function_name(wanted)
        )))
    }
}

fn expansion(args: &EvalArgs, nu: f64, cfg: &RunConfig) -> Result<ExpansionResult, CliError> {
    let (x, which, method) = (args.x, args.which, args.method);
    let p = EvalPoint::new(x, nu)?;
    let policy = cfg.truncation;
    let at_one = || {
        if p.x > 0.0 && p.a() == 1.0 {
            Ok(())
        } else {
            Err(EvalError::Domain(format!("{method} needs nu = x > 0")))
        }
    };
    let r = match method {
        EvalMethod::Auto => auto_eval(x, nu, which, &cfg.auto())?,
        EvalMethod::Thm(n) => {
            let wanted = if (1..=3).contains(&n) {
                Which::Bateman
            } else if (4..=6).contains(&n) {
                Which::Havelock
            } else {
                which
            };
            only_for(which, wanted, method)?;
            match n {
                1 => eval_k_pos_osc(p, policy)?,
                2 => eval_k_pos_mono(p, policy)?,
                3 => {
                    at_one()?;
                    eval_k_coalesce(nu, policy)?
                }
                4 => eval_h_pos_osc(p, policy)?,
                5 => eval_h_pos_mono(p, policy)?,
                6 => {
                    at_one()?;
                    eval_h_coalesce(nu, policy)?
                }
                _ => eval_neg(p, which, policy)?,
            }
        }
        EvalMethod::Fixed => {
            let sign = if x > 0.0 { ArgSign::Pos } else { ArgSign::Neg };
            eval_fixed_order(p, which, sign, policy)?
        }
        EvalMethod::Airy => {
            only_for(which, Which::Bateman, method)?;
            eval_airy_uniform(p)?
        }
        _ => unreachable!("oracle methods are handled by the caller"),
    };
    Ok(r)
}

fn oracle(args: &EvalArgs, nu: f64) -> Result<QuadratureResult, CliError> {
    let cfg = OracleConfig::default();
    let r = match args.method {
        EvalMethod::OracleDirect => oracle_direct(args.x, nu, args.which, &cfg)?,
        EvalMethod::OracleContour => oracle_contour(args.x, nu, args.which, &cfg)?,
        _ => {
            only_for(args.which, Which::Bateman, args.method)?;
            if args.x > 0.0 && nu != 0.0 {
                return Err(CliError::Usage(
                    "oracle-u represents k at negative argument (or nu = 0)".into(),
                ));
            }
            oracle_u_negative(args.x.abs(), nu, &cfg)?
        }
    };
    Ok(r)
}

/// One record: value, regime, `k_used`, `trunc_estimate`, and for oracle
/// methods `abs_err_estimate`.
pub fn cmd_eval(args: &EvalArgs, cfg: &RunConfig) -> Result<Vec<Record>, CliError> {
    let nu = args.order()?;
    let x = args.x;
    let a = if x != 0.0 { Field::Num(nu / x.abs()) } else { Field::Missing };
    let rec = Record::new()
        .with("function", function_name(args.which))
        .with("x", x)
        .with("nu", nu)
        .with("a", a);
    let rec = match args.method {
        EvalMethod::OracleDirect | EvalMethod::OracleContour | EvalMethod::OracleU => {
            let r = oracle(args, nu)?;
            let regime = EvalPoint::new(x, nu)
                .map(|p| Field::from(classify(&p, cfg.transition_width).name()))
                .unwrap_or(Field::Missing);
            rec.with("method", args.method.to_string())
                .with("value", r.value)
                .with("regime", regime)
                .with("k_used", Field::Missing)
                .with("trunc_estimate", Field::Missing)
                .with("abs_err_estimate", r.abs_err_estimate)
                .with("warnings", "")
        }
        _ => {
            let r = expansion(args, nu, cfg)?;
            rec.with("method", r.method.name())
                .with("value", r.value)
                .with("regime", r.regime.name())
                .with("k_used", r.k_used)
                .with("trunc_estimate", r.trunc_estimate)
                .with("abs_err_estimate", Field::Missing)
                .with("warnings", warnings(&r))
        }
    };
    Ok(vec![rec])
}

/// One recomputed table cell next to its printed values.
#[derive(Clone, Debug, PartialEq)]
pub struct TableRow {
    pub cell: PrintedCell,
    /// Signed argument actually evaluated.
    pub x: f64,
    pub nu: f64,
    pub exact: QuadratureResult,
    pub asymptotic: ExpansionResult,
    pub rel_error: f64,
}

impl TableRow {
    pub fn record(&self) -> Record {
        let c = &self.cell;
        Record::new()
            .with("table", c.table as usize)
            .with("function", function_name(c.which))
            .with("a", c.a)
            .with("x", self.x)
            .with("nu", self.nu)
            .with("exact", self.exact.value)
            .with("asymptotic", self.asymptotic.value)
            .with("rel_error", self.rel_error)
            .with("method", self.asymptotic.method.name())
            .with("regime", self.asymptotic.regime.name())
            .with("k_used", self.asymptotic.k_used)
            .with("trunc_estimate", self.asymptotic.trunc_estimate)
            .with("oracle", self.exact.method.name())
            .with("oracle_abs_err", self.exact.abs_err_estimate)
            .with("printed_x", if c.eval_x < 0.0 { -c.x } else { c.x })
            .with("printed_exact", c.exact)
            .with("printed_asymptotic", c.asymptotic)
            .with("printed_error", c.error)
            .with("erratum", c.erratum.as_str())
    }
}

fn table_cell(cell: &PrintedCell, cfg: &RunConfig) -> Result<TableRow, CliError> {
    let (x, nu) = (cell.eval_x, cell.nu());
    let exact = certified_value(x, nu, cell.which, &OracleConfig::default())
        .map_err(|e| CliError::from(e).in_cell(cell.label()))?;
    let asymptotic = auto_eval(x, nu, cell.which, &cfg.auto())
        .map_err(|e| CliError::from(e).in_cell(cell.label()))?;
    let rel_error = rel_error(exact.value, asymptotic.value);
    Ok(TableRow {
        cell: cell.clone(),
        x,
        nu,
        exact,
        asymptotic,
        rel_error,
    })
}

/// Recomputes every cell of table 1, 2 or 3. Table 3 cells are evaluated at
/// the coordinates where the printed values hold (see `erratum`).
pub fn table_rows(table: u8, cfg: &RunConfig) -> Result<Vec<TableRow>, CliError> {
    if !(1..=3).contains(&table) {
        return Err(CliError::Usage(format!("no table {table}; choose 1, 2 or 3")));
    }
    let cells = printed_cells(Some(table));
    cfg.exec.map(&cells, |c| table_cell(c, cfg)).into_iter().collect()
}

pub fn cmd_table(table: u8, cfg: &RunConfig) -> Result<Vec<Record>, CliError> {
    Ok(table_rows(table, cfg)?.iter().map(TableRow::record).collect())
}

/// Generated coefficients with the printed closed form and the deviation
/// `|generated − printed| / max(|printed|, 1)` where a printed form exists.
pub fn cmd_coeffs(
    family: &str,
    parameter: Option<f64>,
    k_max: Option<usize>,
) -> Result<Vec<Record>, CliError> {
    let family: CoefficientFamily = family.parse()?;
    let parameter = if family.has_parameter() { parameter } else { None };
    let k_max = k_max.unwrap_or(family.printed_max());
    let table = generate_family(family, parameter, k_max)?;
    let mut out = Vec::new();
    for k in table.subscripts() {
        let g = table.get(k).expect("subscript from the table");
        let z = cx::to_c64(g);
        let mut rec = Record::new()
            .with("family", family.name())
            .with("parameter", Field::opt_num(parameter))
            .with("k", k)
            .with("re", z.re)
            .with("im", z.im);
        if family.is_printed(k) {
            let c = closed_form(family, k, parameter)?;
            let cz = cx::to_c64(c);
            let dev = cx::abs(g - c).to_f64() / cx::abs(c).to_f64().max(1.0);
            rec = rec
                .with("closed_re", cz.re)
                .with("closed_im", cz.im)
                .with("deviation", dev);
        } else {
            rec = rec
                .with("closed_re", Field::Missing)
                .with("closed_im", Field::Missing)
                .with("deviation", Field::Missing);
        }
        out.push(rec);
    }
    Ok(out)
}

/// Path nodes with `Im ψ − phase_const` as the per-node certificate.
/// `abs_x` sets where the infinite legs are cut.
pub fn cmd_contour(regime: Regime, a: f64, n: usize, abs_x: f64) -> Result<Vec<Record>, CliError> {
    let paths = trace_path(regime, a, n, abs_x)?;
    let mut out = Vec::new();
    for p in &paths {
        for &u in &p.nodes {
            let v = p.psi_at(u);
            out.push(
                Record::new()
                    .with("regime", regime.name())
                    .with("branch", p.branch.name())
                    .with("re_u", u.re)
                    .with("im_u", u.im)
                    .with("re_psi", v.re)
                    .with("im_psi", v.im)
                    .with("phase_residual", (v.im - p.phase_const).abs())
                    .with("certified", true),
            );
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CompareArgs {
    pub which: Which,
    pub a: f64,
    pub x_min: f64,
    pub x_max: f64,
    pub n: usize,
}

impl CompareArgs {
    /// `n` points log-spaced in `|x|` from `x_min` to `x_max`.
    pub fn grid(&self) -> Result<Vec<f64>, CliError> {
        let (lo, hi) = (self.x_min, self.x_max);
        if self.n == 0 || lo == 0.0 || hi == 0.0 || (lo < 0.0) != (hi < 0.0) || !lo.is_finite() || !hi.is_finite() {
            return Err(CliError::Usage(format!(
                "need n >= 1 and a nonzero range of one sign, got {lo}:{hi} with n = {}",
                self.n
            )));
        }
        if self.n == 1 {
            return Ok(vec![lo]);
        }
        let sign = lo.signum();
        let (l0, l1) = (lo.abs().ln(), hi.abs().ln());
        let last = (self.n - 1) as f64;
        Ok((0..self.n)
            .map(|i| match i {
                0 => lo,
                _ if i == self.n - 1 => hi,
                _ => sign * (l0 + (l1 - l0) * i as f64 / last).exp(),
            })
            .collect())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CompareRow {
    pub x: f64,
    pub nu: f64,
    pub exact: QuadratureResult,
    pub asymptotic: ExpansionResult,
    pub rel_error: f64,
}

pub fn compare_rows(args: &CompareArgs, cfg: &RunConfig) -> Result<Vec<CompareRow>, CliError> {
    if !(args.a >= 0.0 && args.a.is_finite()) {
        return Err(CliError::Usage(format!("need a >= 0, got {}", args.a)));
    }
    let xs = args.grid()?;
    let point = |&x: &f64| -> Result<CompareRow, CliError> {
        let nu = args.a * x.abs();
        let cell = || format!("x = {x}");
        let exact = certified_value(x, nu, args.which, &OracleConfig::default())
            .map_err(|e| CliError::from(e).in_cell(cell()))?;
        let asymptotic = auto_eval(x, nu, args.which, &cfg.auto())
            .map_err(|e| CliError::from(e).in_cell(cell()))?;
        Ok(CompareRow {
            x,
            nu,
            rel_error: rel_error(exact.value, asymptotic.value),
            exact,
            asymptotic,
        })
    };
    cfg.exec.map(&xs, point).into_iter().collect()
}

pub fn cmd_compare(args: &CompareArgs, cfg: &RunConfig) -> Result<Vec<Record>, CliError> {
    let rows = compare_rows(args, cfg)?;
    Ok(rows
        .iter()
        .map(|r| {
            Record::new()
                .with("function", function_name(args.which))
                .with("a", args.a)
                .with("x", r.x)
                .with("nu", r.nu)
                .with("exact", r.exact.value)
                .with("asymptotic", r.asymptotic.value)
                .with("rel_error", r.rel_error)
                .with("trunc_estimate", r.asymptotic.trunc_estimate)
                .with("k_used", r.asymptotic.k_used)
                .with("method", r.asymptotic.method.name())
                .with("oracle", r.exact.method.name())
        })
        .collect())
}

/// Least-squares slope of `ln rel_error` against `ln |x|`.
pub fn loglog_slope(rows: &[CompareRow]) -> f64 {
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| (r.x.abs().ln(), r.rel_error.ln()))
        .collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_is_log_spaced() {
        let args = CompareArgs {
            which: Which::Bateman,
            a: 2.0,
            x_min: 20.0,
            x_max: 160.0,
            n: 4,
        };
        let g = args.grid().unwrap();
        assert_eq!(g[0], 20.0);
        assert_eq!(g[3], 160.0);
        assert!((g[1] - 40.0).abs() < 1e-12 && (g[2] - 80.0).abs() < 1e-12);
        let neg = CompareArgs { x_min: -10.0, x_max: -40.0, n: 3, ..args };
        assert!((neg.grid().unwrap()[1] + 20.0).abs() < 1e-12);
        assert!(CompareArgs { x_min: -1.0, ..args }.grid().is_err());
    }

    #[test]
    fn methods_parse() {
        assert_eq!("thm7".parse::<EvalMethod>().unwrap(), EvalMethod::Thm(7));
        assert_eq!("oracle-u".parse::<EvalMethod>().unwrap(), EvalMethod::OracleU);
        assert!("thm8".parse::<EvalMethod>().is_err());
        for m in ["auto", "thm3", "fixed", "airy", "oracle-direct", "oracle-contour"] {
            assert_eq!(m.parse::<EvalMethod>().unwrap().to_string(), m);
        }
    }

    #[test]
    fn rel_error_of_vanishing_pair() {
        assert_eq!(rel_error(0.0, 0.0), 0.0);
        assert_eq!(rel_error(2.0, 1.0), 0.5);
    }
}
