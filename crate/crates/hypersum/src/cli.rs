//! Command-line front end: `hypersum eval | verify | grid | list`.
//!
//! Exit codes: 0 success/pass, 1 verification failure, 2 parameter-domain
//! error, 3 term-budget exceeded, 64 usage or malformed input, 65 unknown
//! identity. The environment variable `HYPERSUM_DIGITS` overrides the
//! default working precision.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{parse_rational, rat, Rational};
use crate::hyper::HyperSpec;
use crate::registry::{find_identity, list_identities, run_check, Bindings, CheckOptions, CheckReport};

#[derive(Parser)]
#[command(
    name = "hypersum",
    about = "Exact and certified-precision evaluation of generalized hypergeometric series, \
             with a catalog of verifiable identities",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a series from its parameter rows
    Eval {
        /// Upper parameters, comma-separated rationals (may be empty)
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        upper: Vec<String>,
        /// Lower parameters, comma-separated rationals (may be empty)
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lower: Vec<String>,
        /// Argument, as a rational string
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        /// exact (terminating series) or numeric (certified bound)
        #[arg(long, default_value = "exact")]
        mode: String,
        /// Decimal digits for numeric mode
        #[arg(long)]
        digits: Option<u32>,
        /// Term budget for numeric mode
        #[arg(long, default_value_t = 1_000_000)]
        max_terms: u64,
    },
    /// Check one identity and emit a JSON report
    Verify {
        /// Identity id (see `list`)
        #[arg(long)]
        identity: String,
        /// Named parameter binding, repeatable: --param a=1
        #[arg(long = "param", allow_hyphen_values = true)]
        params: Vec<String>,
        /// Shorthand for --param family=<pairs>
        #[arg(long)]
        family: Option<String>,
        /// Series truncation order for formal checks
        #[arg(long)]
        order: Option<usize>,
        /// Decimal digits for numeric checks
        #[arg(long)]
        digits: Option<u32>,
        /// Term budget for numeric checks
        #[arg(long)]
        max_terms: Option<u64>,
    },
    /// Run a parameter sweep from a JSON config file
    Grid {
        /// Path to the grid configuration
        config: PathBuf,
    },
    /// List the identity catalog
    List,
}

/// One parameter axis of a grid: explicit values or an evenly spaced
/// rational range.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GridAxis {
    #[serde(default)]
    values: Option<Vec<String>>,
    #[serde(default)]
    range: Option<GridRange>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GridRange {
    lo: String,
    hi: String,
    count: u64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GridConfig {
    identity: String,
    params: BTreeMap<String, GridAxis>,
    #[serde(default)]
    order: Option<usize>,
    #[serde(default)]
    digits: Option<u32>,
    #[serde(default)]
    max_terms: Option<u64>,
    output: PathBuf,
    #[serde(default = "default_format")]
    format: String,
}

fn default_format() -> String {
    "json".into()
}

/// One row of a grid report.
#[derive(Debug, Serialize)]
#[serde(untagged)]
enum GridRow {
    Checked(CheckReport),
    Skipped {
        identity: String,
        params: BTreeMap<String, String>,
        verdict: String,
        reason: String,
    },
}

fn env_digits() -> Option<u32> {
    std::env::var("HYPERSUM_DIGITS").ok()?.parse().ok()
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::BudgetExceeded { .. } => 3,
        Error::UnknownIdentity { .. } => 65,
        Error::Parse(_) => 64,
        _ => 2,
    }
}

/// Parse argv and run; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // help/version are successful outputs, not usage errors
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            if let Error::UnknownIdentity { known, .. } = &err {
                eprintln!("known identities: {known}");
            }
            exit_code_for(&err)
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Eval {
            upper,
            lower,
            z,
            mode,
            digits,
            max_terms,
        } => cmd_eval(&upper, &lower, &z, &mode, digits, max_terms),
        Command::Verify {
            identity,
            params,
            family,
            order,
            digits,
            max_terms,
        } => cmd_verify(&identity, &params, family, order, digits, max_terms),
        Command::Grid { config } => cmd_grid(&config),
        Command::List => {
            cmd_list();
            Ok(0)
        }
    }
}

fn parse_row(row: &[String]) -> Result<Vec<Rational>> {
    row.iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_rational(s))
        .collect()
}

fn cmd_eval(
    upper: &[String],
    lower: &[String],
    z: &str,
    mode: &str,
    digits: Option<u32>,
    max_terms: u64,
) -> Result<i32> {
    let spec = HyperSpec::new(parse_row(upper)?, parse_row(lower)?)?;
    let z = parse_rational(z)?;
    match mode {
        "exact" => {
            let value = spec.eval_terminating(&z)?;
            println!("{value}");
            Ok(0)
        }
        "numeric" => {
            let digits = digits.or_else(env_digits).unwrap_or(50);
            let value = spec.eval_numeric(&z, digits, max_terms)?;
            println!("estimate {}", value.estimate_string(digits));
            println!("tail_bound {}", value.tail_bound_string());
            Ok(0)
        }
        other => Err(Error::Parse(format!(
            "unknown mode {other:?} (expected exact or numeric)"
        ))),
    }
}

fn parse_bindings(params: &[String], family: Option<String>) -> Result<Bindings> {
    let mut bindings = Bindings::new();
    for p in params {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected name=value, got {p:?}")))?;
        bindings.insert(k.trim().to_string(), v.trim().to_string());
    }
    if let Some(f) = family {
        bindings.insert("family".into(), f);
    }
    Ok(bindings)
}

fn options_with(order: Option<usize>, digits: Option<u32>, max_terms: Option<u64>) -> CheckOptions {
    let mut options = CheckOptions::default();
    if let Some(o) = order {
        options.order = o;
    }
    options.digits = digits.or_else(env_digits).unwrap_or(options.digits);
    if let Some(m) = max_terms {
        options.max_terms = m;
    }
    options
}

fn cmd_verify(
    identity: &str,
    params: &[String],
    family: Option<String>,
    order: Option<usize>,
    digits: Option<u32>,
    max_terms: Option<u64>,
) -> Result<i32> {
    let bindings = parse_bindings(params, family)?;
    let options = options_with(order, digits, max_terms);
    let report = run_check(identity, &bindings, &options)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    Ok(if report.verdict == "pass" { 0 } else { 1 })
}

/// Evenly spaced rational grid points, inclusive of both ends.
fn expand_axis(name: &str, axis: &GridAxis) -> Result<Vec<String>> {
    match (&axis.values, &axis.range) {
        (Some(values), None) => Ok(values.clone()),
        (None, Some(range)) => {
            if range.count == 0 {
                return Ok(vec![]);
            }
            let lo = parse_rational(&range.lo)?;
            let hi = parse_rational(&range.hi)?;
            if range.count == 1 {
                return Ok(vec![lo.to_string()]);
            }
            let step = (&hi - &lo) / rat(range.count as i64 - 1);
            Ok((0..range.count)
                .map(|i| (&lo + &step * rat(i as i64)).to_string())
                .collect())
        }
        _ => Err(Error::Parse(format!(
            "axis {name:?} must have exactly one of \"values\" or \"range\""
        ))),
    }
}

fn csv_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

fn rows_to_csv(rows: &[GridRow]) -> String {
    let mut out = String::from(
        "identity,params,verdict,lhs,rhs,abs_diff,terms_used,elapsed_ms,reason\n",
    );
    for row in rows {
        let line = match row {
            GridRow::Checked(r) => {
                let params = r
                    .params
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect::<Vec<_>>()
                    .join(" ");
                [
                    r.identity.clone(),
                    params,
                    r.verdict.clone(),
                    r.lhs.clone(),
                    r.rhs.clone(),
                    r.abs_diff.clone().unwrap_or_default(),
                    r.terms_used.to_string(),
                    r.elapsed_ms.to_string(),
                    String::new(),
                ]
            }
            GridRow::Skipped {
                identity,
                params,
                verdict,
                reason,
            } => {
                let params = params
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect::<Vec<_>>()
                    .join(" ");
                [
                    identity.clone(),
                    params,
                    verdict.clone(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    reason.clone(),
                ]
            }
        };
        out.push_str(
            &line
                .iter()
                .map(|f| csv_quote(f))
                .collect::<Vec<_>>()
                .join(","),
        );
        out.push('\n');
    }
    out
}

fn cmd_grid(path: &std::path::Path) -> Result<i32> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let config: GridConfig = serde_json::from_str(&raw)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    if config.format != "json" && config.format != "csv" {
        return Err(Error::Parse(format!(
            "format must be json or csv, got {:?}",
            config.format
        )));
    }
    let descriptor = find_identity(&config.identity)?;
    let options = options_with(config.order, config.digits, config.max_terms);

    // deterministic cartesian product in descriptor parameter order
    let mut axes: Vec<(String, Vec<String>)> = Vec::new();
    for (name, _) in descriptor.params {
        let axis = config.params.get(*name).ok_or_else(|| {
            Error::Parse(format!("grid config is missing axis for parameter {name:?}"))
        })?;
        axes.push((name.to_string(), expand_axis(name, axis)?));
    }
    for name in config.params.keys() {
        if !descriptor.params.iter().any(|(p, _)| p == name) {
            return Err(Error::Parse(format!(
                "identity {} does not take a parameter named {name:?}",
                config.identity
            )));
        }
    }
    let mut points: Vec<Bindings> = vec![Bindings::new()];
    for (name, values) in &axes {
        let mut next = Vec::with_capacity(points.len() * values.len());
        for point in &points {
            for v in values {
                let mut p = point.clone();
                p.insert(name.clone(), v.clone());
                next.push(p);
            }
        }
        points = next;
    }
    if axes.iter().any(|(_, v)| v.is_empty()) {
        points.clear();
    }

    let rows: Vec<GridRow> = points
        .par_iter()
        .map(|bindings| match run_check(&config.identity, bindings, &options) {
            Ok(report) => GridRow::Checked(report),
            Err(err) => GridRow::Skipped {
                identity: config.identity.clone(),
                params: bindings.clone(),
                verdict: "skipped".into(),
                reason: err.to_string(),
            },
        })
        .collect();

    let (mut pass, mut fail, mut skipped) = (0u64, 0u64, 0u64);
    for row in &rows {
        match row {
            GridRow::Checked(r) if r.verdict == "pass" => pass += 1,
            GridRow::Checked(_) => fail += 1,
            GridRow::Skipped { .. } => skipped += 1,
        }
    }

    let body = if config.format == "csv" {
        rows_to_csv(&rows)
    } else {
        serde_json::to_string_pretty(&rows).expect("rows serialize")
    };
    std::fs::write(&config.output, body)
        .map_err(|e| Error::Parse(format!("cannot write {}: {e}", config.output.display())))?;
    println!(
        "{} points: {pass} pass, {fail} fail, {skipped} skipped -> {}",
        rows.len(),
        config.output.display()
    );
    Ok(if fail == 0 { 0 } else { 1 })
}

fn cmd_list() {
    for d in list_identities() {
        let params = d
            .params
            .iter()
            .map(|(name, kind)| format!("{name}: {}", kind.as_str()))
            .collect::<Vec<_>>()
            .join(", ");
        println!("{:<18} [{}] ({params})", d.id, d.mode.as_str());
        println!("    {}", d.summary);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_expansion() {
        let axis = GridAxis {
            values: None,
            range: Some(GridRange {
                lo: "1".into(),
                hi: "3".into(),
                count: 5,
            }),
        };
        assert_eq!(
            expand_axis("d", &axis).unwrap(),
            vec!["1", "3/2", "2", "5/2", "3"]
        );
        let single = GridAxis {
            values: None,
            range: Some(GridRange {
                lo: "7/2".into(),
                hi: "9".into(),
                count: 1,
            }),
        };
        assert_eq!(expand_axis("d", &single).unwrap(), vec!["7/2"]);
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_quote("a\"b"), "\"a\"\"b\"");
    }

    #[test]
    fn eval_exit_codes_through_run() {
        assert_eq!(
            run(["hypersum", "eval", "--upper", "-2,1,4", "--lower", "3,3", "--z", "2"]),
            0
        );
        assert_eq!(
            run(["hypersum", "eval", "--upper", "1", "--lower", "0", "--z", "1"]),
            2
        );
        assert_eq!(run(["hypersum", "bogus-subcommand"]), 64);
        assert_eq!(
            run(["hypersum", "verify", "--identity", "no-such-identity"]),
            65
        );
    }
}
