//! Command-line front end: single values, tables, and identity reports in
//! text, CSV or JSON.
//!
//! Exit codes: 0 on success (and every verification passing), 1 if any
//! verification failed, 2 on usage or I/O errors.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::divisors::{sigma, sigma_prime, sigma_rm, DivisorTable};
use crate::error::{invalid, Result};
use crate::gonal::{e_coeff, gonal_number, triangular, GonalSpec};
use crate::identities::{
    default_jobs, run_jobs, verify_identity, IdentityId, IdentityParams, VerificationReport,
};
use crate::partitions::{build_table, PartitionFamily};

pub const DEFAULT_ORDER: usize = 500;
pub const MAX_G: u64 = 1_000_000;
pub const THREADS_ENV: &str = "QGONAL_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "qgonal",
    version,
    about = "Exact gonal-number q-series identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one value, e.g. `compute sigma-prime --m 4 --n 30`.
    Compute(Args),
    /// Print values for n = 0..=max-n.
    Table(Args),
    /// Check one identity up to --order.
    Verify(Args),
    /// Check every identity over the default parameter sweep.
    VerifyAll(Args),
}

#[derive(Debug, Clone, clap::Args)]
pub struct Args {
    /// Value family (compute/table) or identity id (verify).
    pub target: Option<String>,
    /// Polygon size g >= 5.
    #[arg(long, allow_negative_numbers = true)]
    pub g: Option<i64>,
    /// Modulus m.
    #[arg(long, allow_negative_numbers = true)]
    pub m: Option<i64>,
    /// Residue r, 0 <= r < m.
    #[arg(long, allow_negative_numbers = true)]
    pub r: Option<i64>,
    /// Argument n.
    #[arg(long, allow_negative_numbers = true)]
    pub n: Option<i64>,
    /// Last row of a table.
    #[arg(long = "max-n")]
    pub max_n: Option<usize>,
    /// Truncation order [default: 500].
    #[arg(long)]
    pub order: Option<usize>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this path instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Compute,
    Table,
    Verify,
    VerifyAll,
}

/// Raw numeric options as given on the command line.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawParams {
    pub g: Option<i64>,
    pub m: Option<i64>,
    pub r: Option<i64>,
    pub n: Option<i64>,
    pub max_n: Option<usize>,
    pub order: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub target: Option<String>,
    pub params: RawParams,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub workers: usize,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Self {
        let (command, args) = match cli.command {
            Command::Compute(a) => (CommandKind::Compute, a),
            Command::Table(a) => (CommandKind::Table, a),
            Command::Verify(a) => (CommandKind::Verify, a),
            Command::VerifyAll(a) => (CommandKind::VerifyAll, a),
        };
        RunConfig {
            command,
            target: args.target,
            params: RawParams {
                g: args.g,
                m: args.m,
                r: args.r,
                n: args.n,
                max_n: args.max_n,
                order: args.order,
            },
            format: args.format,
            out: args.out,
            workers: 1,
        }
    }
}

/// Worker count from `QGONAL_THREADS`; absent means one.
pub fn workers_from_env() -> Result<usize> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(1),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(invalid(format!(
                "{THREADS_ENV} must be a positive integer, got `{v}`"
            ))),
        },
    }
}

/// Parses `args` (program name first), runs, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let mut config = RunConfig::from_cli(cli);
    match workers_from_env() {
        Ok(w) => config.workers = w,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    }
    run(&config)
}

pub fn run(config: &RunConfig) -> i32 {
    let (text, code) = match render(config) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let written = match &config.out {
        Some(path) => {
            std::fs::write(path, text.as_bytes()).map_err(|e| format!("{}: {e}", path.display()))
        }
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    code
}

/// Produces the output document and the exit code it implies.
pub fn render(config: &RunConfig) -> Result<(String, i32)> {
    match config.command {
        CommandKind::Compute => {
            let target = ValueTarget::parse(config.target.as_deref())?;
            let n = config
                .params
                .n
                .ok_or_else(|| invalid("compute needs --n"))?;
            let value = target.value(&config.params, n)?;
            Ok((
                render_value(&target, &config.params, n, &value, config.format),
                EXIT_OK,
            ))
        }
        CommandKind::Table => {
            let target = ValueTarget::parse(config.target.as_deref())?;
            let max_n = config
                .params
                .max_n
                .ok_or_else(|| invalid("table needs --max-n"))?;
            let values = target.table(&config.params, max_n)?;
            Ok((
                render_table(&target, &config.params, &values, config.format),
                EXIT_OK,
            ))
        }
        CommandKind::Verify => {
            let id: IdentityId = config
                .target
                .as_deref()
                .ok_or_else(|| invalid("verify needs an identity id"))?
                .parse()?;
            let params = identity_params(&config.params)?;
            let order = config.params.order.unwrap_or(DEFAULT_ORDER);
            let report = verify_identity(id, params, order)?;
            let code = exit_code(std::slice::from_ref(&report));
            let text = match config.format {
                Format::Json => pretty(&report_json(&report)),
                Format::Csv => reports_csv(std::slice::from_ref(&report)),
                Format::Text => report_text(&report),
            };
            Ok((text, code))
        }
        CommandKind::VerifyAll => {
            if let Some(t) = &config.target {
                return Err(invalid(format!("verify-all takes no target, got `{t}`")));
            }
            let order = config.params.order.unwrap_or(DEFAULT_ORDER);
            let reports = run_jobs(&default_jobs(order), config.workers)?;
            let code = exit_code(&reports);
            let text = match config.format {
                Format::Json => pretty(&Value::Array(reports.iter().map(report_json).collect())),
                Format::Csv => reports_csv(&reports),
                Format::Text => reports.iter().map(report_text).collect(),
            };
            Ok((text, code))
        }
    }
}

fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().all(VerificationReport::is_verified) {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

fn nonneg(name: &str, v: i64) -> Result<u64> {
    u64::try_from(v).map_err(|_| invalid(format!("--{name} must be non-negative, got {v}")))
}

fn checked_g(g: i64) -> Result<GonalSpec> {
    let g = nonneg("g", g)?;
    if g > MAX_G {
        return Err(invalid(format!("--g is capped at {MAX_G}, got {g}")));
    }
    GonalSpec::new(g)
}

fn checked_m(m: i64) -> Result<u64> {
    let m = nonneg("m", m)?;
    if m < 3 {
        return Err(invalid(format!("--m must be >= 3, got {m}")));
    }
    Ok(m)
}

fn identity_params(raw: &RawParams) -> Result<IdentityParams> {
    Ok(IdentityParams {
        g: raw.g.map(|g| checked_g(g).map(|s| s.g())).transpose()?,
        m: raw.m.map(checked_m).transpose()?,
    })
}

/// Integer-valued families available to `compute` and `table`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueTarget {
    P,
    Q,
    Residue,
    PPrime,
    P25P35,
    P15P45,
    Sigma,
    SigmaRm,
    SigmaPrime,
    Gonal,
    Triangular,
    ECoeff,
}

impl ValueTarget {
    const NAMES: [(&'static str, ValueTarget); 12] = [
        ("p", ValueTarget::P),
        ("q", ValueTarget::Q),
        ("residue", ValueTarget::Residue),
        ("pprime", ValueTarget::PPrime),
        ("p25p35", ValueTarget::P25P35),
        ("p15p45", ValueTarget::P15P45),
        ("sigma", ValueTarget::Sigma),
        ("sigma-rm", ValueTarget::SigmaRm),
        ("sigma-prime", ValueTarget::SigmaPrime),
        ("gonal", ValueTarget::Gonal),
        ("triangular", ValueTarget::Triangular),
        ("e-coeff", ValueTarget::ECoeff),
    ];

    pub fn parse(s: Option<&str>) -> Result<Self> {
        let s = s.ok_or_else(|| invalid("missing target"))?;
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        Self::NAMES
            .iter()
            .find(|(name, _)| *name == norm)
            .map(|(_, t)| *t)
            .ok_or_else(|| {
                let known: Vec<&str> = Self::NAMES.iter().map(|(n, _)| *n).collect();
                invalid(format!(
                    "unknown target `{s}` (known: {})",
                    known.join(", ")
                ))
            })
    }

    pub fn name(&self) -> &'static str {
        Self::NAMES
            .iter()
            .find(|(_, t)| t == self)
            .map(|(n, _)| *n)
            .unwrap()
    }

    /// Parameters this target reads, for echoing in JSON output.
    fn used_params(&self, raw: &RawParams) -> BTreeMap<&'static str, i64> {
        let mut out = BTreeMap::new();
        let mut put = |k, v: Option<i64>| {
            if let Some(v) = v {
                out.insert(k, v);
            }
        };
        match self {
            ValueTarget::Residue | ValueTarget::SigmaRm => {
                put("r", raw.r);
                put("m", raw.m);
            }
            ValueTarget::PPrime | ValueTarget::SigmaPrime => put("m", raw.m),
            ValueTarget::Gonal | ValueTarget::ECoeff => put("g", raw.g),
            _ => {}
        }
        out
    }

    fn family(&self, raw: &RawParams) -> Result<Option<PartitionFamily>> {
        Ok(Some(match self {
            ValueTarget::P => PartitionFamily::Unrestricted,
            ValueTarget::Q => PartitionFamily::Distinct,
            ValueTarget::P25P35 => PartitionFamily::P25P35,
            ValueTarget::P15P45 => PartitionFamily::P15P45,
            ValueTarget::PPrime => PartitionFamily::PPrime {
                m: checked_m(raw.m.ok_or_else(|| invalid("pprime needs --m"))?)?,
            },
            ValueTarget::Residue => {
                let r = nonneg("r", raw.r.ok_or_else(|| invalid("residue needs --r"))?)?;
                let m = nonneg("m", raw.m.ok_or_else(|| invalid("residue needs --m"))?)?;
                let family = PartitionFamily::Residue { r, m };
                family.validate()?;
                family
            }
            _ => return Ok(None),
        }))
    }

    fn residue(raw: &RawParams) -> Result<(u64, u64)> {
        let r = nonneg("r", raw.r.ok_or_else(|| invalid("sigma-rm needs --r"))?)?;
        let m = nonneg("m", raw.m.ok_or_else(|| invalid("sigma-rm needs --m"))?)?;
        Ok((r, m))
    }

    pub fn value(&self, raw: &RawParams, n: i64) -> Result<BigInt> {
        if let Some(family) = self.family(raw)? {
            if n < 0 {
                return Ok(BigInt::from(0));
            }
            return build_table(family, n as usize)?.value(n);
        }
        match self {
            ValueTarget::Gonal => {
                let spec = checked_g(raw.g.ok_or_else(|| invalid("gonal needs --g"))?)?;
                Ok(gonal_number(spec, n))
            }
            ValueTarget::Triangular => Ok(triangular(nonneg("n", n)?)),
            ValueTarget::ECoeff => {
                let spec = checked_g(raw.g.ok_or_else(|| invalid("e-coeff needs --g"))?)?;
                Ok(BigInt::from(e_coeff(spec, nonneg("n", n)?)))
            }
            ValueTarget::Sigma => sigma(nonneg("n", n)?),
            ValueTarget::SigmaRm => {
                let (r, m) = Self::residue(raw)?;
                sigma_rm(r, m, nonneg("n", n)?)
            }
            ValueTarget::SigmaPrime => {
                let m = checked_m(raw.m.ok_or_else(|| invalid("sigma-prime needs --m"))?)?;
                sigma_prime(m, nonneg("n", n)?)
            }
            _ => unreachable!("partition families handled above"),
        }
    }

    /// Values for `n = 0..=max_n`; divisor sums take the value 0 at `n = 0`.
    pub fn table(&self, raw: &RawParams, max_n: usize) -> Result<Vec<BigInt>> {
        if let Some(family) = self.family(raw)? {
            return Ok(build_table(family, max_n)?.values().to_vec());
        }
        match self {
            ValueTarget::SigmaPrime => {
                let m = checked_m(raw.m.ok_or_else(|| invalid("sigma-prime needs --m"))?)?;
                Ok(DivisorTable::build(m, max_n)?.values().to_vec())
            }
            ValueTarget::Sigma | ValueTarget::SigmaRm => std::iter::once(Ok(BigInt::from(0)))
                .chain((1..=max_n as i64).map(|n| self.value(raw, n)))
                .collect(),
            _ => (0..=max_n as i64).map(|n| self.value(raw, n)).collect(),
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn params_json(params: &BTreeMap<&'static str, i64>) -> Value {
    Value::Object(
        params
            .iter()
            .map(|(k, v)| (k.to_string(), json!(v)))
            .collect(),
    )
}

fn render_value(
    target: &ValueTarget,
    raw: &RawParams,
    n: i64,
    value: &BigInt,
    format: Format,
) -> String {
    match format {
        Format::Text => format!("{value}\n"),
        Format::Csv => format!("n,value\n{n},{value}\n"),
        Format::Json => pretty(&json!({
            "target": target.name(),
            "params": params_json(&target.used_params(raw)),
            "n": n,
            "value": value.to_string(),
        })),
    }
}

fn render_table(
    target: &ValueTarget,
    raw: &RawParams,
    values: &[BigInt],
    format: Format,
) -> String {
    match format {
        Format::Csv => {
            let mut s = String::from("n,value\n");
            for (n, v) in values.iter().enumerate() {
                let _ = writeln!(s, "{n},{v}");
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for (n, v) in values.iter().enumerate() {
                let _ = writeln!(s, "{n} {v}");
            }
            s
        }
        Format::Json => pretty(&json!({
            "target": target.name(),
            "params": params_json(&target.used_params(raw)),
            "values": values
                .iter()
                .enumerate()
                .map(|(n, v)| json!({"n": n, "value": v.to_string()}))
                .collect::<Vec<_>>(),
        })),
    }
}

/// Stable report schema: `identity`, `params`, `order`, `status`,
/// `first_mismatch` (`null` or `{n, lhs, rhs}` with decimal-string integers).
pub fn report_json(report: &VerificationReport) -> Value {
    json!({
        "identity": report.identity.as_str(),
        "params": Value::Object(report.params.iter().map(|(k, v)| (k.clone(), json!(v))).collect()),
        "order": report.order,
        "status": report.status().as_str(),
        "first_mismatch": match &report.first_mismatch {
            None => Value::Null,
            Some(m) => json!({"n": m.n, "lhs": m.lhs.to_string(), "rhs": m.rhs.to_string()}),
        },
    })
}

fn params_compact(report: &VerificationReport) -> String {
    report
        .params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn report_text(report: &VerificationReport) -> String {
    let params = params_compact(report);
    let head = if params.is_empty() {
        format!("{} order={}", report.identity, report.order)
    } else {
        format!(
            "{} {} order={}",
            report.identity,
            params.replace(';', " "),
            report.order
        )
    };
    match &report.first_mismatch {
        None => format!("{head} {}\n", report.status().as_str()),
        Some(m) => format!(
            "{head} {} at n={}: lhs={} rhs={}\n",
            report.status().as_str(),
            m.n,
            m.lhs,
            m.rhs
        ),
    }
}

pub fn reports_csv(reports: &[VerificationReport]) -> String {
    let mut s = String::from("identity,params,order,status,n,lhs,rhs\n");
    for r in reports {
        let (n, lhs, rhs) = match &r.first_mismatch {
            None => (String::new(), String::new(), String::new()),
            Some(m) => (m.n.to_string(), m.lhs.to_string(), m.rhs.to_string()),
        };
        let _ = writeln!(
            s,
            "{},{},{},{},{n},{lhs},{rhs}",
            r.identity,
            params_compact(r),
            r.order,
            r.status().as_str()
        );
    }
    s
}
