//! Command-line front end.
//!
//! Reports go to the output stream (stdout or `--out`); progress and
//! diagnostics go to the error stream. Exit codes: 0 success, 1 mismatch or
//! membership failure, 2 usage or configuration error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::error::Error;
use crate::identities::{catalog, lookup, verify_record, IdentityRecord, Status, VerificationReport};
use crate::partitions::{
    check_cap, ferrers_compose, ferrers_decompose, format_vector, stats_of, Partition, PartitionStats, DEFAULT_CAP,
};
use crate::series::coeff_to_string;
use crate::sip::{class_by_name, class_spec, sip_decompose, verify_sip_property, ClassId};

pub const CAP_ENV: &str = "SIPVERIFY_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "sipverify", version, about = "Exact verification of SIP partition classes and q-series identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Largest partition weight enumerated (overrides SIPVERIFY_CAP; default 60).
    #[arg(long, global = true)]
    pub cap: Option<u64>,

    /// Include wall-clock timings in verification reports.
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify catalog identities coefficient by coefficient.
    Verify {
        #[arg(long, value_delimiter = ',', required_unless_present = "all", conflicts_with = "all")]
        id: Vec<String>,
        #[arg(long)]
        all: bool,
        /// Truncation order (default: each identity's default, 60).
        #[arg(long)]
        order: Option<i64>,
    },
    /// List the members of a class at one weight.
    Enumerate {
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        stats: bool,
    },
    /// Split a class member into basis partition and π vector.
    Decompose {
        #[arg(long)]
        class: String,
        #[arg(long, allow_hyphen_values = true)]
        parts: String,
    },
    /// Round-trip the mod-2 Ferrers bijection on partitions into odd parts.
    Bijection {
        #[arg(long)]
        max: u64,
    },
    /// Audit existence, uniqueness and closure of SIP decompositions.
    SipCheck {
        #[arg(long)]
        class: String,
        #[arg(long)]
        max: u64,
    },
    /// List basis partitions with a given length and largest-part bound.
    Basis {
        #[arg(long)]
        class: String,
        #[arg(long)]
        length: usize,
        #[arg(long)]
        max_part: u32,
    },
    /// Coefficient listing of every side of an identity.
    Table {
        #[arg(long)]
        id: String,
        #[arg(long)]
        order: Option<i64>,
    },
}

/// Resolved configuration: the parsed command plus the effective cap.
#[derive(Debug)]
pub struct CliConfig {
    pub command: Command,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub cap: u64,
    pub timings: bool,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Engine(#[from] Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Engine(Error::NotMember(_) | Error::Decomposition(_)) => 1,
            _ => 2,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// A finished command: the report text and the exit code.
struct Output {
    body: String,
    code: i32,
}

impl Output {
    fn ok(body: String) -> Self {
        Self { body, code: 0 }
    }
}

/// Entry point used by the binary: reads `SIPVERIFY_CAP` from the environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_env(args, std::env::var(CAP_ENV).ok(), out, err)
}

/// [`run`] with the cap environment value supplied explicitly.
pub fn run_with_env<I, T>(args: I, env_cap: Option<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = resolve(cli, env_cap).and_then(|cfg| {
        let output = execute(&cfg, err)?;
        emit(&cfg, &output.body, out)?;
        Ok(output.code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

fn resolve(cli: Cli, env_cap: Option<String>) -> CliResult<CliConfig> {
    let cap = match (cli.cap, env_cap) {
        (Some(c), _) => c,
        (None, Some(v)) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{CAP_ENV} must be a non-negative integer, got `{v}`")))?,
        (None, None) => DEFAULT_CAP,
    };
    if cap == 0 {
        return Err(CliError::Usage("cap must be positive".into()));
    }
    Ok(CliConfig { command: cli.command, format: cli.format, out: cli.out, cap, timings: cli.timings })
}

fn emit(cfg: &CliConfig, body: &str, out: &mut dyn Write) -> CliResult<()> {
    match &cfg.out {
        Some(path) => std::fs::write(path, body)?,
        None => out.write_all(body.as_bytes())?,
    }
    Ok(())
}

fn positive_order(order: i64) -> CliResult<i64> {
    if order < 1 {
        return Err(CliError::Usage(format!("order must be positive, got {order}")));
    }
    Ok(order)
}

fn class_id(name: &str) -> CliResult<ClassId> {
    class_by_name(name).map(|s| s.id).map_err(|e| CliError::Usage(e.to_string()))
}

fn json_body(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn lines(items: impl IntoIterator<Item = String>) -> String {
    items.into_iter().map(|l| l + "\n").collect()
}

fn execute(cfg: &CliConfig, err: &mut dyn Write) -> CliResult<Output> {
    match &cfg.command {
        Command::Verify { id, all, order } => cmd_verify(cfg, id, *all, *order, err),
        Command::Enumerate { class, n, stats } => cmd_enumerate(cfg, class, *n, *stats),
        Command::Decompose { class, parts } => cmd_decompose(cfg, class, parts),
        Command::Bijection { max } => cmd_bijection(cfg, *max),
        Command::SipCheck { class, max } => cmd_sip_check(cfg, class, *max),
        Command::Basis { class, length, max_part } => cmd_basis(cfg, class, *length, *max_part),
        Command::Table { id, order } => cmd_table(cfg, id, *order),
    }
}

fn cmd_verify(
    cfg: &CliConfig,
    ids: &[String],
    all: bool,
    order: Option<i64>,
    err: &mut dyn Write,
) -> CliResult<Output> {
    // validate everything before computing anything
    let records: Vec<&IdentityRecord> = if all {
        catalog().iter().collect()
    } else {
        ids.iter().map(|id| lookup(id).map_err(|e| CliError::Usage(e.to_string()))).collect::<CliResult<_>>()?
    };
    let order = order.map(positive_order).transpose()?;
    writeln!(err, "verifying {} identities (cap {})", records.len(), cfg.cap)?;

    let reports: Vec<VerificationReport> = {
        use rayon::prelude::*;
        records.par_iter().map(|r| verify_record(r, order.unwrap_or(r.default_order), cfg.cap)).collect()
    };

    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    let (matched, mismatched, errored) = (count(Status::Match), count(Status::Mismatch), count(Status::Error));
    writeln!(err, "{matched} MATCH, {mismatched} MISMATCH, {errored} ERROR")?;

    let body = match cfg.format {
        Format::Json => json_body(&Value::Array(reports.iter().map(|r| r.to_json(cfg.timings)).collect())),
        Format::Text => lines(reports.iter().map(|r| r.to_text(cfg.timings))),
    };
    let code = if mismatched > 0 {
        1
    } else if errored > 0 {
        2
    } else {
        0
    };
    Ok(Output { body, code })
}

fn stats_json(s: &PartitionStats) -> Value {
    json!({
        "length": s.length.to_string(),
        "largest": s.largest.to_string(),
        "weight": s.weight.to_string(),
        "odd_parts": s.odd_parts.to_string(),
        "even_parts": s.even_parts.to_string(),
        "overlined": s.overlined_count.to_string(),
        "odd_indexed_sum": s.odd_indexed_sum.to_string(),
        "even_indexed_sum": s.even_indexed_sum.to_string(),
        "alt_sum": s.alt_sum.to_string(),
    })
}

fn stats_text(s: &PartitionStats) -> String {
    format!(
        "length={} largest={} weight={} odd_parts={} even_parts={} overlined={} odd_indexed_sum={} even_indexed_sum={} alt_sum={}",
        s.length,
        s.largest,
        s.weight,
        s.odd_parts,
        s.even_parts,
        s.overlined_count,
        s.odd_indexed_sum,
        s.even_indexed_sum,
        s.alt_sum
    )
}

fn cmd_enumerate(cfg: &CliConfig, class: &str, n: u64, with_stats: bool) -> CliResult<Output> {
    let spec = class_spec(class_id(class)?);
    let members = spec.members_of_weight(n, cfg.cap)?;
    let body = match cfg.format {
        Format::Json => {
            let items: Vec<Value> = members
                .iter()
                .map(|p| {
                    let mut v = json!({ "partition": p.to_string() });
                    if with_stats {
                        v["stats"] = stats_json(&stats_of(p));
                    }
                    v
                })
                .collect();
            json_body(&json!({ "class": spec.id.as_str(), "n": n.to_string(), "members": items }))
        }
        Format::Text => lines(members.iter().map(|p| {
            if with_stats {
                format!("{p}\t{}", stats_text(&stats_of(p)))
            } else {
                p.to_string()
            }
        })),
    };
    Ok(Output::ok(body))
}

fn cmd_decompose(cfg: &CliConfig, class: &str, parts: &str) -> CliResult<Output> {
    let spec = class_spec(class_id(class)?);
    let p: Partition = parts.parse().map_err(|e: Error| CliError::Usage(e.to_string()))?;
    let d = sip_decompose(&spec, &p)?;
    let body = match cfg.format {
        Format::Json => json_body(&json!({
            "class": spec.id.as_str(),
            "partition": p.to_string(),
            "basis": d.basis.to_string(),
            "pi": format_vector(&d.pi),
        })),
        Format::Text => format!("basis {}\npi {}\n", d.basis, format_vector(&d.pi)),
    };
    Ok(Output::ok(body))
}

fn cmd_bijection(cfg: &CliConfig, max: u64) -> CliResult<Output> {
    check_cap(max, cfg.cap)?;
    let odd = class_spec(ClassId::Odd).members_up_to(max, cfg.cap)?;
    let mut failures = Vec::new();
    for p in &odd {
        let fail = match ferrers_decompose(p) {
            Ok(split) if split.weight() != p.weight() => Some(format!("{p}: weight identity fails")),
            Ok(split) => match ferrers_compose(&split) {
                Ok(back) if &back == p => None,
                Ok(back) => Some(format!("{p}: round-trips to {back}")),
                Err(e) => Some(format!("{p}: {e}")),
            },
            Err(e) => Some(format!("{p}: {e}")),
        };
        failures.extend(fail);
    }
    let summary = if failures.is_empty() {
        format!("checked {} partitions, all round-trip", odd.len())
    } else {
        format!("checked {} partitions, {} failures", odd.len(), failures.len())
    };
    let body = match cfg.format {
        Format::Json => json_body(&json!({
            "max": max.to_string(),
            "checked": odd.len().to_string(),
            "failures": failures,
        })),
        Format::Text => lines(failures.iter().cloned().chain(std::iter::once(summary))),
    };
    Ok(Output { body, code: if failures.is_empty() { 0 } else { 1 } })
}

fn cmd_sip_check(cfg: &CliConfig, class: &str, max: u64) -> CliResult<Output> {
    let spec = class_spec(class_id(class)?);
    let report = verify_sip_property(&spec, max, cfg.cap)?;
    let body = match cfg.format {
        Format::Json => json_body(&json!({
            "class": report.class,
            "max_weight": report.max_weight.to_string(),
            "members_checked": report.members_checked.to_string(),
            "pairs_checked": report.pairs_checked.to_string(),
            "violations": report.violations,
        })),
        Format::Text => {
            let summary = format!(
                "{}: {} members, {} basis pairs checked up to weight {}, {} violations",
                report.class,
                report.members_checked,
                report.pairs_checked,
                report.max_weight,
                report.violations.len()
            );
            lines(report.violations.iter().cloned().chain(std::iter::once(summary)))
        }
    };
    Ok(Output { body, code: if report.is_clean() { 0 } else { 1 } })
}

fn cmd_basis(cfg: &CliConfig, class: &str, length: usize, max_part: u32) -> CliResult<Output> {
    let spec = class_spec(class_id(class)?);
    let basis = spec.enumerate_basis(length, max_part)?;
    let body = match cfg.format {
        Format::Json => json_body(&json!({
            "class": spec.id.as_str(),
            "length": length.to_string(),
            "max_part": max_part.to_string(),
            "basis": basis.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
        })),
        Format::Text => lines(basis.iter().map(|b| b.to_string())),
    };
    Ok(Output::ok(body))
}

fn cmd_table(cfg: &CliConfig, id: &str, order: Option<i64>) -> CliResult<Output> {
    let rec = lookup(id).map_err(|e| CliError::Usage(e.to_string()))?;
    let order = positive_order(order.unwrap_or(rec.default_order))?;
    let vars = rec.var_set();
    let mut sides = Vec::new();
    for &(name, build) in rec.sides {
        let s = build(order, cfg.cap)?;
        if s.max_order() < order {
            return Err(Error::ShortOrder { id: format!("{id}:{name}"), got: s.max_order(), want: order }.into());
        }
        let coeffs: Vec<(i64, String)> =
            s.truncate(order).iter().map(|(k, c)| (k, coeff_to_string(c, &vars))).collect();
        sides.push((name, coeffs));
    }
    let body = match cfg.format {
        Format::Json => json_body(&json!({
            "id": rec.id,
            "order": order.to_string(),
            "sides": sides.iter().map(|(name, cs)| json!({
                "name": name,
                "coefficients": cs.iter().map(|(k, c)| json!({ "q_exponent": k.to_string(), "coeff": c })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut s = String::new();
            for (name, cs) in &sides {
                s.push_str(&format!("[{name}]\n"));
                for (k, c) in cs {
                    s.push_str(&format!("q^{k}: {c}\n"));
                }
            }
            s
        }
    };
    Ok(Output::ok(body))
}
