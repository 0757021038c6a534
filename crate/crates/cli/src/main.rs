mod generators;
mod verify;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use blobalg::diagram::{enumerate_basis, Family};
use blobalg::params::{parse_point, LaurentPoly, ParamName, Point};
use blobalg::rep::{
    dimension_table, dimension_table_csv, dimension_table_json, gram_matrix, gram_matrix_csv, rank_at,
    semisimplicity_scan, Weight,
};
use blobalg::symplectic::{enumerate_bphi, enumerate_bx, enumerate_bx_prime};
use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use generators::Algebra;
use verify::Suite;

const MAX_RANK_VAR: &str = "BLOBALG_MAX_RANK";
const DEFAULT_MAX_RANK: u32 = 6;

#[derive(Parser)]
#[command(name = "blobalg", version, about = "Exact diagram calculus for blob and symplectic blob algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EnumFamily {
    Tl,
    Blob,
    Contour,
    /// L/R blob diagrams `B^x_n`.
    Bx,
    /// Feature-free L/R blob diagrams `B^{x'}_n`.
    BxPrime,
    /// Periodic basis diagrams of `b^φ_{2n}`.
    Phi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Table {
    Dims,
    Gram,
}

#[derive(Subcommand)]
enum Command {
    /// List a diagram basis.
    Enumerate {
        #[arg(long, value_enum)]
        family: EnumFamily,
        #[arg(long, visible_alias = "m")]
        n: u32,
        /// Bead period for contour algebras.
        #[arg(long)]
        period: Option<u32>,
        /// Exposure level for contour algebras.
        #[arg(long)]
        exposure: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Multiply a word in the generators `1`, `e`, `f`, `U1`, `U2`, ...
    Multiply {
        #[arg(long, value_enum)]
        family: Algebra,
        #[arg(long, visible_alias = "m")]
        n: u32,
        /// Substitute parameter values; unset parameters stay symbolic.
        #[arg(long = "set", value_name = "NAME=VALUE")]
        set: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(required = true)]
        word: Vec<String>,
    },
    /// Gram matrix and determinant of a standard module of `b^φ_{2m}`.
    Gram {
        #[arg(long)]
        m: u32,
        #[arg(long, allow_hyphen_values = true)]
        weight: i64,
        /// Substitute parameter values; unset parameters stay symbolic.
        #[arg(long = "set", value_name = "NAME=VALUE")]
        set: Vec<String>,
        /// Print the matrix as well as the determinant.
        #[arg(long)]
        matrix: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Dimensions of the standard modules for ranks up to `m`.
    Dims {
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run named property suites and print a pass/fail table.
    Verify {
        /// Suites to run; all of them when omitted.
        #[arg(value_enum)]
        suites: Vec<Suite>,
        /// Random samples for the confluence suite.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Evaluate every Gram determinant at a rational point with all six
    /// parameters set.
    Scan {
        #[arg(long)]
        m: u32,
        #[arg(long = "set", value_name = "NAME=VALUE", required = true)]
        set: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Write a dimension table or Gram report as CSV or JSON.
    Export {
        #[arg(value_enum)]
        table: Table,
        #[arg(long)]
        m: u32,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<i64>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Write here instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

fn usage_error(msg: impl std::fmt::Display) -> ! {
    Cli::command().error(ErrorKind::InvalidValue, msg).exit()
}

fn max_rank() -> Result<u32> {
    match std::env::var(MAX_RANK_VAR) {
        Ok(v) => v.trim().parse().with_context(|| format!("{MAX_RANK_VAR}={v:?} is not a rank")),
        Err(_) => Ok(DEFAULT_MAX_RANK),
    }
}

fn guard_rank(rank: u32) -> Result<()> {
    let max = max_rank()?;
    if rank > max {
        bail!("rank {rank} exceeds the guard {max}; raise {MAX_RANK_VAR} to allow it");
    }
    Ok(())
}

fn point_from(set: &[String]) -> Point {
    parse_point(&set.join(",")).unwrap_or_else(|e| usage_error(e))
}

/// A polynomial after partial substitution, as `scale * poly` with the
/// scale dropped when it is one.
fn specialised(p: &LaurentPoly, point: &Point) -> Result<String> {
    if point.is_empty() {
        return Ok(p.to_string());
    }
    let (scale, q) = p.specialise(point)?;
    if let Some((c, e)) = q.as_term() {
        if e.iter().all(|&x| x == 0) {
            return Ok((scale * BigRational::from_integer(c.clone())).to_string());
        }
    }
    if scale == BigRational::from_integer(1.into()) {
        return Ok(q.to_string());
    }
    if q.len() == 1 {
        return Ok(format!("{scale}*{q}"));
    }
    Ok(format!("{scale}*({q})"))
}

fn json_line(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("plain data")
}

fn reject_csv(format: Format, what: &str) {
    if format == Format::Csv {
        usage_error(format!("{what} has no CSV form"));
    }
}

fn enumerate(family: EnumFamily, n: u32, period: Option<u32>, exposure: Option<u32>, format: Format) -> Result<String> {
    reject_csv(format, "enumerate");
    guard_rank(n)?;
    let diagrams = |ds: Vec<blobalg::Diagram>| match format {
        Format::Json => json_line(&serde_json::to_value(ds.iter().map(|d| d.to_json()).collect::<Vec<_>>()).expect("plain data")),
        _ => ds.iter().map(|d| format!("{d}\n")).collect(),
    };
    let out = match family {
        EnumFamily::Tl => diagrams(enumerate_basis(Family::TemperleyLieb, n)?),
        EnumFamily::Blob => diagrams(enumerate_basis(Family::Blob, n)?),
        EnumFamily::Contour => {
            let (Some(period), Some(exposure)) = (period, exposure) else {
                usage_error("the contour family needs --period and --exposure");
            };
            diagrams(enumerate_basis(Family::Contour { period, exposure }, n)?)
        }
        EnumFamily::Bx => diagrams(enumerate_bx(n)?),
        EnumFamily::BxPrime => diagrams(enumerate_bx_prime(n)?),
        EnumFamily::Phi => {
            let ss = enumerate_bphi(n);
            match format {
                Format::Json => json_line(&serde_json::to_value(ss.iter().map(|s| s.to_json()).collect::<Vec<_>>())?),
                _ => ss.iter().map(|s| format!("{s}\n")).collect(),
            }
        }
    };
    Ok(out)
}

fn multiply(family: Algebra, n: u32, set: &[String], format: Format, word: &[String]) -> Result<String> {
    reject_csv(format, "multiply");
    guard_rank(n)?;
    let point = point_from(set);
    let tokens: Vec<&str> = word.iter().flat_map(|w| w.split_whitespace()).collect();
    let word = generators::parse_word(family, n, &tokens).unwrap_or_else(|e| usage_error(e));
    let product = generators::product(family, n, &word)?;
    let mut terms = Vec::new();
    for (basis, coeff) in product {
        let c = specialised(&coeff, &point)?;
        if c != "0" {
            terms.push((c, basis));
        }
    }
    Ok(match format {
        Format::Json => {
            let items: Vec<serde_json::Value> = terms
                .iter()
                .map(|(c, b)| serde_json::json!({ "coefficient": c, "diagram": b.json }))
                .collect();
            json_line(&serde_json::Value::Array(items))
        }
        _ if terms.is_empty() => "0\n".to_string(),
        _ => terms.iter().map(|(c, b)| if c == "1" { format!("{}\n", b.text) } else { format!("({c}) {}\n", b.text) }).collect(),
    })
}

fn gram(m: u32, l: i64, set: &[String], show_matrix: bool, format: Format) -> Result<String> {
    guard_rank(m)?;
    Weight::new(m, l)?;
    let point = point_from(set);
    let r = gram_matrix(m, l)?;
    let complete = ParamName::ALL.iter().all(|p| point.contains_key(p));
    let rank = if complete { Some(rank_at(&r.evaluate(&point)?)) } else { None };
    match format {
        Format::Csv => {
            if !point.is_empty() {
                usage_error("--set is not supported with CSV output");
            }
            Ok(gram_matrix_csv(m, l)?)
        }
        Format::Json => {
            let mut j = r.to_json();
            if !point.is_empty() {
                j["specialised"] = specialised(&r.determinant, &point)?.into();
            }
            if let Some(rank) = rank {
                j["rank"] = rank.into();
            }
            Ok(json_line(&j))
        }
        Format::Text => {
            let mut out = String::new();
            if show_matrix {
                out.push_str(&format!("basis: {}\n", r.basis.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" ")));
                for row in &r.matrix {
                    let cells: Vec<String> = row.iter().map(|p| specialised(p, &point)).collect::<Result<_>>()?;
                    out.push_str(&format!("[{}]\n", cells.join(", ")));
                }
            }
            if point.is_empty() {
                out.push_str(&format!("{}\n", r.factors));
            } else {
                out.push_str(&format!("{}\n", specialised(&r.determinant, &point)?));
            }
            if let Some(rank) = rank {
                out.push_str(&format!("rank {rank} of {}\n", r.dimension));
            }
            Ok(out)
        }
    }
}

fn dims(m: u32, format: Format) -> Result<String> {
    Ok(match format {
        Format::Csv => dimension_table_csv(m)?,
        Format::Json => json_line(&dimension_table_json(m)?),
        Format::Text => {
            let table = dimension_table(m)?;
            let hi = (m as i64 - 1).max(0);
            let lo = -(m as i64);
            let mut out = format!("{:>3} |", "m");
            for l in (lo..=hi).rev() {
                out.push_str(&format!(" {:>4}", format!("l={l}")));
            }
            out.push_str(" | total\n");
            for row in table {
                out.push_str(&format!("{:>3} |", row.m));
                for l in (lo..=hi).rev() {
                    let cell = row.dims.iter().find(|(k, _)| *k == l).map(|(_, d)| d.to_string()).unwrap_or_default();
                    out.push_str(&format!(" {cell:>4}"));
                }
                out.push_str(&format!(" | {}\n", row.algebra_dim));
            }
            out
        }
    })
}

fn scan(m: u32, set: &[String], format: Format) -> Result<String> {
    reject_csv(format, "scan");
    guard_rank(m)?;
    let point = point_from(set);
    if let Some(p) = ParamName::ALL.iter().find(|p| !point.contains_key(p)) {
        usage_error(format!("scan needs all six parameters; {p} is unset"));
    }
    let r = semisimplicity_scan(m, &point)?;
    Ok(match format {
        Format::Json => json_line(&serde_json::to_value(&r)?),
        _ => {
            let mut out = String::new();
            for w in &r.weights {
                let flag = if w.vanishes { "  vanishes" } else { "" };
                out.push_str(&format!("l={:<3} dim {:<4} rank {:<4} det {}{flag}\n", w.l, w.dimension, w.rank, w.determinant));
            }
            for c in &r.conditions {
                let status = match (c.vanishes, c.applies) {
                    (true, true) => "holds, implies non-semisimple",
                    (true, false) => "holds, not applicable at this m",
                    (false, _) => "does not hold",
                };
                out.push_str(&format!("{:<12} = {:<12} {status}\n", c.name, c.value));
            }
            out.push_str(if r.semisimple { "semisimple\n" } else { "not semisimple\n" });
            out
        }
    })
}

fn export(table: Table, m: u32, weight: Option<i64>, format: Format) -> Result<String> {
    if format == Format::Text {
        usage_error("export writes csv or json");
    }
    match table {
        Table::Dims => dims(m, format),
        Table::Gram => {
            let Some(l) = weight else { usage_error("exporting a Gram report needs --weight") };
            gram(m, l, &[], false, format)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    let (out, ok) = match cli.command {
        Command::Enumerate { family, n, period, exposure, format } => (enumerate(family, n, period, exposure, format)?, true),
        Command::Multiply { family, n, set, format, word } => (multiply(family, n, &set, format, &word)?, true),
        Command::Gram { m, weight, set, matrix, format } => (gram(m, weight, &set, matrix, format)?, true),
        Command::Dims { m, format } => (dims(m, format)?, true),
        Command::Verify { suites, samples, seed } => {
            let suites = if suites.is_empty() { Suite::all().to_vec() } else { suites };
            let (table, ok) = verify::run(&suites, samples, seed)?;
            (table, ok)
        }
        Command::Scan { m, set, format } => (scan(m, &set, format)?, true),
        Command::Export { table, m, weight, format, output } => {
            let s = export(table, m, weight, format)?;
            if let Some(path) = output {
                fs::write(&path, &s).with_context(|| format!("writing {}", path.display()))?;
                eprintln!("wrote {}", path.display());
                (String::new(), true)
            } else {
                (s, true)
            }
        }
    };
    let mut stdout = std::io::stdout().lock();
    stdout.write_all(out.as_bytes())?;
    if !out.is_empty() && !out.ends_with('\n') {
        stdout.write_all(b"\n")?;
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if e.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
