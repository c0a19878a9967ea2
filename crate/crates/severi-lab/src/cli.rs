//! Command-line front end.
//!
//! Four verbs over the library: `series` emits any of the named q-series,
//! `e8` answers lattice queries (`count`, `classes`, `orbit`, `pairs`),
//! `degrees` prints the per-genus degree table, and `verify` runs named
//! checks from the verification battery. A global `--seed-table` flag
//! re-emits the pinned golden values behind the tests.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on
//! usage or configuration errors. Output is exact (rational strings,
//! never floats) and byte-identical regardless of `--threads`.

use crate::e8::{
    classify_classes, count_norm, count_pair_decompositions, for_each_norm, norm4_vectors, orbit,
    roots, E8Vector,
};
use crate::format::{degree_csv_header, degree_csv_row, DegreeRowPayload, SeriesPayload, VectorPayload};
use crate::qseries::{e4_infinity, eisenstein, theta, QSeries};
use crate::report::CheckReport;
use crate::severi::{
    degree_series, degree_table, excess_correction, nl_series_phi, nodal_correction,
    section_series, BisectionKind,
};
use crate::suite::{run_all, run_check, CHECK_NAMES};
use crate::Config;
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

/// The series the `series` verb can emit.
pub const SERIES_NAMES: [&str; 11] = [
    "E2", "E4", "E6", "theta", "E4inf", "phi", "psi_ex", "psi_no", "psi_sec", "deg_ord",
    "deg_wei",
];

#[derive(Parser)]
#[command(
    name = "severi-lab",
    version,
    about = "Exact q-series, E8 lattice queries, and the verification suite \
             for Severi degrees of rational elliptic surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,

    /// Truncation order for q-series (coefficients 0..=N).
    #[arg(long, global = true, default_value_t = 200, value_name = "N")]
    precision: usize,

    /// Largest lattice norm enumeration sweeps; must be even.
    #[arg(long, global = true, default_value_t = 60, value_name = "2N")]
    norm_cap: i64,

    /// Worker threads for lattice enumeration: a count, or "auto".
    #[arg(long, global = true, default_value = "auto", value_name = "K|auto")]
    threads: String,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Emit the table of pinned golden values instead of running a verb.
    #[arg(long, global = true)]
    seed_table: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named q-series at the configured precision.
    Series {
        /// One of: E2, E4, E6, theta, E4inf, phi, psi_ex, psi_no,
        /// psi_sec, deg_ord, deg_wei.
        name: String,
    },
    /// Lattice queries (all norms must stay within --norm-cap).
    #[command(subcommand)]
    E8(E8Command),
    /// The degree table for all admissible (genus, kind) pairs with
    /// g <= g_max; requires g_max + 2 <= precision.
    Degrees {
        #[arg(default_value_t = 10)]
        g_max: u64,
    },
    /// Run one named verification check, or "all".
    Verify {
        #[arg(default_value = "all")]
        check: String,
    },
}

#[derive(Subcommand)]
enum E8Command {
    /// Count the lattice vectors of one even norm.
    Count {
        #[arg(long)]
        norm: i64,
        /// Stream the vectors themselves, one per line, instead of the
        /// count (canonical order; doubled coordinates).
        #[arg(long)]
        stream: bool,
    },
    /// Partition the 256 classes of E8/2E8 by kind.
    Classes,
    /// Size of the reflection orbit of a seed vector.
    Orbit {
        /// "root", "norm4", "zero", or eight comma-separated doubled
        /// coordinates.
        #[arg(long, default_value = "root")]
        seed: String,
    },
    /// Count unordered pair decompositions u1 + u2 = w with
    /// 4 dot(u1, u2) = norm(w) - 2m.
    Pairs {
        /// "root", "norm4", "zero", or eight comma-separated doubled
        /// coordinates.
        #[arg(long)]
        w: String,
        #[arg(long)]
        m: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "text",
        }
    }
}

/// Everything a run emits, in declaration order.
#[derive(Serialize)]
struct Response<'a> {
    tool_version: &'static str,
    config: ConfigEcho,
    results: &'a [ResultItem],
}

/// The configuration knobs echoed into the output. `threads` is
/// deliberately absent: it cannot affect any result, and leaving it out
/// keeps output byte-identical across thread counts.
#[derive(Serialize)]
struct ConfigEcho {
    precision: usize,
    norm_cap: i64,
    format: &'static str,
}

#[derive(Serialize)]
#[serde(untagged)]
enum ResultItem {
    Series {
        name: String,
        series: SeriesPayload,
    },
    Count {
        norm: i64,
        count: u64,
    },
    Classes {
        zero: u64,
        root_type: u64,
        norm4_type: u64,
    },
    Orbit {
        seed: VectorPayload,
        size: u64,
    },
    Pairs {
        w: VectorPayload,
        m: u64,
        count: u64,
    },
    Degree(DegreeRowPayload),
    Report(CheckReport),
    Seed {
        name: &'static str,
        value: &'static str,
        description: &'static str,
    },
}

/// The pinned golden values, re-emitted by `--seed-table`. Every entry
/// is also asserted somewhere in the test suite; the table exists so the
/// constants can be audited in one place.
const SEED_TABLE: [(&str, &str, &str); 27] = [
    ("e2_q0", "1", "constant term of E2 = 1 - 24 sum_{n>=1} sigma_1(n) q^n"),
    ("e2_q1", "-24", "coefficient of q in E2"),
    ("e4_q0", "1", "constant term of E4 = 1 + 240 sum_{n>=1} sigma_3(n) q^n"),
    ("e4_q1", "240", "coefficient of q in E4"),
    ("e4_q2", "2160", "coefficient of q^2 in E4"),
    ("e6_q0", "1", "constant term of E6 = 1 - 504 sum_{n>=1} sigma_5(n) q^n"),
    ("e6_q1", "-504", "coefficient of q in E6"),
    ("theta_q1", "2", "coefficient of q in theta = 1 + 2 sum_{n>=1} q^(n^2)"),
    ("theta_q4", "2", "coefficient of q^4 in theta"),
    ("root_norm_integral", "2", "norm of the integral root (1, 1, 0^6)"),
    ("root_norm_half", "2", "norm of the half-integral root (1/2^8)"),
    ("root_orbit", "240", "reflection orbit of one root: all vectors of norm 2"),
    ("norm4_orbit", "2160", "reflection orbit of (2, 0^7): all vectors of norm 4"),
    ("classes_zero", "1", "classes of E8/2E8 containing only doubled vectors"),
    ("classes_root_type", "120", "root-type classes of E8/2E8; each holds 2 roots"),
    ("classes_norm4_type", "135", "norm4-type classes of E8/2E8; each holds 16 norm-4 vectors"),
    ("bisection_classes_g1_n1", "6720", "genus-1 height-1 bisection classes: 240 sigma_3(3)"),
    ("min_height_delta_g3_ordinary", "0", "delta = 1 only for g = 0 mod 4 with a Weierstrass bundle"),
    ("min_height_delta_g4_weierstrass", "1", "the same rule at g = 4, Weierstrass"),
    ("phi_q0", "-1", "constant term of the Noether-Lefschetz series phi"),
    ("phi_q1", "24", "coefficient of q in phi: the number of nodal surfaces"),
    ("phi_q2", "73512", "coefficient of q^2 in phi"),
    ("phi_q3", "3621216", "coefficient of q^3 in phi"),
    ("degree_g0_ordinary", "4", "genus-0 ordinary Severi degree: rational quartic curves"),
    ("multiplicity_m1", "2", "section multiplicity 2 sigma_1(1)"),
    ("multiplicity_m2_doubled", "3", "doubled-section multiplicity sigma_1(2) (m not a square)"),
    ("multiplicity_m4_doubled", "6", "doubled-section multiplicity sigma_1(4) - 1 (m a square)"),
];

/// Parses arguments from the process environment, runs the request, and
/// returns the process exit code (0 success, 1 verification failure,
/// 2 usage/config error).
pub fn run() -> u8 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

fn execute(cli: Cli) -> Result<u8, String> {
    if cli.norm_cap < 0 || cli.norm_cap % 2 != 0 {
        return Err(format!(
            "--norm-cap must be an even nonnegative integer, got {}",
            cli.norm_cap
        ));
    }
    match cli.threads.as_str() {
        "auto" => {}
        k => {
            let count: usize = k
                .parse()
                .ok()
                .filter(|&k| k >= 1)
                .ok_or_else(|| format!("--threads must be a positive integer or \"auto\", got {k:?}"))?;
            rayon::ThreadPoolBuilder::new()
                .num_threads(count)
                .build_global()
                .map_err(|e| format!("cannot configure {count} threads: {e}"))?;
        }
    }

    let config = Config {
        precision: cli.precision,
        norm_cap: cli.norm_cap,
    };
    let echo = ConfigEcho {
        precision: cli.precision,
        norm_cap: cli.norm_cap,
        format: cli.format.name(),
    };

    if cli.seed_table {
        if cli.command.is_some() {
            return Err("--seed-table replaces the verb; give one or the other".to_string());
        }
        let items: Vec<ResultItem> = SEED_TABLE
            .iter()
            .map(|&(name, value, description)| ResultItem::Seed {
                name,
                value,
                description,
            })
            .collect();
        emit(&cli.out, &render(cli.format, echo, &items))?;
        return Ok(0);
    }

    let command = cli
        .command
        .ok_or_else(|| "missing verb: series, e8, degrees, or verify (see --help)".to_string())?;

    let (items, exit) = match command {
        Command::Series { name } => (vec![series_item(&name, cli.precision)?], 0),
        Command::E8(sub) => match sub {
            E8Command::Count { norm, stream } => {
                check_norm_arg(norm, cli.norm_cap)?;
                if stream {
                    stream_vectors(norm, cli.format, &cli.out)?;
                    return Ok(0);
                }
                let count = count_norm(norm).map_err(|e| e.to_string())?;
                (vec![ResultItem::Count { norm, count }], 0)
            }
            E8Command::Classes => {
                let (zero, root_type, norm4_type) =
                    classify_classes().map_err(|e| e.to_string())?;
                (
                    vec![ResultItem::Classes {
                        zero,
                        root_type,
                        norm4_type,
                    }],
                    0,
                )
            }
            E8Command::Orbit { seed } => {
                let seed = parse_vector(&seed)?;
                check_norm_arg(seed.norm(), cli.norm_cap)?;
                let size = orbit(&seed, roots()).map_err(|e| e.to_string())?.len() as u64;
                (
                    vec![ResultItem::Orbit {
                        seed: VectorPayload::from_vector(&seed),
                        size,
                    }],
                    0,
                )
            }
            E8Command::Pairs { w, m } => {
                let w = parse_vector(&w)?;
                let census_norm = 2 * m as i64;
                if census_norm > cli.norm_cap {
                    return Err(format!(
                        "pair counting at m = {m} sweeps norm {census_norm}, above --norm-cap {}",
                        cli.norm_cap
                    ));
                }
                let count = count_pair_decompositions(&w, m);
                (
                    vec![ResultItem::Pairs {
                        w: VectorPayload::from_vector(&w),
                        m,
                        count,
                    }],
                    0,
                )
            }
        },
        Command::Degrees { g_max } => {
            if (g_max + 2) as usize > cli.precision {
                return Err(format!(
                    "degrees up to g_max = {g_max} need precision >= {}, got {}",
                    g_max + 2,
                    cli.precision
                ));
            }
            let rows = degree_table(g_max).map_err(|e| e.to_string())?;
            (
                rows.iter()
                    .map(|row| ResultItem::Degree(DegreeRowPayload::from_row(row)))
                    .collect(),
                0,
            )
        }
        Command::Verify { check } => {
            if cli.precision < 8 {
                return Err(format!(
                    "verify needs --precision >= 8 (several identities are vacuous below), got {}",
                    cli.precision
                ));
            }
            let reports = if check == "all" {
                run_all(&config)
            } else {
                vec![run_check(&check, &config).ok_or_else(|| {
                    format!(
                        "unknown check {check:?}; known checks: all, {}",
                        CHECK_NAMES.join(", ")
                    )
                })?]
            };
            let exit = if reports.iter().all(CheckReport::passed) {
                0
            } else {
                1
            };
            (reports.into_iter().map(ResultItem::Report).collect(), exit)
        }
    };

    emit(&cli.out, &render(cli.format, echo, &items))?;
    Ok(exit)
}

/// Builds the named q-series at the given precision.
fn series_item(name: &str, precision: usize) -> Result<ResultItem, String> {
    let series: QSeries = match name {
        "E2" => eisenstein(2, precision).expect("weight 2 is supported"),
        "E4" => eisenstein(4, precision).expect("weight 4 is supported"),
        "E6" => eisenstein(6, precision).expect("weight 6 is supported"),
        "theta" => theta(precision),
        "E4inf" => e4_infinity(precision),
        "phi" => nl_series_phi(precision),
        "psi_ex" => excess_correction(precision),
        "psi_no" => nodal_correction(precision),
        "psi_sec" => section_series(precision),
        "deg_ord" => degree_series(BisectionKind::Ordinary, precision),
        "deg_wei" => degree_series(BisectionKind::Weierstrass, precision),
        other => {
            return Err(format!(
                "unknown series {other:?}; known series: {}",
                SERIES_NAMES.join(", ")
            ))
        }
    };
    Ok(ResultItem::Series {
        name: name.to_string(),
        series: SeriesPayload::from_series(&series),
    })
}

/// Validates a norm argument against the enumeration cap.
fn check_norm_arg(norm: i64, cap: i64) -> Result<(), String> {
    if norm < 0 || norm % 2 != 0 {
        return Err(format!("lattice norms are even and nonnegative, got {norm}"));
    }
    if norm > cap {
        return Err(format!("norm {norm} exceeds --norm-cap {cap}"));
    }
    Ok(())
}

/// Parses "root", "norm4", "zero", or eight comma-separated doubled
/// coordinates into a lattice vector.
fn parse_vector(text: &str) -> Result<E8Vector, String> {
    match text {
        "root" => return Ok(roots()[0]),
        "norm4" => return Ok(norm4_vectors()[0]),
        "zero" => return Ok(E8Vector::zero()),
        _ => {}
    }
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 8 {
        return Err(format!(
            "expected \"root\", \"norm4\", \"zero\", or 8 comma-separated doubled coordinates, got {text:?}"
        ));
    }
    let mut doubled = [0i32; 8];
    for (slot, part) in doubled.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse()
            .map_err(|_| format!("bad coordinate {part:?} in {text:?}"))?;
    }
    E8Vector::from_doubled(doubled).map_err(|e| e.to_string())
}

/// Streams the vectors of one norm, one per line, to the output sink.
fn stream_vectors(norm: i64, format: Format, out: &Option<PathBuf>) -> Result<(), String> {
    let stdout = std::io::stdout();
    let mut sink: Box<dyn std::io::Write> = match out {
        Some(path) => Box::new(std::io::BufWriter::new(
            std::fs::File::create(path)
                .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        )),
        None => Box::new(std::io::BufWriter::new(stdout.lock())),
    };
    if format == Format::Csv {
        writeln!(sink, "d1,d2,d3,d4,d5,d6,d7,d8").map_err(|e| e.to_string())?;
    }
    let mut io_error = None;
    for_each_norm(norm, |v| {
        if io_error.is_some() {
            return;
        }
        let line = match format {
            Format::Json => serde_json::to_string(&VectorPayload::from_vector(v))
                .expect("vector payloads serialize"),
            Format::Csv => {
                let d = v.doubled();
                d.iter()
                    .map(i32::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            }
            Format::Text => v.to_string(),
        };
        if let Err(e) = writeln!(sink, "{line}") {
            io_error = Some(e.to_string());
        }
    })
    .map_err(|e| e.to_string())?;
    if let Some(e) = io_error {
        return Err(e);
    }
    sink.flush().map_err(|e| e.to_string())
}

/// Renders the response in the requested format. The returned string is
/// the complete output, newline-terminated.
fn render(format: Format, echo: ConfigEcho, items: &[ResultItem]) -> String {
    match format {
        Format::Json => {
            let response = Response {
                tool_version: env!("CARGO_PKG_VERSION"),
                config: echo,
                results: items,
            };
            let mut text =
                serde_json::to_string_pretty(&response).expect("responses serialize");
            text.push('\n');
            text
        }
        Format::Csv => render_csv(items),
        Format::Text => render_text(items),
    }
}

/// Quotes one CSV field per RFC 4180: wrap and double quotes when the
/// field contains a comma, quote, or newline.
fn csv_field(text: &str) -> String {
    if text.contains([',', '"', '\n']) {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

fn doubled_words(payload: &VectorPayload) -> String {
    payload
        .coords
        .iter()
        .map(i32::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn render_csv(items: &[ResultItem]) -> String {
    let mut out = String::new();
    let max_m = items
        .iter()
        .map(|item| match item {
            ResultItem::Degree(row) => row.nonsimple.len(),
            _ => 0,
        })
        .max()
        .unwrap_or(0);
    for (index, item) in items.iter().enumerate() {
        let first = index == 0;
        match item {
            ResultItem::Series { series, .. } => {
                out.push_str("n,coefficient\n");
                for (n, c) in series.coeffs.iter().enumerate() {
                    let _ = writeln!(out, "{n},{c}");
                }
            }
            ResultItem::Count { norm, count } => {
                out.push_str("norm,count\n");
                let _ = writeln!(out, "{norm},{count}");
            }
            ResultItem::Classes {
                zero,
                root_type,
                norm4_type,
            } => {
                out.push_str("zero,root_type,norm4_type\n");
                let _ = writeln!(out, "{zero},{root_type},{norm4_type}");
            }
            ResultItem::Orbit { seed, size } => {
                out.push_str("seed_doubled,size\n");
                let _ = writeln!(out, "{},{size}", doubled_words(seed));
            }
            ResultItem::Pairs { w, m, count } => {
                out.push_str("w_doubled,m,count\n");
                let _ = writeln!(out, "{},{m},{count}", doubled_words(w));
            }
            ResultItem::Degree(row) => {
                if first {
                    out.push_str(&degree_csv_header(max_m));
                    out.push('\n');
                }
                out.push_str(&degree_csv_row(row, max_m));
                out.push('\n');
            }
            ResultItem::Report(report) => {
                if first {
                    out.push_str("name,precision,status,exponent,expected,got,notes\n");
                }
                let (exponent, expected, got) = match &report.first_discrepancy {
                    Some(d) => (d.exponent.to_string(), d.expected.clone(), d.got.clone()),
                    None => (String::new(), String::new(), String::new()),
                };
                let status = if report.passed() { "pass" } else { "fail" };
                let _ = writeln!(
                    out,
                    "{},{},{status},{},{},{},{}",
                    csv_field(&report.name),
                    report.precision,
                    exponent,
                    csv_field(&expected),
                    csv_field(&got),
                    csv_field(report.notes.as_deref().unwrap_or(""))
                );
            }
            ResultItem::Seed {
                name,
                value,
                description,
            } => {
                if first {
                    out.push_str("name,value,description\n");
                }
                let _ = writeln!(
                    out,
                    "{},{},{}",
                    csv_field(name),
                    csv_field(value),
                    csv_field(description)
                );
            }
        }
    }
    out
}

fn render_text(items: &[ResultItem]) -> String {
    let mut out = String::new();
    let mut checks = 0u32;
    let mut passed = 0u32;
    for item in items {
        match item {
            ResultItem::Series { name, series } => {
                let _ = writeln!(out, "{name} (precision {})", series.precision);
                for (n, c) in series.coeffs.iter().enumerate() {
                    let _ = writeln!(out, "q^{n}: {c}");
                }
            }
            ResultItem::Count { norm, count } => {
                let _ = writeln!(out, "{count} vectors of norm {norm}");
            }
            ResultItem::Classes {
                zero,
                root_type,
                norm4_type,
            } => {
                let _ = writeln!(
                    out,
                    "classes: zero {zero}, root-type {root_type}, norm4-type {norm4_type}"
                );
            }
            ResultItem::Orbit { seed, size } => {
                let seed = seed.to_vector().expect("payload built from a vector");
                let _ = writeln!(out, "orbit of {seed}: {size} vectors");
            }
            ResultItem::Pairs { w, m, count } => {
                let w = w.to_vector().expect("payload built from a vector");
                let _ = writeln!(out, "pairs(w = {w}, m = {m}): {count}");
            }
            ResultItem::Degree(row) => {
                let nonsimple = row.nonsimple.join(", ");
                let _ = writeln!(
                    out,
                    "g {} {}: degree {}, simple {}, nonsimple [{nonsimple}], bound {}, genus bound {}",
                    row.g, row.kind, row.degree, row.simple, row.bound, row.genus_bound
                );
            }
            ResultItem::Report(report) => {
                checks += 1;
                if report.passed() {
                    passed += 1;
                }
                let _ = writeln!(out, "{report}");
            }
            ResultItem::Seed {
                name,
                value,
                description,
            } => {
                let _ = writeln!(out, "{name} = {value}  ({description})");
            }
        }
    }
    if checks > 0 {
        let _ = writeln!(out, "{passed}/{checks} checks passed");
    }
    out
}

/// Writes the rendered output to the configured sink.
fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vector_arguments_parse() {
        assert_eq!(parse_vector("root").unwrap().norm(), 2);
        assert_eq!(parse_vector("norm4").unwrap().norm(), 4);
        assert_eq!(parse_vector("zero").unwrap(), E8Vector::zero());
        let custom = parse_vector("2,2,0,0,0,0,0,0").unwrap();
        assert_eq!(custom.norm(), 2);
        assert!(parse_vector("1,2,3").is_err());
        assert!(parse_vector("1,0,0,0,0,0,0,0").is_err());
        assert!(parse_vector("a,b,c,d,e,f,g,h").is_err());
    }

    #[test]
    fn norm_arguments_validate() {
        assert!(check_norm_arg(4, 60).is_ok());
        assert!(check_norm_arg(62, 60).is_err());
        assert!(check_norm_arg(3, 60).is_err());
        assert!(check_norm_arg(-2, 60).is_err());
    }

    #[test]
    fn csv_fields_quote() {
        assert_eq!(csv_field("plain"), "plain");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    #[test]
    fn series_names_are_exhaustive() {
        for name in SERIES_NAMES {
            assert!(series_item(name, 2).is_ok(), "{name}");
        }
        assert!(series_item("E8", 2).is_err());
    }

    #[test]
    fn seed_table_values_match_library() {
        use crate::qseries::rational;
        let phi = nl_series_phi(3);
        let expected: Vec<&str> = SEED_TABLE
            .iter()
            .filter(|(name, ..)| name.starts_with("phi_q"))
            .map(|&(_, value, _)| value)
            .collect();
        assert_eq!(expected, vec!["-1", "24", "73512", "3621216"]);
        for (n, want) in expected.iter().enumerate() {
            assert_eq!(
                phi.coeff(n).unwrap(),
                &rational(want.parse::<i64>().unwrap())
            );
        }
    }
}
