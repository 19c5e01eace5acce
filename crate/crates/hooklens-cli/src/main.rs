//! Batch driver over the hooklens library: each subcommand computes one
//! workflow, writes a CSV or JSON report, and exits 0 when every assertion in
//! that workflow holds, 1 when one fails, and 2 on usage errors.
//!
//! Reports are byte-identical across thread counts: parallel stages collect
//! in index order and all floats print in shortest round-trip form.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use hooklens::asym::{
    minor_arc_domination_report, standard_checks, AsymError, EquidistTable, IdentityCheck,
};
use hooklens::ineq::{
    discrete_laguerre_check, jensen_hyperbolicity_check, IntegerSequenceWindow,
};
use hooklens::partition::{
    hook_count_poly_oracle, hook_length_residue_totals, partition_number, residue_count_table,
};
use hooklens::report::{
    corollary_scan, gap_corollary_scan, write_arc_csv, write_corollary_csv, write_equidist_csv,
    write_json, zeta_conjecture_report, ConjectureReport, CorollaryScan, EquidistSummary,
    MinorArcSummary,
};
use hooklens::series::{han_series, residue_filter_exact};

#[derive(Parser)]
#[command(
    name = "hooklens",
    version,
    about = "Exact and asymptotic reports on hook-length statistics of partitions"
)]
struct RunConfig {
    #[command(subcommand)]
    command: Command,

    /// Worker threads; the HOOKLENS_THREADS environment variable overrides
    /// this flag, and the default is the machine's available parallelism.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,

    /// Write the report to this path instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    /// Report format; every workflow has a native default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compare series coefficients against the enumeration oracle (exact).
    VerifyHan {
        /// Hook length ℓ.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        ell: u64,
        /// Largest n compared; the oracle enumerates all partitions of n.
        #[arg(long = "max-n", default_value_t = 40, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
    },
    /// Residue-class table h_ℓ(a,b;n) vs p(n)/b with an error-decay summary.
    Equidist {
        /// Hook length ℓ.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        ell: u64,
        /// Modulus b ≥ 1 (b = 1 keeps every partition and has error 0).
        #[arg(long = "mod", value_parser = clap::value_parser!(u64).range(1..))]
        modulus: u64,
        #[arg(long = "max-n", default_value_t = 400, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        /// Series truncation order (defaults to max-n).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        order: Option<u64>,
        /// Analytic tolerance echoed into the JSON summary.
        #[arg(long, default_value_t = 1e-10)]
        tolerance: f64,
    },
    /// Identity battery: modular transformation, Hardy–Ramanujan via Wright,
    /// Euler–Maclaurin decay orders and the f_ξ constant term.
    Asym {
        /// Deepest Euler–Maclaurin order in the decay sweep.
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..=20))]
        order: u64,
        #[arg(long, default_value_t = 1e-10)]
        tolerance: f64,
    },
    /// Arc integrals I_{f_ξ} at every nontrivial twist ξ = ζ_b^k; fails
    /// unless every real part is strictly negative.
    Arcs {
        /// Hook length ℓ.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        ell: u64,
        /// Modulus b ≥ 2 of the twists.
        #[arg(long = "mod", value_parser = clap::value_parser!(u64).range(1..))]
        modulus: u64,
    },
    /// Corollary threshold scans (Turán, Laguerre, multiplicative gap) over
    /// p(n) and the residue sequences, plus root/unimodality verdicts.
    Ineq {
        /// Hook length ℓ.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        ell: u64,
        /// Modulus b ≥ 1 (b = 1 scans only p(n)).
        #[arg(long = "mod", value_parser = clap::value_parser!(u64).range(1..))]
        modulus: u64,
        /// Scan ceiling for the predicates.
        #[arg(long = "max-n", default_value_t = 400, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        /// Restrict the residue scans to one class a < b.
        #[arg(long)]
        residue: Option<u64>,
    },
    /// Exploratory oracle tables: partitions by ℓ-hook-count residue and
    /// total hook cells by hook-length residue. Enumerative; keep n modest.
    Oracle {
        /// Hook length ℓ.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        ell: u64,
        /// Modulus b ≥ 2.
        #[arg(long = "mod", value_parser = clap::value_parser!(u64).range(1..))]
        modulus: u64,
        #[arg(long = "max-n", default_value_t = 40)]
        max_n: u64,
        /// Restrict to one residue class a < b.
        #[arg(long)]
        residue: Option<u64>,
    },
}

enum Failure {
    /// Invalid parameters: exit 2 with a diagnostic.
    Usage(String),
    /// A workflow assertion failed: exit 1 (the report is still written).
    Check(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let config = RunConfig::parse();
    if let Err(message) = configure_threads(config.threads) {
        eprintln!("error: {message}");
        return ExitCode::from(2);
    }
    match run(&config) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(message)) => {
            eprintln!("check failed: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("io error: {e}");
            ExitCode::from(1)
        }
    }
}

fn configure_threads(flag: Option<u64>) -> Result<(), String> {
    let from_env = match std::env::var("HOOKLENS_THREADS") {
        Ok(raw) => Some(
            raw.parse::<u64>()
                .ok()
                .filter(|&n| n >= 1)
                .ok_or_else(|| format!("HOOKLENS_THREADS must be a positive integer, got {raw:?}"))?,
        ),
        Err(std::env::VarError::NotPresent) => None,
        Err(e) => return Err(format!("HOOKLENS_THREADS: {e}")),
    };
    let threads = from_env
        .or(flag)
        .map(|n| n as usize)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn run(config: &RunConfig) -> Result<(), Failure> {
    match &config.command {
        Command::VerifyHan { ell, max_n } => run_verify_han(
            *ell as usize,
            *max_n as usize,
            config.format.unwrap_or(Format::Json),
            &config.output,
        ),
        Command::Equidist {
            ell,
            modulus,
            max_n,
            order,
            tolerance,
        } => run_equidist(
            *ell as usize,
            *modulus as usize,
            *max_n as usize,
            order.map(|o| o as usize),
            *tolerance,
            config.format.unwrap_or(Format::Csv),
            &config.output,
        ),
        Command::Asym { order, tolerance } => run_asym(
            *order as usize,
            *tolerance,
            config.format.unwrap_or(Format::Json),
            &config.output,
        ),
        Command::Arcs { ell, modulus } => run_arcs(
            *ell as u32,
            *modulus as usize,
            config.format.unwrap_or(Format::Json),
            &config.output,
        ),
        Command::Ineq {
            ell,
            modulus,
            max_n,
            residue,
        } => run_ineq(
            *ell as usize,
            *modulus as usize,
            *max_n as usize,
            residue.map(|a| a as usize),
            config.format.unwrap_or(Format::Json),
            &config.output,
        ),
        Command::Oracle {
            ell,
            modulus,
            max_n,
            residue,
        } => run_oracle(
            *ell as usize,
            *modulus as usize,
            *max_n as usize,
            residue.map(|a| a as usize),
            config.format.unwrap_or(Format::Csv),
            &config.output,
        ),
    }
}

fn with_writer<F>(output: &Option<PathBuf>, emit: F) -> Result<(), Failure>
where
    F: FnOnce(&mut dyn Write) -> io::Result<()>,
{
    match output {
        Some(path) => {
            let mut writer = BufWriter::new(File::create(path)?);
            emit(&mut writer)?;
            writer.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            emit(&mut lock)?;
            lock.flush()?;
        }
    }
    Ok(())
}

fn positive_tolerance(tolerance: f64) -> Result<(), Failure> {
    if tolerance > 0.0 && tolerance.is_finite() {
        Ok(())
    } else {
        Err(Failure::Usage(format!(
            "tolerance must be a positive real, got {tolerance}"
        )))
    }
}

fn class_list(b: usize, residue: Option<usize>) -> Result<Vec<usize>, Failure> {
    match residue {
        None => Ok((0..b).collect()),
        Some(a) if a < b => Ok(vec![a]),
        Some(a) => Err(Failure::Usage(format!(
            "residue {a} is not a class modulo {b}"
        ))),
    }
}

#[derive(Serialize)]
struct VerifyHanReport {
    ell: usize,
    max_n: usize,
    all_match: bool,
    first_mismatch: Option<usize>,
}

fn run_verify_han(
    ell: usize,
    max_n: usize,
    format: Format,
    output: &Option<PathBuf>,
) -> Result<(), Failure> {
    let series = han_series(ell, max_n).map_err(|e| Failure::Usage(e.to_string()))?;
    let matches: Vec<bool> = (0..=max_n)
        .into_par_iter()
        .map(|n| *series.coeff(n) == hook_count_poly_oracle(ell, n))
        .collect();
    let first_mismatch = matches.iter().position(|&ok| !ok);
    let report = VerifyHanReport {
        ell,
        max_n,
        all_match: first_mismatch.is_none(),
        first_mismatch,
    };
    with_writer(output, |w| match format {
        Format::Json => write_json(w, &report),
        Format::Csv => {
            writeln!(w, "n,match")?;
            for (n, ok) in matches.iter().enumerate() {
                writeln!(w, "{n},{ok}")?;
            }
            Ok(())
        }
    })?;
    match first_mismatch {
        None => Ok(()),
        Some(n) => Err(Failure::Check(format!(
            "series coefficient differs from the oracle at n = {n}"
        ))),
    }
}

fn run_equidist(
    ell: usize,
    b: usize,
    max_n: usize,
    order: Option<usize>,
    tolerance: f64,
    format: Format,
    output: &Option<PathBuf>,
) -> Result<(), Failure> {
    positive_tolerance(tolerance)?;
    let order = order.unwrap_or(max_n);
    if order < max_n {
        return Err(Failure::Usage(format!(
            "order {order} is below max-n {max_n}"
        )));
    }
    let series = han_series(ell, order).map_err(|e| Failure::Usage(e.to_string()))?;
    let table =
        EquidistTable::from_series(&series, b, max_n).map_err(|e| Failure::Usage(e.to_string()))?;

    // the residue classes must tile p(n) exactly — a cheap end-to-end guard
    let mut broken = None;
    for group in table.rows().chunks(b) {
        let total: BigInt = group.iter().map(|row| &row.exact).sum();
        if total != partition_number(group[0].n) {
            broken = Some(group[0].n);
            break;
        }
    }

    with_writer(output, |w| match format {
        Format::Csv => write_equidist_csv(w, &table),
        Format::Json => write_json(w, &EquidistSummary::new(&table, tolerance)),
    })?;
    match broken {
        None => Ok(()),
        Some(n) => Err(Failure::Check(format!(
            "residue classes fail to sum to p({n})"
        ))),
    }
}

#[derive(Serialize)]
struct AsymReport {
    order_max: usize,
    tolerance: f64,
    all_passed: bool,
    checks: Vec<IdentityCheck>,
}

fn run_asym(
    order: usize,
    tolerance: f64,
    format: Format,
    output: &Option<PathBuf>,
) -> Result<(), Failure> {
    positive_tolerance(tolerance)?;
    let checks = standard_checks(order, tolerance).map_err(|e| Failure::Check(e.to_string()))?;
    let report = AsymReport {
        order_max: order,
        tolerance,
        all_passed: checks.iter().all(|c| c.pass),
        checks,
    };
    with_writer(output, |w| match format {
        Format::Json => write_json(w, &report),
        Format::Csv => {
            writeln!(w, "name,measured,bound,pass")?;
            for c in &report.checks {
                writeln!(w, "{},{},{},{}", c.name, c.measured, c.bound, c.pass)?;
            }
            Ok(())
        }
    })?;
    if report.all_passed {
        Ok(())
    } else {
        let failed: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name.as_str())
            .collect();
        Err(Failure::Check(format!(
            "identity checks failed: {}",
            failed.join(", ")
        )))
    }
}

fn run_arcs(
    ell: u32,
    b: usize,
    format: Format,
    output: &Option<PathBuf>,
) -> Result<(), Failure> {
    let report = minor_arc_domination_report(b, ell).map_err(|e| match e {
        AsymError::ModulusTooSmall(_) => Failure::Usage(e.to_string()),
        other => Failure::Check(other.to_string()),
    })?;
    let summary = MinorArcSummary::new(&report);
    with_writer(output, |w| match format {
        Format::Json => write_json(w, &summary),
        Format::Csv => write_arc_csv(w, &summary),
    })
}

#[derive(Serialize)]
struct IneqReport {
    ell: usize,
    modulus: usize,
    scan_ceiling: usize,
    gap_ceiling: usize,
    all_thresholds_found: bool,
    corollaries: Vec<CorollaryScan>,
    conjectures: ConjectureReport,
}

/// The four center-indexed predicate scans plus the pairwise gap scan for
/// one nonnegative sequence.
fn sequence_scans(
    s: &IntegerSequenceWindow,
    max_n: usize,
    gap_hi: usize,
    base: &BTreeMap<String, String>,
) -> Result<Vec<CorollaryScan>, Failure> {
    let with = |key: &str, value: String| {
        let mut m = base.clone();
        m.insert(key.to_owned(), value);
        m
    };
    let scans = vec![
        corollary_scan(
            "turan-d2",
            s.label(),
            with("d", "2".to_owned()),
            |n| jensen_hyperbolicity_check(s, 2, n),
            2,
            max_n,
        ),
        corollary_scan(
            "turan-d3",
            s.label(),
            with("d", "3".to_owned()),
            |n| jensen_hyperbolicity_check(s, 3, n),
            1,
            max_n,
        ),
        corollary_scan(
            "laguerre-m1",
            s.label(),
            with("m", "1".to_owned()),
            |n| discrete_laguerre_check(s, 1, n),
            1,
            max_n,
        ),
        corollary_scan(
            "laguerre-m2",
            s.label(),
            with("m", "2".to_owned()),
            |n| discrete_laguerre_check(s, 2, n),
            1,
            max_n,
        ),
        gap_corollary_scan(s, gap_hi, base.clone()),
    ];
    scans
        .into_iter()
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::Check(e.to_string()))
}

fn run_ineq(
    ell: usize,
    b: usize,
    max_n: usize,
    residue: Option<usize>,
    format: Format,
    output: &Option<PathBuf>,
) -> Result<(), Failure> {
    // window depth: a center-n check looks at most 3 past n, pairs double it
    let window_hi = max_n + 3;
    let gap_hi = window_hi / 2;
    let series = han_series(ell, window_hi).map_err(|e| Failure::Usage(e.to_string()))?;

    let mut corollaries = Vec::new();
    let p_window = IntegerSequenceWindow::partitions(window_hi);
    corollaries.extend(sequence_scans(
        &p_window,
        max_n,
        gap_hi,
        &BTreeMap::new(),
    )?);

    if b >= 2 {
        for a in class_list(b, residue)? {
            let values = residue_filter_exact(&series, b, a)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let label = format!("h_{ell}({a},{b};n)");
            let window = IntegerSequenceWindow::new(label, 0, values)
                .map_err(|e| Failure::Check(e.to_string()))?;
            let mut base = BTreeMap::new();
            base.insert("ell".to_owned(), ell.to_string());
            base.insert("mod".to_owned(), b.to_string());
            base.insert("residue".to_owned(), a.to_string());
            corollaries.extend(sequence_scans(&window, max_n, gap_hi, &base)?);
        }
    } else if residue.is_some() {
        return Err(Failure::Usage(
            "a residue class needs a modulus of at least 2".to_owned(),
        ));
    }

    let conjectures = zeta_conjecture_report(&series, max_n.min(40))
        .map_err(|e| Failure::Check(e.to_string()))?;
    let report = IneqReport {
        ell,
        modulus: b,
        scan_ceiling: max_n,
        gap_ceiling: gap_hi,
        all_thresholds_found: corollaries.iter().all(|c| c.threshold.is_some()),
        corollaries,
        conjectures,
    };

    with_writer(output, |w| match format {
        Format::Json => write_json(w, &report),
        Format::Csv => write_corollary_csv(w, &report.corollaries),
    })?;
    if report.all_thresholds_found {
        Ok(())
    } else {
        let missing: Vec<String> = report
            .corollaries
            .iter()
            .filter(|c| c.threshold.is_none())
            .map(|c| format!("{} on {}", c.predicate, c.sequence))
            .collect();
        Err(Failure::Check(format!(
            "no threshold within the ceiling for: {}",
            missing.join(", ")
        )))
    }
}

#[derive(Serialize)]
struct OracleRow {
    n: usize,
    a: usize,
    /// partitions of n whose ℓ-hook count is ≡ a (mod b), as a decimal string
    partitions: String,
    /// total hook cells of length ≡ a (mod b) over all partitions of n
    hook_cells: String,
}

fn run_oracle(
    ell: usize,
    b: usize,
    max_n: usize,
    residue: Option<usize>,
    format: Format,
    output: &Option<PathBuf>,
) -> Result<(), Failure> {
    let classes = class_list(b, residue)?;
    let tables: Vec<(Vec<BigInt>, Vec<BigInt>)> = (0..=max_n)
        .into_par_iter()
        .map(|n| {
            let counts = residue_count_table(ell, b, n)?;
            let totals = hook_length_residue_totals(b, n)?;
            Ok((counts, totals))
        })
        .collect::<Result<_, _>>()
        .map_err(|e: hooklens::partition::OracleError| Failure::Usage(e.to_string()))?;
    let rows: Vec<OracleRow> = tables
        .iter()
        .enumerate()
        .flat_map(|(n, (counts, totals))| {
            classes.iter().map(move |&a| OracleRow {
                n,
                a,
                partitions: counts[a].to_string(),
                hook_cells: totals[a].to_string(),
            })
        })
        .collect();
    with_writer(output, |w| match format {
        Format::Json => write_json(w, &rows),
        Format::Csv => {
            writeln!(w, "n,a,partitions,hook_cells")?;
            for r in &rows {
                writeln!(w, "{},{},{},{}", r.n, r.a, r.partitions, r.hook_cells)?;
            }
            Ok(())
        }
    })
}
