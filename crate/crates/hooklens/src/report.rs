//! Report shapes shared by the command-line driver and the test suite.
//!
//! Everything here is deterministic formatting over already-computed values:
//! integers print in decimal, floats through the shortest round-trip form, so
//! identical inputs yield identical bytes regardless of thread count.

use std::collections::BTreeMap;
use std::io::{self, Write};

use rayon::prelude::*;
use serde::Serialize;

use crate::asym::{ArcMethod, EquidistTable, MinorArcReport};
use crate::ineq::{
    multiplicative_gap_check, multiplicative_gap_threshold, root_negativity_verdict,
    unimodality_check, IneqError, IntegerSequenceWindow,
};
use crate::series::HookSeries;

/// Pretty-printed JSON with a trailing newline.
pub fn write_json<W: Write, T: Serialize>(mut out: W, value: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)
}

/// The equidistribution table as `n,a,exact,main_term,rel_error` rows.
pub fn write_equidist_csv<W: Write>(mut out: W, table: &EquidistTable) -> io::Result<()> {
    writeln!(out, "n,a,exact,main_term,rel_error")?;
    for row in table.rows() {
        writeln!(
            out,
            "{},{},{},{},{}",
            row.n, row.a, row.exact, row.main_term, row.relative_error
        )?;
    }
    Ok(())
}

/// JSON companion of the CSV table: the fitted slope plus the two median
/// windows used to judge the error decay, and the run's analytic tolerance.
#[derive(Debug, Clone, Serialize)]
pub struct EquidistSummary {
    pub ell: usize,
    pub modulus: usize,
    pub n_max: usize,
    pub tolerance: f64,
    pub upper_half_slope: Option<f64>,
    pub head_window: [usize; 2],
    pub tail_window: [usize; 2],
    pub head_median: Option<f64>,
    pub tail_median: Option<f64>,
}

impl EquidistSummary {
    pub fn new(table: &EquidistTable, tolerance: f64) -> Self {
        let n_max = table.rows().last().map_or(0, |r| r.n);
        // the standard windows once they are disjoint, halves otherwise
        let (head_window, tail_window) = if n_max > 150 {
            ([50, 100], [n_max - 50, n_max])
        } else {
            ([1, n_max / 2], [n_max / 2 + 1, n_max])
        };
        EquidistSummary {
            ell: table.ell(),
            modulus: table.modulus(),
            n_max,
            tolerance,
            upper_half_slope: table.upper_half_slope(),
            head_window,
            tail_window,
            head_median: table.median_max_error(head_window[0], head_window[1]),
            tail_median: table.median_max_error(tail_window[0], tail_window[1]),
        }
    }
}

pub fn arc_method_name(method: ArcMethod) -> &'static str {
    match method {
        ArcMethod::Quadrature => "quadrature",
        ArcMethod::Dilogarithm => "dilogarithm",
        ArcMethod::PrincipalValue => "principal-value",
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ArcRow {
    /// Twist index: ξ = ζ_b^k.
    pub k: usize,
    pub xi_re: f64,
    pub xi_im: f64,
    pub re: f64,
    pub im: f64,
    pub method: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct MinorArcSummary {
    pub modulus: usize,
    pub ell: u32,
    pub margin: f64,
    pub negative_real_parts: usize,
    pub entries: Vec<ArcRow>,
}

impl MinorArcSummary {
    pub fn new(report: &MinorArcReport) -> Self {
        let entries: Vec<ArcRow> = report
            .entries
            .iter()
            .enumerate()
            .map(|(i, arc)| ArcRow {
                k: i + 1,
                xi_re: arc.xi.re,
                xi_im: arc.xi.im,
                re: arc.value.re,
                im: arc.value.im,
                method: arc_method_name(arc.method),
            })
            .collect();
        MinorArcSummary {
            modulus: report.modulus,
            ell: report.ell,
            margin: report.margin,
            negative_real_parts: entries.iter().filter(|e| e.re < 0.0).count(),
            entries,
        }
    }
}

pub fn write_arc_csv<W: Write>(mut out: W, summary: &MinorArcSummary) -> io::Result<()> {
    writeln!(out, "k,xi_re,xi_im,re,im,method")?;
    for e in &summary.entries {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            e.k, e.xi_re, e.xi_im, e.re, e.im, e.method
        )?;
    }
    Ok(())
}

/// Reported failures are capped; thresholds are exact regardless.
pub const FIRST_FAILURE_CAP: usize = 8;

/// One corollary scan: the predicate, where it was scanned, the minimal N₀
/// from which it holds through the ceiling (if any), and the first indices
/// where it fails.
#[derive(Debug, Clone, Serialize)]
pub struct CorollaryScan {
    pub predicate: String,
    pub sequence: String,
    pub parameters: BTreeMap<String, String>,
    pub scan_lo: usize,
    pub scan_ceiling: usize,
    pub threshold: Option<usize>,
    pub first_failures: Vec<usize>,
}

/// Runs the predicate over [lo, hi] once and reports threshold plus failure
/// sites. The threshold agrees with [`crate::ineq::threshold_scan`]: smallest
/// N₀ with the predicate true on [N₀, hi], none if it fails at hi itself.
pub fn corollary_scan<F>(
    predicate: &str,
    sequence: &str,
    parameters: BTreeMap<String, String>,
    check: F,
    lo: usize,
    hi: usize,
) -> Result<CorollaryScan, IneqError>
where
    F: Fn(usize) -> Result<bool, IneqError> + Sync,
{
    assert!(lo <= hi, "empty scan range");
    let verdicts: Vec<bool> = (lo..=hi)
        .into_par_iter()
        .map(&check)
        .collect::<Result<_, _>>()?;
    let threshold = match verdicts.iter().rposition(|&ok| !ok) {
        None => Some(lo),
        Some(i) if lo + i == hi => None,
        Some(i) => Some(lo + i + 1),
    };
    let first_failures = verdicts
        .iter()
        .enumerate()
        .filter(|&(_, &ok)| !ok)
        .take(FIRST_FAILURE_CAP)
        .map(|(i, _)| lo + i)
        .collect();
    Ok(CorollaryScan {
        predicate: predicate.to_owned(),
        sequence: sequence.to_owned(),
        parameters,
        scan_lo: lo,
        scan_ceiling: hi,
        threshold,
        first_failures,
    })
}

/// Multiplicative-gap scan as a corollary report. Threshold semantics match
/// [`crate::ineq::multiplicative_gap_threshold`]; a failure site is an n₁
/// that loses against some n₂ ∈ [n₁, hi].
pub fn gap_corollary_scan(
    s: &IntegerSequenceWindow,
    hi: usize,
    parameters: BTreeMap<String, String>,
) -> Result<CorollaryScan, IneqError> {
    let threshold = multiplicative_gap_threshold(s, hi)?;
    let mut first_failures = Vec::new();
    'sites: for n1 in 1..=hi {
        for n2 in n1..=hi {
            if !multiplicative_gap_check(s, n1, n2)? {
                first_failures.push(n1);
                if first_failures.len() == FIRST_FAILURE_CAP {
                    break 'sites;
                }
                break;
            }
        }
    }
    Ok(CorollaryScan {
        predicate: "multiplicative-gap".to_owned(),
        sequence: s.label().to_owned(),
        parameters,
        scan_lo: 1,
        scan_ceiling: hi,
        threshold,
        first_failures,
    })
}

pub fn write_corollary_csv<W: Write>(mut out: W, scans: &[CorollaryScan]) -> io::Result<()> {
    writeln!(
        out,
        "predicate,sequence,parameters,scan_lo,scan_ceiling,threshold,first_failures"
    )?;
    for s in scans {
        let params: Vec<String> = s
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let failures: Vec<String> = s.first_failures.iter().map(|n| n.to_string()).collect();
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            s.predicate,
            s.sequence,
            params.join(";"),
            s.scan_lo,
            s.scan_ceiling,
            s.threshold.map_or(String::new(), |t| t.to_string()),
            failures.join(";")
        )?;
    }
    Ok(())
}

/// Root-location and unimodality verdicts for one coefficient polynomial.
#[derive(Debug, Clone, Serialize)]
pub struct ConjectureRow {
    pub n: usize,
    pub nonpositive_roots: bool,
    pub strictly_negative_roots: bool,
    pub zero_multiplicity: usize,
    pub unimodal: bool,
    pub peak: Option<usize>,
}

/// Observed verdicts over n ≤ max_n; failures are listed, never asserted.
#[derive(Debug, Clone, Serialize)]
pub struct ConjectureReport {
    pub ell: usize,
    pub max_n: usize,
    pub rows: Vec<ConjectureRow>,
    pub root_failures: Vec<usize>,
    pub unimodality_failures: Vec<usize>,
}

pub fn zeta_conjecture_report(
    series: &HookSeries,
    max_n: usize,
) -> Result<ConjectureReport, IneqError> {
    assert!(max_n <= series.order(), "series truncated below max_n");
    let rows = (0..=max_n)
        .into_par_iter()
        .map(|n| {
            let p = series.coeff(n);
            let verdict = root_negativity_verdict(p)?;
            let (unimodal, peak) = unimodality_check(p)?;
            Ok(ConjectureRow {
                n,
                nonpositive_roots: verdict.nonpositive,
                strictly_negative_roots: verdict.strictly_negative,
                zero_multiplicity: verdict.zero_multiplicity,
                unimodal,
                peak,
            })
        })
        .collect::<Result<Vec<_>, IneqError>>()?;
    let root_failures = rows
        .iter()
        .filter(|r| !r.nonpositive_roots)
        .map(|r| r.n)
        .collect();
    let unimodality_failures = rows.iter().filter(|r| !r.unimodal).map(|r| r.n).collect();
    Ok(ConjectureReport {
        ell: series.ell(),
        max_n,
        rows,
        root_failures,
        unimodality_failures,
    })
}

pub fn write_conjecture_csv<W: Write>(mut out: W, report: &ConjectureReport) -> io::Result<()> {
    writeln!(
        out,
        "n,nonpositive_roots,strictly_negative_roots,zero_multiplicity,unimodal,peak"
    )?;
    for r in &report.rows {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            r.n,
            r.nonpositive_roots,
            r.strictly_negative_roots,
            r.zero_multiplicity,
            r.unimodal,
            r.peak.map_or(String::new(), |p| p.to_string())
        )?;
    }
    Ok(())
}
