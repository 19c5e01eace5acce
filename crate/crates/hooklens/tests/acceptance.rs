//! The acceptance gate: one test per advertised guarantee, each at its
//! stated tolerance. Exact claims are checked with zero tolerance against
//! enumeration oracles; analytic claims carry the tolerance in the assert.

use std::f64::consts::PI;
use std::io::Write;
use std::sync::LazyLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use rayon::prelude::*;

use hooklens::asym::{
    dilogarithm, em_constant_term_check, em_decay_order_checks, hardy_ramanujan_checks,
    hook_arc_integral, modular_grid_check, ArcMethod, EquidistTable, IdentityCheck,
};
use hooklens::ineq::{
    discrete_laguerre_check, jensen_hyperbolicity_check, multiplicative_gap_threshold,
    threshold_scan, IntegerSequenceWindow,
};
use hooklens::partition::{
    hook_count_poly_oracle, residue_count_oracle, residue_count_table, PartitionNumbers,
};
use hooklens::report::{write_conjecture_csv, zeta_conjecture_report};
use hooklens::series::{han_series, residue_filter_exact, HookSeries};

/// Deep enough that every windowed check below can center on n = 500.
const DEEP_ORDER: usize = 503;

static DEEP: LazyLock<Vec<HookSeries>> = LazyLock::new(|| {
    (1..=3)
        .map(|ell| han_series(ell, DEEP_ORDER).expect("series within budget"))
        .collect()
});

fn deep(ell: usize) -> &'static HookSeries {
    &DEEP[ell - 1]
}

fn assert_all_pass(checks: &[IdentityCheck]) {
    for c in checks {
        assert!(
            c.pass,
            "{}: measured {:e} against bound {:e}",
            c.name, c.measured, c.bound
        );
    }
}

#[test]
fn criterion_1_han_identity_exact() {
    let mismatches: Vec<String> = (1..=5usize)
        .into_par_iter()
        .flat_map(|ell| {
            let series = han_series(ell, 40).expect("series within budget");
            (0..=40usize)
                .into_par_iter()
                .filter_map(move |n| {
                    (*series.coeff(n) != hook_count_poly_oracle(ell, n))
                        .then(|| format!("ell={ell} n={n}"))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    assert!(mismatches.is_empty(), "coefficient mismatches at {mismatches:?}");
}

#[test]
fn criterion_2_filter_identity_exact() {
    let p = PartitionNumbers::new().slice(400).to_vec();
    let cases: Vec<(usize, usize)> = (1..=3)
        .flat_map(|ell| (2..=6).map(move |b| (ell, b)))
        .collect();

    cases.par_iter().for_each(|&(ell, b)| {
        let classes: Vec<Vec<BigInt>> = (0..b)
            .map(|a| residue_filter_exact(deep(ell), b, a).expect("filter"))
            .collect();

        for n in 0..=40 {
            let counted = residue_count_table(ell, b, n).expect("oracle");
            for a in 0..b {
                assert_eq!(classes[a][n], counted[a], "ell={ell} b={b} a={a} n={n}");
            }
        }
        // The scalar oracle entry point, exercised by name at one point.
        let a = b - 1;
        assert_eq!(
            classes[a][23],
            residue_count_oracle(ell, b, a, 23).expect("oracle"),
            "ell={ell} b={b} a={a} n=23"
        );

        // The classes must tile p(n) exactly, far past the enumeration range.
        for (n, p_n) in p.iter().enumerate() {
            let total: BigInt = (0..b).map(|a| &classes[a][n]).sum();
            assert_eq!(total, *p_n, "completeness ell={ell} b={b} n={n}");
        }
    });
}

#[test]
fn criterion_3_equidistribution_rate() {
    let cases: Vec<(usize, usize)> = (1..=3)
        .flat_map(|ell| [2usize, 3, 5].into_iter().map(move |b| (ell, b)))
        .collect();

    cases.par_iter().for_each(|&(ell, b)| {
        let table = EquidistTable::from_series(deep(ell), b, 400).expect("table");
        let early = table.median_max_error(50, 100).expect("errors in window");
        let late = table.median_max_error(350, 400).expect("errors in window");
        assert!(
            late < early,
            "ell={ell} b={b}: median error {late:e} on [350,400] is not below {early:e} on [50,100]"
        );
        let slope = table.upper_half_slope().expect("nonzero errors");
        assert!(slope < 0.0, "ell={ell} b={b}: log-log slope {slope} is not negative");
        eprintln!("criterion 3: ell={ell} b={b} medians {early:.3e} -> {late:.3e}, slope {slope:.3}");
    });
}

#[test]
fn criterion_4_hardy_ramanujan_via_wright() {
    assert_all_pass(&hardy_ramanujan_checks().expect("wright expansion"));
}

#[test]
fn criterion_5_modular_transformation() {
    let check = modular_grid_check(1e-10).expect("grid evaluation");
    assert_all_pass(std::slice::from_ref(&check));
    eprintln!("criterion 5: worst relative difference {:.3e}", check.measured);
}

#[test]
fn criterion_6_euler_maclaurin_order() {
    assert_all_pass(&em_decay_order_checks(4).expect("exact remainders"));
    assert_all_pass(std::slice::from_ref(
        &em_constant_term_check(1e-10).expect("expansion"),
    ));
}

#[test]
fn criterion_7_arc_negativity() {
    let mut cases = Vec::new();
    for b in 2usize..=24 {
        for k in 1..b {
            for ell in 1u32..=6 {
                cases.push((b, k, ell));
            }
        }
    }

    let disagreements: Vec<f64> = cases
        .par_iter()
        .map(|&(b, k, ell)| {
            // Construct -1 exactly so the self-conjugate point takes the
            // principal-value path instead of grazing the branch cut.
            let xi = if 2 * k == b {
                Complex64::new(-1.0, 0.0)
            } else {
                Complex64::from_polar(1.0, 2.0 * PI * k as f64 / b as f64)
            };
            let arc = hook_arc_integral(xi, ell).expect("integrable twist");
            assert!(
                arc.value.re < 0.0,
                "nonnegative real part at b={b} k={k} ell={ell}: {}",
                arc.value
            );
            if arc.method == ArcMethod::Quadrature {
                let closed =
                    -dilogarithm(Complex64::new(1.0, 0.0) - xi).expect("off the cut") / ell as f64;
                (arc.value - closed).norm()
            } else {
                0.0
            }
        })
        .collect();

    let worst = disagreements.into_iter().fold(0.0f64, f64::max);
    assert!(worst <= 1e-10, "quadrature/dilogarithm disagreement {worst:e}");
    eprintln!("criterion 7: worst cross-method disagreement {worst:.3e}");

    let anchor = hook_arc_integral(Complex64::new(-1.0, 0.0), 1).expect("principal value");
    let target = -PI * PI / 4.0;
    assert!(
        (anchor.value.re - target).abs() <= 1e-8,
        "xi=-1, ell=1: {} is not within 1e-8 of {target}",
        anchor.value.re
    );
}

const PREDICATES: [&str; 4] = ["turan-d2", "turan-d3", "laguerre-m1", "laguerre-m2"];

fn scan_quartet(s: &IntegerSequenceWindow, hi: usize) -> [Option<usize>; 4] {
    [
        threshold_scan(|n| jensen_hyperbolicity_check(s, 2, n), 2, hi).expect("scan"),
        threshold_scan(|n| jensen_hyperbolicity_check(s, 3, n), 1, hi).expect("scan"),
        threshold_scan(|n| discrete_laguerre_check(s, 1, n), 1, hi).expect("scan"),
        threshold_scan(|n| discrete_laguerre_check(s, 2, n), 1, hi).expect("scan"),
    ]
}

#[test]
fn criterion_8_corollary_thresholds() {
    let mut sequences = vec![IntegerSequenceWindow::partitions(DEEP_ORDER)];
    let mut classes = vec![None];
    for ell in 1..=3usize {
        for b in 2..=5usize {
            for a in 0..b {
                let values = residue_filter_exact(deep(ell), b, a).expect("filter");
                sequences.push(
                    IntegerSequenceWindow::new(format!("h_{ell}({a},{b};n)"), 0, values)
                        .expect("hook counts are nonnegative"),
                );
                classes.push(Some((ell, b, a)));
            }
        }
    }

    let thresholds: Vec<([Option<usize>; 4], Option<usize>)> = sequences
        .par_iter()
        .map(|s| {
            let quartet = scan_quartet(s, 500);
            let gap = multiplicative_gap_threshold(s, 250).expect("scan");
            (quartet, gap)
        })
        .collect();

    // The classical pin, re-verified site by site rather than via the scan.
    assert_eq!(thresholds[0].0[0], Some(26), "p(n) log-concavity threshold");
    let p = &sequences[0];
    for n in 26..=500 {
        assert!(
            jensen_hyperbolicity_check(p, 2, n).expect("in window"),
            "p(n) log-concavity broke at n={n}"
        );
    }

    let mut missing: Vec<(usize, usize)> = Vec::new();
    for (i, (quartet, gap)) in thresholds.iter().enumerate() {
        assert!(
            gap.is_some(),
            "{}: no multiplicative-gap threshold within 250",
            sequences[i].label()
        );
        missing.extend(
            quartet
                .iter()
                .enumerate()
                .filter(|(_, found)| found.is_none())
                .map(|(j, _)| (i, j)),
        );
    }
    if missing.is_empty() {
        return;
    }

    // Honest failure: rerun every missing scan with the ceiling doubled so
    // the failure record states where the threshold actually sits.
    let verdicts: Vec<String> = missing
        .par_iter()
        .map(|&(i, j)| {
            let (ell, b, a) = classes[i].expect("p(n) thresholds all exist");
            let series = han_series(ell, 1003).expect("series within budget");
            let values = residue_filter_exact(&series, b, a).expect("filter");
            let s = IntegerSequenceWindow::new(sequences[i].label().to_owned(), 0, values)
                .expect("hook counts are nonnegative");
            match scan_quartet(&s, 1000)[j] {
                Some(n0) => format!(
                    "  {} on {}: none within 500, a deeper scan places it at {n0}",
                    PREDICATES[j],
                    s.label()
                ),
                None => format!(
                    "  {} on {}: none within 500, and still none within 1000",
                    PREDICATES[j],
                    s.label()
                ),
            }
        })
        .collect();
    panic!(
        "{} of {} threshold scans found no threshold within the stated ceiling of 500:\n{}",
        missing.len(),
        4 * sequences.len(),
        verdicts.join("\n")
    );
}

#[test]
fn criterion_9_conjecture_reports() {
    let shallow: Vec<HookSeries> = (4..=5)
        .map(|ell| han_series(ell, 40).expect("series within budget"))
        .collect();

    for ell in 1..=5usize {
        let series = if ell <= 3 { deep(ell) } else { &shallow[ell - 4] };
        let report = zeta_conjecture_report(series, 40).expect("exact verdicts");
        assert_eq!(report.ell, ell);
        assert_eq!(report.rows.len(), 41, "ell={ell}: report is incomplete");

        let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR"))
            .join(format!("zeta_conjecture_l{ell}.csv"));
        let mut out = std::io::BufWriter::new(std::fs::File::create(&path).expect("report file"));
        write_conjecture_csv(&mut out, &report).expect("emit report");
        out.flush().expect("emit report");

        // Verdict content is recorded, not asserted.
        eprintln!(
            "criterion 9: ell={ell} root failures {:?}, unimodality failures {:?} -> {}",
            report.root_failures,
            report.unimodality_failures,
            path.display()
        );
    }
}
