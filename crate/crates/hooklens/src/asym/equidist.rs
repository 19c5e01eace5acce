//! Empirical equidistribution of ℓ-hook counts over residue classes.
//!
//! For each n and each class a (mod b) the table compares the exact filtered
//! count h_ℓ(a,b;n) against the conjectured main term p(n)/b. The relative
//! error |b·h/p(n) - 1| collapsing as n grows — uniformly in a — is the
//! numerical face of the equidistribution statement, and the summaries here
//! (per-n worst error, window medians, a log-log decay slope) are what the
//! acceptance checks and the CLI report consume.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::partition::PartitionNumbers;
use crate::series::{han_series, residue_filter_exact, HookSeries, SeriesError};

/// One (n, a) cell: the exact count next to the equidistribution main term.
#[derive(Debug, Clone, PartialEq)]
pub struct EquidistRow {
    pub n: usize,
    pub a: usize,
    pub exact: BigInt,
    pub main_term: f64,
    pub relative_error: f64,
}

/// Full error table for one (ℓ, b), rows ordered by n then a, n ≥ 1.
#[derive(Debug, Clone)]
pub struct EquidistTable {
    ell: usize,
    modulus: usize,
    rows: Vec<EquidistRow>,
    max_error_by_n: Vec<(usize, f64)>,
    upper_half_slope: Option<f64>,
}

impl EquidistTable {
    /// Builds the table from an existing series; `series.order()` must cover
    /// `n_max`. `b = 1` is the degenerate full count (all errors exactly 0).
    pub fn from_series(series: &HookSeries, b: usize, n_max: usize) -> Result<Self, SeriesError> {
        assert!(
            n_max >= 1 && n_max <= series.order(),
            "table range 1..={n_max} outside the series order {}",
            series.order()
        );
        if b == 0 {
            return Err(SeriesError::ModulusTooSmall(0));
        }
        let columns: Vec<Vec<BigInt>> = if b == 1 {
            vec![series.coeffs().iter().map(|c| c.eval_one()).collect()]
        } else {
            (0..b)
                .map(|a| residue_filter_exact(series, b, a))
                .collect::<Result<_, _>>()?
        };

        let mut partitions = PartitionNumbers::new();
        let mut rows = Vec::with_capacity(n_max * b);
        let mut max_error_by_n = Vec::with_capacity(n_max);
        for n in 1..=n_max {
            let p = partitions.get(n);
            let p_f = p.to_f64().expect("p(n) within f64 range");
            let main_term = p_f / b as f64;
            let mut worst = 0.0f64;
            for (a, column) in columns.iter().enumerate() {
                let exact = column[n].clone();
                let relative_error = BigRational::new(&exact * b - &p, p.clone())
                    .abs()
                    .to_f64()
                    .expect("relative error within f64 range");
                worst = worst.max(relative_error);
                rows.push(EquidistRow {
                    n,
                    a,
                    exact,
                    main_term,
                    relative_error,
                });
            }
            max_error_by_n.push((n, worst));
        }

        let upper_half_slope = log_log_slope(&max_error_by_n[(n_max / 2).saturating_sub(1)..]);
        Ok(EquidistTable {
            ell: series.ell(),
            modulus: b,
            rows,
            max_error_by_n,
            upper_half_slope,
        })
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn rows(&self) -> &[EquidistRow] {
        &self.rows
    }

    /// (n, max_a relative error) for every n in the table.
    pub fn max_error_by_n(&self) -> &[(usize, f64)] {
        &self.max_error_by_n
    }

    /// Least-squares slope of log(max_a error) against log n over the upper
    /// half of the range; negative values certify the observed decay. `None`
    /// when fewer than two nonzero errors are available (e.g. b = 1).
    pub fn upper_half_slope(&self) -> Option<f64> {
        self.upper_half_slope
    }

    /// Median of the per-n worst errors over n ∈ [lo, hi].
    pub fn median_max_error(&self, lo: usize, hi: usize) -> Option<f64> {
        let mut window: Vec<f64> = self
            .max_error_by_n
            .iter()
            .filter(|(n, _)| (lo..=hi).contains(n))
            .map(|&(_, e)| e)
            .collect();
        if window.is_empty() {
            return None;
        }
        window.sort_by(|x, y| x.partial_cmp(y).expect("errors are finite"));
        let mid = window.len() / 2;
        Some(if window.len() % 2 == 1 {
            window[mid]
        } else {
            0.5 * (window[mid - 1] + window[mid])
        })
    }
}

/// Σ_{m≡a(b)} h_ℓ(m,n) versus p(n)/b for 1 ≤ n ≤ n_max, all a.
pub fn equidistribution_error_table(
    ell: usize,
    b: usize,
    n_max: usize,
) -> Result<EquidistTable, SeriesError> {
    let series = han_series(ell, n_max)?;
    EquidistTable::from_series(&series, b, n_max)
}

/// Slope of ln(err) vs ln(n); points with zero error carry no log-space
/// information and are skipped.
fn log_log_slope(points: &[(usize, f64)]) -> Option<f64> {
    let logs: Vec<(f64, f64)> = points
        .iter()
        .filter(|&&(_, e)| e > 0.0)
        .map(|&(n, e)| ((n as f64).ln(), e.ln()))
        .collect();
    if logs.len() < 2 {
        return None;
    }
    let count = logs.len() as f64;
    let mean_x = logs.iter().map(|(x, _)| x).sum::<f64>() / count;
    let mean_y = logs.iter().map(|(_, y)| y).sum::<f64>() / count;
    let mut covariance = 0.0;
    let mut variance = 0.0;
    for (x, y) in logs {
        covariance += (x - mean_x) * (y - mean_y);
        variance += (x - mean_x) * (x - mean_x);
    }
    (variance > 0.0).then(|| covariance / variance)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_row_example_splits_one_and_two() {
        let table = equidistribution_error_table(1, 2, 3).unwrap();
        let at_three: Vec<&EquidistRow> =
            table.rows().iter().filter(|r| r.n == 3).collect();
        assert_eq!(at_three.len(), 2);
        assert_eq!(at_three[0].exact, BigInt::from(1));
        assert_eq!(at_three[1].exact, BigInt::from(2));
        for row in at_three {
            assert!((row.main_term - 1.5).abs() < 1e-15);
            assert!((row.relative_error - 1.0 / 3.0).abs() < 1e-15);
        }
    }

    #[test]
    fn degenerate_modulus_has_no_error_at_all() {
        let table = equidistribution_error_table(1, 1, 30).unwrap();
        assert!(table.rows().iter().all(|r| r.relative_error == 0.0));
        assert_eq!(table.upper_half_slope(), None);
        assert_eq!(table.median_max_error(10, 20), Some(0.0));
    }

    #[test]
    fn exact_column_agrees_with_the_enumeration_oracle() {
        use crate::partition::residue_count_oracle;
        let table = equidistribution_error_table(2, 3, 12).unwrap();
        for row in table.rows() {
            assert_eq!(
                row.exact,
                residue_count_oracle(2, 3, row.a, row.n).unwrap(),
                "n = {}, a = {}",
                row.n,
                row.a
            );
        }
    }

    #[test]
    fn errors_decay_along_the_table() {
        let table = equidistribution_error_table(2, 3, 300).unwrap();
        let early = table.max_error_by_n()[49].1; // n = 50
        let late = table.max_error_by_n()[299].1; // n = 300
        assert!(late < early, "errors did not shrink: {early} vs {late}");
        let slope = table.upper_half_slope().expect("nonzero errors");
        assert!(slope < 0.0, "slope {slope}");
        let head = table.median_max_error(10, 60).unwrap();
        let tail = table.median_max_error(250, 300).unwrap();
        assert!(tail < head);
    }

    #[test]
    fn zero_modulus_is_rejected_and_short_tables_have_no_slope() {
        assert!(matches!(
            equidistribution_error_table(1, 0, 10),
            Err(SeriesError::ModulusTooSmall(0))
        ));
        // two points, both equidistributed exactly -> no usable log data
        let table = equidistribution_error_table(1, 1, 2).unwrap();
        assert_eq!(table.upper_half_slope(), None);
    }
}
