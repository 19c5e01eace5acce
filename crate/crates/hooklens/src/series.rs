//! Exact truncated generating series for hook counts, with residue filters.
//!
//! The coefficient table built here represents
//!
//! ```text
//! H_ℓ(ζ; q) = Σ_{n≥0} ( Σ_m h_ℓ(m,n) ζ^m ) q^n
//!           = ∏_{k≥1} (1 + (ζ-1) q^{ℓk})^ℓ / (1 - q^k),
//! ```
//!
//! where h_ℓ(m,n) is the number of partitions of n with exactly m cells of
//! hook length ℓ — the same distribution [`crate::partition::hook_count_poly_oracle`]
//! tallies by enumeration. Setting ζ = 1 collapses every factor's numerator
//! to 1 and leaves the ordinary partition generating function.
//!
//! All arithmetic is exact (`ZetaPoly` coefficients over `BigInt`), the
//! product is truncated at q^N eagerly, and factors whose lowest q-power
//! already exceeds N are skipped: the table is the mathematical truncation,
//! not an approximation. Construction is sequential and allocation-order
//! independent, so repeated builds are bit-identical regardless of how many
//! threads the surrounding program uses.

use std::io::{self, BufRead, Write};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::cnum::root_of_unity;
use crate::zeta::ZetaPoly;

/// Entries of the root-of-unity filter must be real up to this relative
/// residual; anything larger is reported as an error rather than rounded.
pub const COMPLEX_RESIDUAL_LIMIT: f64 = 1e-6;

/// Default ceiling on the estimated size of a coefficient table.
pub const DEFAULT_MEMORY_BUDGET_BYTES: u64 = 1 << 30;

#[derive(Debug, Error)]
pub enum SeriesError {
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(usize),
    #[error("residue {residue} is not a class modulo {modulus}")]
    ResidueOutOfRange { residue: usize, modulus: usize },
    #[error(
        "order {order} at ell={ell} needs an estimated {estimate} bytes, \
         exceeding the {budget}-byte budget"
    )]
    BudgetExceeded {
        ell: usize,
        order: usize,
        estimate: u64,
        budget: u64,
    },
    #[error(
        "filter output at q^{index} has relative imaginary residual {residual:.3e} \
         (limit {limit:.1e})"
    )]
    ResidualImaginary {
        index: usize,
        residual: f64,
        limit: f64,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Truncated series Σ_{n≤N} c_n(ζ) q^n for one hook length ℓ.
///
/// `coeff(0)` is always the constant polynomial 1 (the empty partition).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HookSeries {
    ell: usize,
    coeffs: Vec<ZetaPoly>,
}

impl HookSeries {
    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Truncation order N; coefficients exist for 0 ≤ n ≤ N.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The ζ-polynomial attached to q^n.
    pub fn coeff(&self, n: usize) -> &ZetaPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[ZetaPoly] {
        &self.coeffs
    }
}

/// Estimated bytes needed for the coefficient table of `han_series(ell, order)`.
///
/// The ζ-degree of the q^n coefficient is at most n/ℓ, and coefficient
/// magnitudes are bounded by p(n), which has about 3.7·√n bits.
pub fn estimated_table_bytes(ell: usize, order: usize) -> u64 {
    let coeff_count: u64 = (0..=order as u64).map(|n| n / ell as u64 + 1).sum();
    let value_bytes = (3.7 * (order as f64).sqrt() / 8.0).ceil() as u64 + 8;
    coeff_count * (std::mem::size_of::<BigInt>() as u64 + value_bytes)
}

/// Builds the exact coefficient table of H_ℓ(ζ; q) up to q^order, under the
/// default memory budget.
///
/// # Panics
///
/// Panics if `ell == 0`.
pub fn han_series(ell: usize, order: usize) -> Result<HookSeries, SeriesError> {
    han_series_with_budget(ell, order, DEFAULT_MEMORY_BUDGET_BYTES)
}

/// As [`han_series`], but rejecting the build if the estimated table size
/// exceeds `budget_bytes`.
pub fn han_series_with_budget(
    ell: usize,
    order: usize,
    budget_bytes: u64,
) -> Result<HookSeries, SeriesError> {
    assert!(ell >= 1, "hook length must be positive");
    let estimate = estimated_table_bytes(ell, order);
    if estimate > budget_bytes {
        return Err(SeriesError::BudgetExceeded {
            ell,
            order,
            estimate,
            budget: budget_bytes,
        });
    }

    // (1 + (ζ-1)x)^ℓ expanded once: term j is C(ℓ,j) (ζ-1)^j.
    let terms = numerator_terms(ell);

    let mut coeffs = vec![ZetaPoly::zero(); order + 1];
    coeffs[0] = ZetaPoly::one();
    for k in 1..=order {
        // 1/(1 - q^k) is the geometric series in q^k: a running prefix sum.
        for i in k..=order {
            let (lo, hi) = coeffs.split_at_mut(i);
            hi[0] += &lo[i - k];
        }
        // (1 + (ζ-1) q^{ℓk})^ℓ, applied highest index first so that the
        // entries read on the right-hand side are still pre-factor values.
        let base = ell * k;
        if base > order {
            continue;
        }
        for i in (base..=order).rev() {
            for (j, term) in terms.iter().enumerate().skip(1) {
                let shift = j * base;
                if shift > i {
                    break;
                }
                let (lo, hi) = coeffs.split_at_mut(i);
                hi[0].add_mul_assign(term, &lo[i - shift]);
            }
        }
    }
    Ok(HookSeries { ell, coeffs })
}

fn numerator_terms(ell: usize) -> Vec<ZetaPoly> {
    let zeta_minus_one = ZetaPoly::from_i64_coeffs(&[-1, 1]);
    (0..=ell)
        .map(|j| {
            let binom = num_integer::binomial(BigInt::from(ell), BigInt::from(j));
            &ZetaPoly::constant(binom) * &zeta_minus_one.pow(j)
        })
        .collect()
}

/// Exact residue-class column of the table: entry n is Σ_{m ≡ a (b)} h_ℓ(m,n),
/// the number of partitions of n whose ℓ-hook count is ≡ a (mod b).
pub fn residue_filter_exact(
    series: &HookSeries,
    b: usize,
    a: usize,
) -> Result<Vec<BigInt>, SeriesError> {
    check_residue(b, a)?;
    Ok(series
        .coeffs
        .iter()
        .map(|c| c.residue_class_sum(b, a))
        .collect())
}

/// The same residue column computed the analytic way: the coefficient table
/// is rebuilt with ζ specialized to each b-th root of unity and the classes
/// are isolated by the finite Fourier sum
///
/// ```text
/// Σ_{m ≡ a (b)} h_ℓ(m,n) = (1/b) Σ_{k=0}^{b-1} ζ_b^{-ak} [q^n] H_ℓ(ζ_b^k; q).
/// ```
///
/// Floating-point arithmetic throughout; any output entry whose imaginary
/// residual exceeds [`COMPLEX_RESIDUAL_LIMIT`] (relative) is an error.
/// `b = 1` is accepted as the degenerate filter that keeps everything.
pub fn residue_filter_complex(
    ell: usize,
    b: usize,
    a: usize,
    order: usize,
) -> Result<Vec<f64>, SeriesError> {
    if b < 1 {
        return Err(SeriesError::ModulusTooSmall(b));
    }
    if a >= b {
        return Err(SeriesError::ResidueOutOfRange {
            residue: a,
            modulus: b,
        });
    }
    let mut acc = vec![Complex64::new(0.0, 0.0); order + 1];
    for k in 0..b {
        let xi = root_of_unity(b, k as i64);
        let specialized = complex_series(ell, xi, order);
        let weight = root_of_unity(b, -((a * k) as i64));
        for (sum, value) in acc.iter_mut().zip(specialized) {
            *sum += weight * value;
        }
    }
    let scale = 1.0 / b as f64;
    let mut out = Vec::with_capacity(order + 1);
    for (index, value) in acc.iter().enumerate() {
        let value = value * scale;
        let residual = value.im.abs() / value.re.abs().max(1.0);
        if residual > COMPLEX_RESIDUAL_LIMIT {
            return Err(SeriesError::ResidualImaginary {
                index,
                residual,
                limit: COMPLEX_RESIDUAL_LIMIT,
            });
        }
        out.push(value.re);
    }
    Ok(out)
}

/// Coefficients of H_ℓ(ξ; q) up to q^order for a fixed complex ξ, by the same
/// factor-by-factor product as the exact build.
fn complex_series(ell: usize, xi: Complex64, order: usize) -> Vec<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    let terms: Vec<Complex64> = (0..=ell)
        .map(|j| {
            let binom = num_integer::binomial(BigInt::from(ell), BigInt::from(j))
                .to_f64()
                .expect("binomial fits in f64");
            binom * (xi - one).powu(j as u32)
        })
        .collect();
    let mut coeffs = vec![Complex64::new(0.0, 0.0); order + 1];
    coeffs[0] = one;
    for k in 1..=order {
        for i in k..=order {
            let prev = coeffs[i - k];
            coeffs[i] += prev;
        }
        let base = ell * k;
        if base > order {
            continue;
        }
        for i in (base..=order).rev() {
            for (j, term) in terms.iter().enumerate().skip(1) {
                let shift = j * base;
                if shift > i {
                    break;
                }
                let low = coeffs[i - shift];
                coeffs[i] += term * low;
            }
        }
    }
    coeffs
}

fn check_residue(b: usize, a: usize) -> Result<(), SeriesError> {
    if b < 2 {
        Err(SeriesError::ModulusTooSmall(b))
    } else if a >= b {
        Err(SeriesError::ResidueOutOfRange {
            residue: a,
            modulus: b,
        })
    } else {
        Ok(())
    }
}

/// Writes the table as tab-separated `n m value` rows (zero entries omitted)
/// under a `# ell=<ℓ> order=<N>` header. This is the interchange format the
/// CLI emits and the readers below accept.
pub fn write_coefficient_table<W: Write>(series: &HookSeries, mut out: W) -> io::Result<()> {
    writeln!(out, "# ell={} order={}", series.ell(), series.order())?;
    for (n, poly) in series.coeffs.iter().enumerate() {
        for (m, value) in poly.coeffs().iter().enumerate() {
            if !value.is_zero() {
                writeln!(out, "{}\t{}\t{}", n, m, value)?;
            }
        }
    }
    Ok(())
}

/// Parses the format written by [`write_coefficient_table`].
pub fn read_coefficient_table<R: BufRead>(input: R) -> Result<HookSeries, SeriesError> {
    let mut lines = input.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| SeriesError::Parse {
        line: 1,
        message: "empty input".into(),
    })?;
    let header = header?;
    let (ell, order) = parse_header(&header).ok_or_else(|| SeriesError::Parse {
        line: 1,
        message: format!("malformed header {:?}", header),
    })?;

    let mut table: Vec<Vec<BigInt>> = vec![Vec::new(); order + 1];
    for (idx, line) in lines {
        let line = line?;
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let mut fields = line.split('\t');
        let (n, m, value) = match (fields.next(), fields.next(), fields.next(), fields.next()) {
            (Some(n), Some(m), Some(v), None) => (n, m, v),
            _ => {
                return Err(SeriesError::Parse {
                    line: line_no,
                    message: "expected three tab-separated fields".into(),
                })
            }
        };
        let parse_err = |what: &str| SeriesError::Parse {
            line: line_no,
            message: format!("bad {what} field"),
        };
        let n: usize = n.parse().map_err(|_| parse_err("n"))?;
        let m: usize = m.parse().map_err(|_| parse_err("m"))?;
        let value: BigInt = value.parse().map_err(|_| parse_err("value"))?;
        if n > order {
            return Err(SeriesError::Parse {
                line: line_no,
                message: format!("n={n} exceeds declared order {order}"),
            });
        }
        let row = &mut table[n];
        if row.len() <= m {
            row.resize(m + 1, BigInt::zero());
        }
        row[m] = value;
    }
    Ok(HookSeries {
        ell,
        coeffs: table.into_iter().map(ZetaPoly::from_coeffs).collect(),
    })
}

fn parse_header(header: &str) -> Option<(usize, usize)> {
    let rest = header.strip_prefix("# ell=")?;
    let (ell, rest) = rest.split_once(" order=")?;
    Some((ell.parse().ok()?, rest.trim().parse().ok()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{hook_count_poly_oracle, residue_count_table, PartitionNumbers};

    #[test]
    fn small_tables_by_hand() {
        let s = han_series(1, 3).unwrap();
        assert_eq!(s.order(), 3);
        assert_eq!(s.coeff(0), &ZetaPoly::one());
        assert_eq!(s.coeff(1), &ZetaPoly::from_i64_coeffs(&[0, 1]));
        assert_eq!(s.coeff(2), &ZetaPoly::from_i64_coeffs(&[0, 2]));
        assert_eq!(s.coeff(3), &ZetaPoly::from_i64_coeffs(&[0, 2, 1]));

        let s = han_series(2, 2).unwrap();
        assert_eq!(s.coeff(0), &ZetaPoly::one());
        assert_eq!(s.coeff(1), &ZetaPoly::one());
        assert_eq!(s.coeff(2), &ZetaPoly::from_i64_coeffs(&[0, 2]));
    }

    #[test]
    fn table_matches_enumeration_oracle() {
        for ell in 1..=3 {
            let series = han_series(ell, 16).unwrap();
            for n in 0..=16 {
                assert_eq!(
                    series.coeff(n),
                    &hook_count_poly_oracle(ell, n),
                    "ell={ell} n={n}"
                );
            }
        }
    }

    #[test]
    fn mass_at_zeta_one_is_partition_count() {
        let mut pn = PartitionNumbers::new();
        for ell in [1, 2, 5] {
            let series = han_series(ell, 60).unwrap();
            for n in 0..=60 {
                assert_eq!(series.coeff(n).eval_one(), pn.get(n), "ell={ell} n={n}");
            }
        }
    }

    #[test]
    fn exact_filter_hand_example() {
        let series = han_series(1, 3).unwrap();
        let odd = residue_filter_exact(&series, 2, 1).unwrap();
        assert_eq!(odd, [0, 1, 2, 2].map(BigInt::from));
        let even = residue_filter_exact(&series, 2, 0).unwrap();
        assert_eq!(even, [1, 0, 0, 1].map(BigInt::from));
    }

    #[test]
    fn exact_filter_classes_sum_to_partition_numbers() {
        let mut pn = PartitionNumbers::new();
        for ell in 1..=2 {
            let series = han_series(ell, 30).unwrap();
            for b in 2..=4 {
                let columns: Vec<_> = (0..b)
                    .map(|a| residue_filter_exact(&series, b, a).unwrap())
                    .collect();
                for n in 0..=30 {
                    let total: BigInt = columns.iter().map(|col| &col[n]).sum();
                    assert_eq!(total, pn.get(n), "ell={ell} b={b} n={n}");
                }
            }
        }
    }

    #[test]
    fn filter_rejects_degenerate_systems() {
        let series = han_series(1, 4).unwrap();
        assert!(matches!(
            residue_filter_exact(&series, 1, 0),
            Err(SeriesError::ModulusTooSmall(1))
        ));
        assert!(matches!(
            residue_filter_exact(&series, 3, 3),
            Err(SeriesError::ResidueOutOfRange { .. })
        ));
    }

    #[test]
    fn complex_filter_agrees_with_exact() {
        for (ell, b) in [(1, 2), (2, 3), (2, 5), (3, 4)] {
            let series = han_series(ell, 40).unwrap();
            for a in 0..b {
                let exact = residue_filter_exact(&series, b, a).unwrap();
                let numeric = residue_filter_complex(ell, b, a, 40).unwrap();
                for n in 0..=40 {
                    let reference = exact[n].to_f64().unwrap();
                    let err = (numeric[n] - reference).abs() / reference.abs().max(1.0);
                    assert!(err < 1e-9, "ell={ell} b={b} a={a} n={n}: {err:.2e}");
                }
            }
        }
    }

    #[test]
    fn complex_filter_matches_oracle_counts() {
        let numeric = residue_filter_complex(2, 3, 0, 8).unwrap();
        for n in 0..=8 {
            let counts = residue_count_table(2, 3, n).unwrap();
            assert_eq!(
                BigInt::from(numeric[n].round() as i64),
                counts[0],
                "n={n}"
            );
        }
    }

    #[test]
    fn complex_filter_accepts_modulus_one() {
        let mut pn = PartitionNumbers::new();
        let all = residue_filter_complex(1, 1, 0, 20).unwrap();
        for n in 0..=20 {
            assert_eq!(BigInt::from(all[n].round() as i64), pn.get(n));
        }
    }

    #[test]
    fn memory_budget_is_enforced() {
        match han_series_with_budget(1, 10_000, 1024) {
            Err(SeriesError::BudgetExceeded { estimate, .. }) => assert!(estimate > 1024),
            other => panic!("expected budget rejection, got {other:?}"),
        }
        // a small table passes under the same tiny budget arithmetic
        assert!(estimated_table_bytes(1, 10) < estimated_table_bytes(1, 1000));
    }

    #[test]
    fn builds_are_deterministic_across_threads() {
        let reference = han_series(2, 50).unwrap();
        let handles: Vec<_> = (0..4)
            .map(|_| std::thread::spawn(|| han_series(2, 50).unwrap()))
            .collect();
        for handle in handles {
            assert_eq!(handle.join().unwrap(), reference);
        }
    }

    #[test]
    fn coefficient_table_round_trips() {
        let series = han_series(2, 12).unwrap();
        let mut buffer = Vec::new();
        write_coefficient_table(&series, &mut buffer).unwrap();
        let text = String::from_utf8(buffer.clone()).unwrap();
        assert!(text.starts_with("# ell=2 order=12\n"));
        assert!(text.lines().nth(1).unwrap().split('\t').count() == 3);
        let parsed = read_coefficient_table(buffer.as_slice()).unwrap();
        assert_eq!(parsed, series);
    }

    #[test]
    fn malformed_tables_are_rejected() {
        let missing_header = "0\t0\t1\n";
        assert!(matches!(
            read_coefficient_table(missing_header.as_bytes()),
            Err(SeriesError::Parse { line: 1, .. })
        ));
        let bad_row = "# ell=1 order=2\n0\t0\n";
        assert!(matches!(
            read_coefficient_table(bad_row.as_bytes()),
            Err(SeriesError::Parse { line: 2, .. })
        ));
        let out_of_range = "# ell=1 order=2\n9\t0\t1\n";
        assert!(matches!(
            read_coefficient_table(out_of_range.as_bytes()),
            Err(SeriesError::Parse { line: 2, .. })
        ));
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(24))]

        #[test]
        fn random_filters_tile_and_match_the_analytic_path(ell in 1usize..=4, b in 2usize..=7) {
            let order = 36;
            let series = han_series(ell, order).unwrap();
            let columns: Vec<_> = (0..b)
                .map(|a| residue_filter_exact(&series, b, a).unwrap())
                .collect();

            let mut pn = PartitionNumbers::new();
            for n in 0..=order {
                let total: BigInt = columns.iter().map(|col| &col[n]).sum();
                proptest::prop_assert_eq!(total, pn.get(n), "ell={} b={} n={}", ell, b, n);
            }

            for (a, column) in columns.iter().enumerate() {
                let numeric = residue_filter_complex(ell, b, a, order).unwrap();
                for n in 0..=order {
                    let reference = column[n].to_f64().unwrap();
                    let err = (numeric[n] - reference).abs() / reference.abs().max(1.0);
                    proptest::prop_assert!(err < 1e-9, "ell={} b={} a={} n={}: {:.2e}", ell, b, a, n, err);
                }
            }
        }
    }
}
