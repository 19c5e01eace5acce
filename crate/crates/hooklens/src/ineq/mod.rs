//! Exact verification battery for the coefficient inequalities: Turán/Jensen
//! hyperbolicity, discrete Laguerre inequalities, the multiplicative gap,
//! root negativity, and unimodality.
//!
//! Every verdict here is computed in integer or rational arithmetic — the
//! floating point appearing anywhere near these checks is diagnostic only.
//! The index convention for the windowed checks is the Turán center: the
//! check *at n* reads the window starting at n-1, so the d = 2 case is the
//! classical log-concavity statement s(n)² ≥ s(n-1)s(n+1) and thresholds
//! quote the first center from which the inequality never again fails.

pub mod sturm;

pub use sturm::{real_negative_roots_check, root_negativity_verdict, RootVerdict};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::zeta::ZetaPoly;

#[derive(Debug, Error)]
pub enum IneqError {
    #[error("{check} at n = {n} needs indices {needed_lo}..={needed_hi}, but '{label}' covers {covered_lo}..={covered_hi}")]
    WindowTooShort {
        check: &'static str,
        n: usize,
        needed_lo: usize,
        needed_hi: usize,
        label: String,
        covered_lo: usize,
        covered_hi: usize,
    },
    #[error("{check} is centered at n = {n}, before any usable window")]
    CenterTooSmall { check: &'static str, n: usize },
    #[error("order {order} is not supported for {check}")]
    UnsupportedOrder { check: &'static str, order: usize },
    #[error("negative value at index {index} in sequence window '{label}'")]
    NegativeValue { label: String, index: usize },
    #[error("the zero polynomial has no root verdict")]
    ZeroPolynomial,
    #[error("negative coefficient at ζ^{0}; counting polynomials are nonnegative")]
    NegativeCoefficient(usize),
}

/// A contiguous run s(offset), s(offset+1), … of a nonnegative integer
/// sequence, tagged with a label for error messages and reports.
#[derive(Debug, Clone)]
pub struct IntegerSequenceWindow {
    label: String,
    offset: usize,
    values: Vec<BigInt>,
}

impl IntegerSequenceWindow {
    pub fn new(
        label: impl Into<String>,
        offset: usize,
        values: Vec<BigInt>,
    ) -> Result<Self, IneqError> {
        let label = label.into();
        if let Some(pos) = values.iter().position(|v| v.is_negative()) {
            return Err(IneqError::NegativeValue {
                label,
                index: offset + pos,
            });
        }
        Ok(IntegerSequenceWindow {
            label,
            offset,
            values,
        })
    }

    /// p(0), p(1), …, p(up_to).
    pub fn partitions(up_to: usize) -> Self {
        let mut numbers = crate::partition::PartitionNumbers::new();
        IntegerSequenceWindow {
            label: "p(n)".into(),
            offset: 0,
            values: numbers.slice(up_to).to_vec(),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest absolute index covered, or None for an empty window.
    pub fn last_index(&self) -> Option<usize> {
        (!self.values.is_empty()).then(|| self.offset + self.values.len() - 1)
    }

    /// s(i) by absolute index.
    fn value(&self, i: usize) -> &BigInt {
        &self.values[i - self.offset]
    }

    /// The slice s(lo), …, s(hi), or a descriptive error if not covered.
    fn span(
        &self,
        check: &'static str,
        n: usize,
        lo: usize,
        hi: usize,
    ) -> Result<&[BigInt], IneqError> {
        let covered = self.offset <= lo && self.last_index().is_some_and(|last| hi <= last);
        if !covered {
            return Err(IneqError::WindowTooShort {
                check,
                n,
                needed_lo: lo,
                needed_hi: hi,
                label: self.label.clone(),
                covered_lo: self.offset,
                covered_hi: self.last_index().unwrap_or(self.offset),
            });
        }
        Ok(&self.values[lo - self.offset..=hi - self.offset])
    }
}

/// Whether the Jensen polynomial J^{d,n}(X) = Σ_k binom(d,k) s(n-1+k) Xᵏ has
/// only real roots, decided by the exact degree-d discriminant. For d = 2
/// this is the Turán inequality s(n)² ≥ s(n-1)s(n+1) centered at n.
pub fn jensen_hyperbolicity_check(
    s: &IntegerSequenceWindow,
    d: usize,
    n: usize,
) -> Result<bool, IneqError> {
    const CHECK: &str = "jensen_hyperbolicity_check";
    if !(2..=3).contains(&d) {
        return Err(IneqError::UnsupportedOrder { check: CHECK, order: d });
    }
    let lo = n
        .checked_sub(1)
        .ok_or(IneqError::CenterTooSmall { check: CHECK, n })?;
    let v = s.span(CHECK, n, lo, lo + d)?;
    match d {
        2 => Ok(&v[1] * &v[1] >= &v[0] * &v[2]),
        _ => Ok(cubic_jensen_hyperbolic(v)),
    }
}

/// All-real-roots test for v₀ + 3v₁X + 3v₂X² + v₃X³ via the cubic
/// discriminant Δ = 18abcd - 4b³d + b²c² - 4ac³ - 27a²d², with the degenerate
/// leading coefficients falling back to the lower-degree criteria.
fn cubic_jensen_hyperbolic(v: &[BigInt]) -> bool {
    let a = v[3].clone();
    let b = &v[2] * BigInt::from(3);
    let c = &v[1] * BigInt::from(3);
    let d = v[0].clone();
    if a.is_zero() {
        if b.is_zero() {
            // degree ≤ 1 always hyperbolic
            return true;
        }
        return &c * &c >= BigInt::from(4) * &b * &d;
    }
    let delta = BigInt::from(18) * &a * &b * &c * &d - BigInt::from(4) * &b * &b * &b * &d
        + &b * &b * &c * &c
        - BigInt::from(4) * &a * &c * &c * &c
        - BigInt::from(27) * &a * &a * &d * &d;
    !delta.is_negative()
}

/// The discrete Laguerre inequality of order m at center n:
///
/// ```text
/// L_m(s)(n) = Σ_{j=0}^{2m} (-1)^{j+m} binom(2m,j) s(n-1+j) s(n-1+2m-j) ≥ 0.
/// ```
///
/// At m = 1 this is 2[s(n)² - s(n-1)s(n+1)], the Turán check again.
pub fn discrete_laguerre_check(
    s: &IntegerSequenceWindow,
    m: usize,
    n: usize,
) -> Result<bool, IneqError> {
    const CHECK: &str = "discrete_laguerre_check";
    if m == 0 {
        return Err(IneqError::UnsupportedOrder { check: CHECK, order: m });
    }
    let lo = n
        .checked_sub(1)
        .ok_or(IneqError::CenterTooSmall { check: CHECK, n })?;
    let v = s.span(CHECK, n, lo, lo + 2 * m)?;
    let mut sum = BigInt::zero();
    for j in 0..=2 * m {
        let term = binomial(BigInt::from(2 * m), BigInt::from(j)) * &v[j] * &v[2 * m - j];
        if (j + m) % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(!sum.is_negative())
}

/// The multiplicative gap s(n₁)s(n₂) > s(n₁+n₂), exact and strict.
pub fn multiplicative_gap_check(
    s: &IntegerSequenceWindow,
    n1: usize,
    n2: usize,
) -> Result<bool, IneqError> {
    const CHECK: &str = "multiplicative_gap_check";
    let (lo, hi) = (n1.min(n2), n1 + n2);
    s.span(CHECK, n1, lo, hi)?;
    Ok(s.value(n1) * s.value(n2) > *s.value(n1 + n2))
}

/// Whether the coefficient sequence rises weakly to a peak and then falls
/// weakly; returns the smallest peak index when it does.
pub fn unimodality_check(p: &ZetaPoly) -> Result<(bool, Option<usize>), IneqError> {
    if p.is_zero() {
        return Err(IneqError::ZeroPolynomial);
    }
    let coeffs = p.coeffs();
    if let Some(pos) = coeffs.iter().position(|c| c.is_negative()) {
        return Err(IneqError::NegativeCoefficient(pos));
    }
    let peak = coeffs
        .iter()
        .enumerate()
        .max_by(|(i, x), (j, y)| x.cmp(y).then(j.cmp(i)))
        .map(|(i, _)| i)
        .expect("nonzero polynomial has coefficients");
    let rises = coeffs.windows(2).take(peak).all(|w| w[0] <= w[1]);
    let falls = coeffs.windows(2).skip(peak).all(|w| w[0] >= w[1]);
    if rises && falls {
        Ok((true, Some(peak)))
    } else {
        Ok((false, None))
    }
}

/// Smallest N₀ such that `check` holds at every n ∈ [N₀, hi], or None if it
/// fails at hi itself. The whole range is evaluated (in parallel), so the
/// predicate must be total on it.
pub fn threshold_scan<F>(check: F, lo: usize, hi: usize) -> Result<Option<usize>, IneqError>
where
    F: Fn(usize) -> Result<bool, IneqError> + Sync,
{
    assert!(lo <= hi, "empty scan range [{lo}, {hi}]");
    let verdicts: Vec<bool> = (lo..=hi)
        .into_par_iter()
        .map(&check)
        .collect::<Result<_, _>>()?;
    match verdicts.iter().rposition(|&ok| !ok) {
        None => Ok(Some(lo)),
        Some(pos) if lo + pos == hi => Ok(None),
        Some(pos) => Ok(Some(lo + pos + 1)),
    }
}

/// Smallest N₀ ≥ 1 with s(n₁)s(n₂) > s(n₁+n₂) for ALL n₁, n₂ ∈ [N₀, hi], or
/// None if no such N₀ ≤ hi exists. Index 0 is excluded: s(0) = 1 makes the
/// strict inequality vacuously false there.
pub fn multiplicative_gap_threshold(
    s: &IntegerSequenceWindow,
    hi: usize,
) -> Result<Option<usize>, IneqError> {
    // the pair property over [N, hi]² shrinks monotonically in N, so the
    // threshold is one past the largest n₁ that fails against any n₂ ≥ n₁
    let worst_failure: Option<usize> = (1..=hi)
        .into_par_iter()
        .map(|n1| {
            for n2 in n1..=hi {
                if !multiplicative_gap_check(s, n1, n2)? {
                    return Ok(Some(n1));
                }
            }
            Ok(None)
        })
        .collect::<Result<Vec<_>, IneqError>>()?
        .into_iter()
        .flatten()
        .max();
    match worst_failure {
        None => Ok(Some(1)),
        Some(n) if n == hi => Ok(None),
        Some(n) => Ok(Some(n + 1)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn window_of(values: &[i64]) -> IntegerSequenceWindow {
        IntegerSequenceWindow::new(
            "test",
            0,
            values.iter().map(|&v| BigInt::from(v)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn turan_threshold_of_the_partition_numbers() {
        let p = IntegerSequenceWindow::partitions(60);
        // the classical boundary: fails at center 25, holds at 26
        assert!(!jensen_hyperbolicity_check(&p, 2, 25).unwrap());
        assert!(jensen_hyperbolicity_check(&p, 2, 26).unwrap());
        let n0 = threshold_scan(|n| jensen_hyperbolicity_check(&p, 2, n), 2, 59)
            .unwrap()
            .expect("threshold exists");
        assert_eq!(n0, 26);
    }

    #[test]
    fn constant_sequences_sit_on_the_equality_case() {
        let s = window_of(&[7, 7, 7, 7, 7]);
        for n in 1..=3 {
            assert!(jensen_hyperbolicity_check(&s, 2, n).unwrap());
        }
        assert!(jensen_hyperbolicity_check(&s, 3, 1).unwrap());
    }

    #[test]
    fn cubic_case_detects_complex_roots() {
        // 1 + 3X + 3X² + X³ = (1+X)³: triple real root
        assert!(cubic_jensen_hyperbolic(&[
            BigInt::from(1),
            BigInt::from(1),
            BigInt::from(1),
            BigInt::from(1)
        ]));
        // 1 + 3·0X + 3·0X² + X³ = 1 + X³ has two complex roots
        assert!(!cubic_jensen_hyperbolic(&[
            BigInt::from(1),
            BigInt::from(0),
            BigInt::from(0),
            BigInt::from(1)
        ]));
    }

    #[test]
    fn laguerre_at_order_one_is_turan() {
        let p = IntegerSequenceWindow::partitions(80);
        for n in 2..=79 {
            assert_eq!(
                discrete_laguerre_check(&p, 1, n).unwrap(),
                jensen_hyperbolicity_check(&p, 2, n).unwrap(),
                "disagreement at n = {n}"
            );
        }
        assert!(discrete_laguerre_check(&p, 1, 30).unwrap());
    }

    #[test]
    fn multiplicative_gap_examples() {
        let p = IntegerSequenceWindow::partitions(40);
        assert!(!multiplicative_gap_check(&p, 2, 3).unwrap()); // 2·3 < 7
        assert!(multiplicative_gap_check(&p, 10, 10).unwrap()); // 42² > 627
        assert!(!multiplicative_gap_check(&p, 0, 8).unwrap()); // s(0) = 1
    }

    #[test]
    fn gap_threshold_is_a_genuine_square_property() {
        let p = IntegerSequenceWindow::partitions(240);
        let n0 = multiplicative_gap_threshold(&p, 120)
            .unwrap()
            .expect("gap threshold exists");
        for n1 in n0..=120 {
            for n2 in n1..=120 {
                assert!(multiplicative_gap_check(&p, n1, n2).unwrap());
            }
        }
        // minimality: some pair with smaller n1 fails
        assert!((n0 - 1..120).any(|n2| {
            !multiplicative_gap_check(&p, n0 - 1, n2).unwrap()
        }));
    }

    #[test]
    fn unimodality_verdicts() {
        let ridge = ZetaPoly::from_i64_coeffs(&[0, 2, 1]);
        assert_eq!(unimodality_check(&ridge).unwrap(), (true, Some(1)));
        let valley = ZetaPoly::from_i64_coeffs(&[1, 0, 1]);
        assert_eq!(unimodality_check(&valley).unwrap(), (false, None));
        let plateau = ZetaPoly::from_i64_coeffs(&[1, 3, 3, 2]);
        assert_eq!(unimodality_check(&plateau).unwrap(), (true, Some(1)));
        assert!(matches!(
            unimodality_check(&ZetaPoly::zero()),
            Err(IneqError::ZeroPolynomial)
        ));
        assert!(matches!(
            unimodality_check(&ZetaPoly::from_i64_coeffs(&[1, -1])),
            Err(IneqError::NegativeCoefficient(1))
        ));
    }

    #[test]
    fn scans_handle_edge_positions() {
        let all = |_: usize| Ok(true);
        assert_eq!(threshold_scan(all, 5, 10).unwrap(), Some(5));
        let fails_at_end = |n: usize| Ok(n < 10);
        assert_eq!(threshold_scan(fails_at_end, 5, 10).unwrap(), None);
        let early_failure = |n: usize| Ok(n >= 7);
        assert_eq!(threshold_scan(early_failure, 5, 10).unwrap(), Some(7));
    }

    #[test]
    fn windows_protect_their_bounds() {
        let s = IntegerSequenceWindow::new(
            "shifted",
            10,
            vec![BigInt::from(1), BigInt::from(2), BigInt::from(3)],
        )
        .unwrap();
        assert!(jensen_hyperbolicity_check(&s, 2, 11).is_ok());
        assert!(matches!(
            jensen_hyperbolicity_check(&s, 2, 12),
            Err(IneqError::WindowTooShort { .. })
        ));
        assert!(matches!(
            jensen_hyperbolicity_check(&s, 2, 0),
            Err(IneqError::CenterTooSmall { .. })
        ));
        assert!(matches!(
            jensen_hyperbolicity_check(&s, 4, 11),
            Err(IneqError::UnsupportedOrder { .. })
        ));
        assert!(matches!(
            IntegerSequenceWindow::new("bad", 0, vec![BigInt::from(-1)]),
            Err(IneqError::NegativeValue { .. })
        ));
    }
}
