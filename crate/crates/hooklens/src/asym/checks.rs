//! Canned identity diagnostics over the asymptotic machinery.
//!
//! Each check condenses one verifiable statement into a measured scalar and
//! a bound, so a batch run can print or serialize the whole battery and CI
//! can gate on `pass`. The underlying quantities all come from the sibling
//! modules; nothing here computes new mathematics.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::bernoulli::bernoulli_polynomial;
use super::em::{euler_maclaurin_expansion, EmExpansion, ExpDecay, HookLogFactor};
use super::wright::{hardy_ramanujan_params, partition_gf_major_arc, wright_expansion};
use super::AsymError;
use crate::partition::partition_number;

/// One measured statement: `pass` records whether `measured` met `bound`
/// (direction depends on the check; both values are kept for the report).
#[derive(Debug, Clone, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub measured: f64,
    pub bound: f64,
    pub pass: bool,
}

impl IdentityCheck {
    fn at_most(name: impl Into<String>, measured: f64, bound: f64) -> Self {
        IdentityCheck {
            name: name.into(),
            measured,
            bound,
            pass: measured <= bound,
        }
    }

    fn at_least(name: impl Into<String>, measured: f64, bound: f64) -> Self {
        IdentityCheck {
            name: name.into(),
            measured,
            bound,
            pass: measured >= bound,
        }
    }
}

/// Max relative difference between the direct and the transformed evaluation
/// of P(e^{-z}) over the grid Re z ∈ {0.05, …, 0.5}, |Im z| ≤ Re z.
pub fn modular_grid_check(tolerance: f64) -> Result<IdentityCheck, AsymError> {
    let mut worst = 0.0f64;
    for i in 1..=10 {
        let re = 0.05 * i as f64;
        for frac in [-1.0, -0.5, 0.0, 0.5, 1.0] {
            let z = Complex64::new(re, frac * re);
            let check = partition_gf_major_arc(z)?;
            worst = worst.max(check.relative_difference());
        }
    }
    Ok(IdentityCheck::at_most(
        "modular-transformation-grid",
        worst,
        tolerance,
    ))
}

/// Hardy–Ramanujan battery for the one-term Wright estimate: error bound
/// 1.5·n^{-1/2} at n ∈ {50,100,200,500}, monotone decay of the error across
/// that set, the n = 100 anchor value, and the closed-form identity
/// (1/(4√3))·n^{-1}·e^{π√(2n/3)} to 10^{-12} relative.
pub fn hardy_ramanujan_checks() -> Result<Vec<IdentityCheck>, AsymError> {
    let expansion = wright_expansion(&hardy_ramanujan_params(), 1)?;

    let mut rel_errors = Vec::new();
    for n in [50u64, 100, 200, 500] {
        let estimate = expansion.estimate(n)?;
        let exact = partition_number(n as usize).to_f64().expect("p(n) in f64");
        rel_errors.push((n, (estimate / exact - 1.0).abs()));
    }
    let scaled_worst = rel_errors
        .iter()
        .map(|&(n, e)| e * (n as f64).sqrt())
        .fold(0.0f64, f64::max);
    let worst_increase = rel_errors
        .windows(2)
        .map(|w| w[1].1 - w[0].1)
        .fold(f64::MIN, f64::max);
    let anchor = rel_errors[1].1;

    let mut symbolic_worst = 0.0f64;
    for n in [10u64, 100, 1000] {
        let estimate = expansion.estimate(n)?;
        let nf = n as f64;
        let closed = (std::f64::consts::PI * (2.0 * nf / 3.0).sqrt()).exp() / (4.0 * nf * 3f64.sqrt());
        symbolic_worst = symbolic_worst.max((estimate / closed - 1.0).abs());
    }

    Ok(vec![
        IdentityCheck::at_most("hardy-ramanujan-sqrt-n-bound", scaled_worst, 1.5),
        IdentityCheck::at_most("hardy-ramanujan-error-decreasing", worst_increase, 0.0),
        IdentityCheck::at_most(
            "hardy-ramanujan-n100-anchor",
            (anchor - 4.6e-2).abs(),
            2e-3,
        ),
        IdentityCheck::at_most("hardy-ramanujan-symbolic-identity", symbolic_worst, 1e-12),
    ])
}

fn fitted_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    sxy / sxx
}

/// Complex number with exact rational parts. The decay-order measurement
/// needs remainders as small as 10^{-25} out of terms of size 10^4, far past
/// what f64 cancellation leaves behind, so the whole remainder is formed
/// exactly and only its magnitude is converted at the end.
#[derive(Clone)]
struct QComplex {
    re: BigRational,
    im: BigRational,
}

impl QComplex {
    fn new(re: BigRational, im: BigRational) -> Self {
        QComplex { re, im }
    }

    fn from_integer(n: i64) -> Self {
        QComplex::new(
            BigRational::from_integer(BigInt::from(n)),
            BigRational::zero(),
        )
    }

    fn add(&self, o: &Self) -> Self {
        QComplex::new(&self.re + &o.re, &self.im + &o.im)
    }

    fn sub(&self, o: &Self) -> Self {
        QComplex::new(&self.re - &o.re, &self.im - &o.im)
    }

    fn mul(&self, o: &Self) -> Self {
        QComplex::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    fn scale(&self, s: &BigRational) -> Self {
        QComplex::new(&self.re * s, &self.im * s)
    }

    fn recip(&self) -> Self {
        let norm2 = &self.re * &self.re + &self.im * &self.im;
        QComplex::new(&self.re / &norm2, -&self.im / &norm2)
    }

    /// ln |self|, safe for numerators and denominators of thousands of bits.
    fn ln_norm(&self) -> f64 {
        let norm2 = &self.re * &self.re + &self.im * &self.im;
        (ln_big(norm2.numer()) - ln_big(norm2.denom())) / 2.0
    }
}

/// Natural log of a positive big integer via its bit length.
fn ln_big(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 52 {
        return x.to_f64().expect("small positive integer").ln();
    }
    let shift = bits - 52;
    let top = (x >> shift).to_f64().expect("52-bit mantissa");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Taylor e^w with truncation far below every remainder measured here.
fn exp_q(w: &QComplex, terms: usize) -> QComplex {
    let mut sum = QComplex::from_integer(1);
    let mut term = QComplex::from_integer(1);
    for k in 1..=terms {
        term = term
            .mul(w)
            .scale(&BigRational::new(BigInt::one(), BigInt::from(k)));
        sum = sum.add(&term);
    }
    sum
}

/// Exact corrections e_0..e_{order-1} of the e^{-x}, a = 1 benchmark:
/// e_n = -B_{n+1}(1) · (-1)^n / (n! · (n+1)).
fn exact_benchmark_corrections(order: usize) -> Result<Vec<BigRational>, AsymError> {
    let one = BigRational::one();
    (0..order)
        .map(|n| {
            let b = bernoulli_polynomial(n + 1, &one)?;
            let mut factorial = BigInt::one();
            for i in 1..=n as i64 {
                factorial *= i;
            }
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let taylor = BigRational::new(BigInt::from(sign), factorial);
            Ok(-b * taylor / BigRational::from_integer(BigInt::from(n as i64 + 1)))
        })
        .collect()
}

/// Exact remainder magnitude of the order-N benchmark expansion at w = t·d:
/// ln |1/(e^w - 1) - 1/w - Σ_{n<N} e_n w^n|.
fn exact_remainder_ln(direction: &QComplex, t: &BigRational, corrections: &[BigRational]) -> f64 {
    let w = direction.scale(t);
    let lattice_sum = exp_q(&w, 40).sub(&QComplex::from_integer(1)).recip();
    let mut remainder = lattice_sum.sub(&w.recip());
    let mut w_pow = QComplex::from_integer(1);
    for e_n in corrections {
        remainder = remainder.sub(&w_pow.scale(e_n));
        w_pow = w_pow.mul(&w);
    }
    remainder.ln_norm()
}

/// Empirical remainder decay order of the e^{-x} expansion, N ∈ {1..order_max},
/// along the rays w = t and w = t·e^{iπ/6}, t ∈ {10^{-1},…,10^{-4}}: the
/// fitted order must be ≥ N - 1/2. The second ray's direction is carried as
/// a 45-digit rational approximation (√3/2, 1/2), and the module's floating
/// corrections are checked against the exact Bernoulli values alongside.
pub fn em_decay_order_checks(order_max: usize) -> Result<Vec<IdentityCheck>, AsymError> {
    let order_max = order_max.max(1);
    let shift = BigRational::one();
    let exact = exact_benchmark_corrections(order_max)?;

    let expansion: EmExpansion = euler_maclaurin_expansion(&ExpDecay, &shift, order_max, 1e-12)?;
    let coeff_drift = expansion
        .corrections
        .iter()
        .zip(&exact)
        .map(|(module, e_n)| {
            (module - Complex64::new(e_n.to_f64().expect("small rational"), 0.0)).norm()
        })
        .fold(0.0f64, f64::max);
    let mut checks = vec![IdentityCheck::at_most(
        "em-corrections-match-exact-bernoulli",
        coeff_drift,
        1e-14,
    )];

    let digits = BigInt::from(10).pow(45);
    let root3 = (BigInt::from(3) * &digits * &digits).sqrt();
    let rays = [
        ("real-axis", QComplex::from_integer(1)),
        (
            "pi-over-6",
            QComplex::new(
                BigRational::new(root3, BigInt::from(2) * &digits),
                BigRational::new(BigInt::one(), BigInt::from(2)),
            ),
        ),
    ];
    for order in 1..=order_max {
        for (label, direction) in &rays {
            let points: Vec<(f64, f64)> = (1..=4u32)
                .map(|k| {
                    let t = BigRational::new(BigInt::one(), BigInt::from(10).pow(k));
                    let ln_t = -f64::from(k) * std::f64::consts::LN_10;
                    (ln_t, exact_remainder_ln(direction, &t, &exact[..order]))
                })
                .collect();
            checks.push(IdentityCheck::at_least(
                format!("em-decay-order-n{order}-{label}"),
                fitted_slope(&points),
                order as f64 - 0.5,
            ));
        }
    }
    Ok(checks)
}

/// The order-1 correction of the f_ξ expansion at shift 1, scaled by ℓ,
/// against the closed form -ℓ·Log(ξ)/2, maximized over ξ ∈ {i, primitive
/// cube roots} and ℓ ∈ {1,2,3}.
pub fn em_constant_term_check(tolerance: f64) -> Result<IdentityCheck, AsymError> {
    let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::FRAC_PI_3);
    let shift = BigRational::one();
    let mut worst = 0.0f64;
    for xi in [Complex64::new(0.0, 1.0), omega, omega.conj()] {
        for ell in 1..=3u32 {
            let f = HookLogFactor::new(xi, ell, 1)?;
            let expansion = euler_maclaurin_expansion(&f, &shift, 1, 1e-12)?;
            let scaled = ell as f64 * expansion.corrections[0];
            let closed = -(ell as f64) * xi.ln() / 2.0;
            worst = worst.max((scaled - closed).norm());
        }
    }
    Ok(IdentityCheck::at_most(
        "em-constant-term-f-xi",
        worst,
        tolerance,
    ))
}

/// The full battery at one tolerance, in a fixed order.
pub fn standard_checks(order_max: usize, tolerance: f64) -> Result<Vec<IdentityCheck>, AsymError> {
    let mut checks = vec![modular_grid_check(tolerance)?];
    checks.extend(hardy_ramanujan_checks()?);
    checks.extend(em_decay_order_checks(order_max)?);
    checks.push(em_constant_term_check(tolerance)?);
    Ok(checks)
}
