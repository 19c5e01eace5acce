//! The dilogarithm Li₂(z) = Σ_{k≥1} z^k/k² on its principal branch.
//!
//! The series is used directly for |z| ≤ 1/2. Everything else is folded into
//! that disk with the standard inversion and reflection identities
//!
//! ```text
//! Li₂(z) + Li₂(1/z)  = -π²/6 - Log²(-z)/2          (z ∉ [0,1))
//! Li₂(z) + Li₂(1-z)  =  π²/6 - Log(z) Log(1-z)
//! ```
//!
//! after which any argument left in the lens {|z| ≤ 1, Re z ≤ 1/2, |z| > 1/2}
//! is evaluated through the substitution u = -Log(1-z), where the series
//! Li₂(z) = Σ_{k≥0} B_k u^{k+1}/(k+1)! converges geometrically (|u| < 2π and
//! the reduction keeps |u| ≲ 1.4). The branch cut [1, ∞) is rejected, except
//! for the branch point z = 1 itself where Li₂(1) = π²/6.

use std::sync::LazyLock;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::bernoulli::bernoulli_numbers;
use super::AsymError;

const PI: f64 = std::f64::consts::PI;

static BERNOULLI_F64: LazyLock<Vec<f64>> = LazyLock::new(|| {
    bernoulli_numbers(48)
        .expect("within ceiling")
        .iter()
        .map(|b| b.to_f64().expect("small rationals"))
        .collect()
});

/// Li₂ on the principal branch; arguments on the cut (1, ∞) are refused.
pub fn dilogarithm(z: Complex64) -> Result<Complex64, AsymError> {
    if z.im == 0.0 && z.re > 1.0 {
        return Err(AsymError::BranchCut(z));
    }
    if z == Complex64::new(1.0, 0.0) {
        return Ok(Complex64::new(PI * PI / 6.0, 0.0));
    }
    Ok(reduce(z))
}

fn reduce(z: Complex64) -> Complex64 {
    let pi2_6 = Complex64::new(PI * PI / 6.0, 0.0);
    if z.norm() > 1.0 {
        // inversion onto the unit disk
        let inv = 1.0 / z;
        let log_neg = (-z).ln();
        return -reduce(inv) - pi2_6 - 0.5 * log_neg * log_neg;
    }
    if z.re > 0.5 {
        // reflection into Re ≤ 1/2 (strictly shrinks |z| there)
        let w = Complex64::new(1.0, 0.0) - z;
        return pi2_6 - z.ln() * w.ln() - reduce(w);
    }
    if z.norm() <= 0.5 {
        power_series(z)
    } else {
        log_series(z)
    }
}

/// Direct Σ z^k/k², |z| ≤ 1/2.
fn power_series(z: Complex64) -> Complex64 {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 1..=60 {
        term *= z;
        let next = term / ((k * k) as f64);
        sum += next;
        if next.norm() < 1e-18 * sum.norm().max(1e-30) {
            break;
        }
    }
    sum
}

/// Σ_{k≥0} B_k u^{k+1}/(k+1)! with u = -Log(1-z); fast for the lens region.
fn log_series(z: Complex64) -> Complex64 {
    let u = -(Complex64::new(1.0, 0.0) - z).ln();
    let bernoulli = &*BERNOULLI_F64;
    let mut power = u; // u^{k+1}
    let mut factorial = 1.0; // (k+1)!
    let mut sum = Complex64::new(0.0, 0.0);
    for (k, &b) in bernoulli.iter().enumerate() {
        factorial *= (k + 1) as f64;
        if b != 0.0 {
            let term = b / factorial * power;
            sum += term;
            if k > 2 && term.norm() < 1e-18 * sum.norm().max(1e-30) {
                break;
            }
        }
        power *= u;
    }
    sum
}

/// Re Li₂(x) for real x ≥ 1, i.e. the shared real part of the two boundary
/// values across the cut: Re Li₂(x ± i0) = π²/3 - Log²(x)/2 - Li₂(1/x).
pub fn dilog_re_on_cut(x: f64) -> f64 {
    assert!(x >= 1.0, "defined on the cut side only");
    let inner = dilogarithm(Complex64::new(1.0 / x, 0.0))
        .expect("1/x is inside the disk")
        .re;
    PI * PI / 3.0 - 0.5 * x.ln().powi(2) - inner
}
