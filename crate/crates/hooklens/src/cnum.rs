//! Small complex-arithmetic helpers shared by the series filters and the
//! asymptotic module.

use num_complex::Complex64;

/// e^{2πik/b}, the k-th power of the primitive b-th root of unity.
pub fn root_of_unity(b: usize, k: i64) -> Complex64 {
    let angle = 2.0 * std::f64::consts::PI * (k as f64) / (b as f64);
    Complex64::from_polar(1.0, angle)
}

/// log(1 + z) on the principal branch, accurate for small |z|.
///
/// For |z| below 1e-4 the direct form loses all precision to the rounding of
/// 1 + z, so a five-term alternating series is used instead (error ≤ |z|^6).
pub fn cln_1p(z: Complex64) -> Complex64 {
    if z.norm() < 1e-4 {
        let mut acc = Complex64::new(0.0, 0.0);
        for k in (1..=5).rev() {
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            acc = (acc + sign / k as f64) * z;
        }
        acc
    } else {
        (Complex64::new(1.0, 0.0) + z).ln()
    }
}
