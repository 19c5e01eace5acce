//! The circle-method layer for P(q) = (q;q)_∞^{-1}: the modular major-arc
//! transformation, the minor-arc envelope, and coefficient extraction from a
//! major-arc expansion z^B e^{A/z} (α_0 + α_1 z + …).

use num_complex::Complex64;

use crate::cnum::cln_1p;

use super::AsymError;

const PI: f64 = std::f64::consts::PI;
const TAU: f64 = std::f64::consts::TAU;

/// Largest log-magnitude that still exponentiates into a finite f64.
const EXP_GUARD: f64 = 700.0;

/// Data of a major-arc expansion F(e^{-z}) = z^B e^{A/z} Σ_j α_j z^j.
#[derive(Debug, Clone)]
pub struct WrightParams {
    a: f64,
    b: f64,
    alphas: Vec<Complex64>,
}

impl WrightParams {
    pub fn new(a: f64, b: f64, alphas: Vec<Complex64>) -> Result<Self, AsymError> {
        if !(a > 0.0) || !a.is_finite() || !b.is_finite() {
            return Err(AsymError::InvalidDomain(format!(
                "growth constant A must be positive and finite, got A = {a}, B = {b}"
            )));
        }
        if alphas.is_empty() {
            return Err(AsymError::InvalidDomain(
                "expansion needs at least α_0".into(),
            ));
        }
        Ok(WrightParams { a, b, alphas })
    }

    /// The exponential growth constant A.
    pub fn a(&self) -> f64 {
        self.a
    }

    /// The power B of the z^B prefactor.
    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn alphas(&self) -> &[Complex64] {
        &self.alphas
    }
}

/// The parameters of P(e^{-z}) = z^{1/2} e^{π²/6z} (1/√(2π) + O(z)).
pub fn hardy_ramanujan_params() -> WrightParams {
    WrightParams::new(
        PI * PI / 6.0,
        0.5,
        vec![Complex64::new(1.0 / TAU.sqrt(), 0.0)],
    )
    .expect("fixed valid parameters")
}

/// The circle-method kernel coefficient
///
/// ```text
/// c_{j,r} = (-1/(4√A))^r √A^{j+B+1/2} / (2√π) · Γ(x+r) / (r!·Γ(x-r)),
/// x = j + B + 3/2.
/// ```
///
/// The Γ ratio collapses to the finite product ∏_{i=0}^{2r-1}(x-r+i), which
/// sends denominator poles to an exact 0 instead of losing them to rounding.
pub fn wright_cjr(a: f64, b: f64, j: u32, r: u32) -> Result<f64, AsymError> {
    if !(a > 0.0) {
        return Err(AsymError::InvalidDomain(format!(
            "growth constant A must be positive, got {a}"
        )));
    }
    let sqrt_a = a.sqrt();
    let x = j as f64 + b + 1.5;
    let mut gamma_ratio = 1.0;
    for i in 0..2 * r {
        gamma_ratio *= x - r as f64 + i as f64;
    }
    let mut factorial = 1.0;
    for i in 1..=r {
        factorial *= i as f64;
    }
    let sign_factor = (-0.25 / sqrt_a).powi(r as i32);
    let scale = sqrt_a.powf(j as f64 + b + 0.5) / (2.0 * PI.sqrt());
    Ok(sign_factor * scale * gamma_ratio / factorial)
}

/// The extracted coefficient sequence p_r = Σ_{j≤r} α_j c_{j,r-j}.
#[derive(Debug, Clone)]
pub struct WrightExpansion {
    params: WrightParams,
    p: Vec<f64>,
}

impl WrightExpansion {
    pub fn params(&self) -> &WrightParams {
        &self.params
    }

    /// p_0 … p_{N-1}.
    pub fn p(&self) -> &[f64] {
        &self.p
    }

    /// The truncated estimate n^{(-2B-3)/4} e^{2√(An)} Σ_r p_r n^{-r/2}.
    pub fn estimate(&self, n: u64) -> Result<f64, AsymError> {
        if n == 0 {
            return Err(AsymError::InvalidDomain(
                "estimate is defined for n ≥ 1".into(),
            ));
        }
        let nf = n as f64;
        let growth = 2.0 * (self.params.a * nf).sqrt();
        if growth > EXP_GUARD {
            return Err(AsymError::Overflow {
                argument: Complex64::new(nf, 0.0),
                log_magnitude: growth,
            });
        }
        let mut series = 0.0;
        for (r, p) in self.p.iter().enumerate() {
            series += p * nf.powf(-0.5 * r as f64);
        }
        Ok(nf.powf(0.25 * (-2.0 * self.params.b - 3.0)) * growth.exp() * series)
    }
}

/// Builds p_0 … p_{N-1} from the α_j; N may not exceed the available depth.
pub fn wright_expansion(params: &WrightParams, n_terms: usize) -> Result<WrightExpansion, AsymError> {
    if n_terms == 0 || n_terms > params.alphas.len() {
        return Err(AsymError::InvalidDomain(format!(
            "requested {n_terms} coefficients from an expansion of depth {}",
            params.alphas.len()
        )));
    }
    let mut p = Vec::with_capacity(n_terms);
    for r in 0..n_terms {
        let mut sum = Complex64::new(0.0, 0.0);
        for (j, alpha) in params.alphas.iter().enumerate().take(r + 1) {
            sum += alpha * wright_cjr(params.a, params.b, j as u32, (r - j) as u32)?;
        }
        if sum.im.abs() > 1e-9 * sum.re.abs().max(1.0) {
            return Err(AsymError::InvalidDomain(format!(
                "p_{r} = {sum} is not real; the estimate is defined for real coefficient sums"
            )));
        }
        p.push(sum.re);
    }
    Ok(WrightExpansion {
        params: params.clone(),
        p,
    })
}

/// One-call form of [`wright_expansion`] + [`WrightExpansion::estimate`].
pub fn wright_estimate(params: &WrightParams, n: u64, n_terms: usize) -> Result<f64, AsymError> {
    wright_expansion(params, n_terms)?.estimate(n)
}

/// Both sides of the modular transformation
///
/// ```text
/// P(e^{-z}) = (z/2π)^{1/2} e^{(π/12)(2π/z - z/2π)} P(e^{-4π²/z}),
/// ```
///
/// held in log space so the comparison survives the e^{π²/6Re z} growth.
#[derive(Debug, Clone, Copy)]
pub struct MajorArcCheck {
    pub z: Complex64,
    pub log_direct: Complex64,
    pub log_transformed: Complex64,
}

impl MajorArcCheck {
    /// P(e^{-z}) from the truncated product.
    pub fn direct(&self) -> Complex64 {
        self.log_direct.exp()
    }

    /// P(e^{-z}) through the transformation.
    pub fn transformed(&self) -> Complex64 {
        self.log_transformed.exp()
    }

    /// |direct/transformed - 1|, formed from the log difference.
    pub fn relative_difference(&self) -> f64 {
        ((self.log_direct - self.log_transformed).exp() - 1.0).norm()
    }
}

/// Evaluates P(e^{-z}) directly and through the modular transformation.
pub fn partition_gf_major_arc(z: Complex64) -> Result<MajorArcCheck, AsymError> {
    if !(z.re > 0.0) {
        return Err(AsymError::InvalidDomain(format!(
            "P(e^{{-z}}) requires Re z > 0, got z = {z}"
        )));
    }
    let log_direct = log_partition_product(z);
    let dual = 4.0 * PI * PI / z;
    let log_transformed = 0.5 * (z / TAU).ln() + PI / 12.0 * (TAU / z - z / TAU)
        + log_partition_product(dual);
    if log_direct.re.abs() > EXP_GUARD || log_transformed.re.abs() > EXP_GUARD {
        return Err(AsymError::Overflow {
            argument: z,
            log_magnitude: log_direct.re.abs().max(log_transformed.re.abs()),
        });
    }
    Ok(MajorArcCheck {
        z,
        log_direct,
        log_transformed,
    })
}

/// log P(e^{-z}) = -Σ_{k≥1} Log(1 - e^{-kz}), truncated once |e^{-kz}| is
/// negligible against the working precision.
fn log_partition_product(z: Complex64) -> Complex64 {
    let q = (-z).exp();
    let terms = (46.1 / z.re).ceil().max(1.0) as usize;
    let mut qk = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    for _ in 0..terms {
        qk *= q;
        sum -= cln_1p(-qk);
    }
    sum
}

/// The Lemma's rate constant π/12 - (1/2π)(1 - 1/√(1+M²)); the minor-arc
/// envelope grows like exp(rate/v), strictly slower than the major arc's
/// exp((π/12)/v).
pub fn minor_arc_rate(m: f64) -> f64 {
    PI / 12.0 - (1.0 - 1.0 / (1.0 + m * m).sqrt()) / TAU
}

/// The envelope √v · exp(rate(M)/v) bounding |P(q)| on the minor arc
/// Mv ≤ |u| ≤ 1/2 for q = e^{2πi(u+iv)}.
pub fn minor_arc_bound(m: f64, v: f64) -> f64 {
    v.sqrt() * (minor_arc_rate(m) / v).exp()
}
