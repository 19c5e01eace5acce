//! Euler–Maclaurin expansions of shifted lattice sums.
//!
//! For a function f that is analytic at 0 and decays along the summation ray,
//! the sum S(w) = Σ_{m≥0} f((m+a)w) admits the expansion
//!
//! ```text
//! S(w) = (1/w)∫₀^∞ f(x) dx + Σ_{n=0}^{N-1} e_n wⁿ + O(w^N),
//! e_n = -B_{n+1}(a) · fₙ / (n+1),
//! ```
//!
//! where fₙ is the n-th Taylor coefficient of f at 0 and B_{n+1} the Bernoulli
//! polynomial. The two suppliers here are the benchmark e^{-z} and the hook
//! log-factor f_ξ(z) = Log(1 + (ξ-1)e^{-ℓz}), whose coefficients come from the
//! log-derivative recurrence rather than from differentiating the composite.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::bernoulli::bernoulli_polynomial;
use super::dilog::dilogarithm;
use super::AsymError;

/// A summand for [`euler_maclaurin_expansion`]: Taylor data at 0 plus the
/// half-line integral that supplies the 1/w term.
pub trait EmFunction {
    /// Coefficient of zⁿ in the Taylor series at 0.
    fn taylor_coeff(&self, n: usize) -> Complex64;

    /// ∫₀^∞ f(x) dx to the requested accuracy.
    fn integral(&self, tol: f64) -> Result<Complex64, AsymError>;
}

/// The expansion S(w) ≈ integral/w + Σ_{n<N} corrections[n]·wⁿ for a fixed
/// shift a; the remainder is O(w^N) with N = corrections.len().
#[derive(Debug, Clone)]
pub struct EmExpansion {
    pub integral: Complex64,
    pub corrections: Vec<Complex64>,
    pub shift: BigRational,
}

impl EmExpansion {
    /// Evaluate the truncated expansion at w.
    pub fn evaluate(&self, w: Complex64) -> Complex64 {
        let mut sum = self.integral / w;
        let mut power = Complex64::new(1.0, 0.0);
        for e in &self.corrections {
            sum += e * power;
            power *= w;
        }
        sum
    }

    /// The truncation order N (number of correction terms).
    pub fn order(&self) -> usize {
        self.corrections.len()
    }
}

/// Expansion of Σ_{m≥0} f((m+a)w) with the N corrections e_0 … e_{N-1}.
pub fn euler_maclaurin_expansion(
    f: &dyn EmFunction,
    a: &BigRational,
    order: usize,
    tol: f64,
) -> Result<EmExpansion, AsymError> {
    let integral = f.integral(tol)?;
    let mut corrections = Vec::with_capacity(order);
    for n in 0..order {
        let b = bernoulli_polynomial(n + 1, a)?;
        let b = b.to_f64().ok_or_else(|| {
            AsymError::InvalidDomain(format!("Bernoulli value B_{}(a) exceeds f64", n + 1))
        })?;
        corrections.push(-b / (n as f64 + 1.0) * f.taylor_coeff(n));
    }
    Ok(EmExpansion {
        integral,
        corrections,
        shift: a.clone(),
    })
}

/// The benchmark summand e^{-z}: Σ_{m≥1} e^{-mw} is geometric, so every
/// remainder claim about the expansion can be checked against a closed form.
#[derive(Debug, Clone, Copy)]
pub struct ExpDecay;

impl EmFunction for ExpDecay {
    fn taylor_coeff(&self, n: usize) -> Complex64 {
        let mut c = 1.0;
        for k in 1..=n {
            c *= -1.0 / k as f64;
        }
        Complex64::new(c, 0.0)
    }

    fn integral(&self, _tol: f64) -> Result<Complex64, AsymError> {
        Ok(Complex64::new(1.0, 0.0))
    }
}

/// Taylor coefficients of f_ξ(z) = Log(1 + (ξ-1)e^{-ℓz}) at z = 0.
///
/// Writing the argument as F(z) = Σ w_k zᵏ (so w_0 = ξ), the coefficients of
/// g = Log F follow from F′ = F·g′:
///
/// ```text
/// g_0 = Log ξ,    g_k = (k·w_k - Σ_{j=1}^{k-1} j·g_j·w_{k-j}) / (k·ξ).
/// ```
///
/// Real ξ ≤ 0 is rejected: the segment from ξ to 1 traced by F on the ray
/// passes through the origin, so no branch of the logarithm stays continuous.
pub fn f_xi_taylor(xi: Complex64, ell: u32, order: usize) -> Result<Vec<Complex64>, AsymError> {
    if xi.im == 0.0 && xi.re <= 0.0 {
        return Err(AsymError::BranchCut(xi));
    }
    let shifted = xi - Complex64::new(1.0, 0.0);
    let mut w = Vec::with_capacity(order + 1);
    w.push(xi);
    let mut factor = Complex64::new(1.0, 0.0); // (-ℓ)ᵏ/k!
    for k in 1..=order {
        factor *= -(ell as f64) / k as f64;
        w.push(shifted * factor);
    }

    let mut g = Vec::with_capacity(order + 1);
    g.push(xi.ln());
    for k in 1..=order {
        let mut acc = k as f64 * w[k];
        for j in 1..k {
            acc -= j as f64 * g[j] * w[k - j];
        }
        g.push(acc / (k as f64 * xi));
    }
    Ok(g)
}

/// The hook log-factor f_ξ with precomputed Taylor data and the dilogarithm
/// closed form ∫₀^∞ f_ξ = -Li₂(1-ξ)/ℓ for its half-line integral.
#[derive(Debug, Clone)]
pub struct HookLogFactor {
    xi: Complex64,
    ell: u32,
    taylor: Vec<Complex64>,
}

impl HookLogFactor {
    pub fn new(xi: Complex64, ell: u32, max_order: usize) -> Result<Self, AsymError> {
        let taylor = f_xi_taylor(xi, ell, max_order)?;
        Ok(HookLogFactor { xi, ell, taylor })
    }

    pub fn xi(&self) -> Complex64 {
        self.xi
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// Pointwise evaluation, for comparing the expansion against direct sums.
    pub fn value(&self, z: Complex64) -> Complex64 {
        ((self.xi - 1.0) * (-(self.ell as f64) * z).exp() + 1.0).ln()
    }
}

impl EmFunction for HookLogFactor {
    fn taylor_coeff(&self, n: usize) -> Complex64 {
        self.taylor[n]
    }

    fn integral(&self, _tol: f64) -> Result<Complex64, AsymError> {
        // u = e^{-ℓx} turns the integral into (1/ℓ)∫₀¹ Log(1+(ξ-1)u)/u du,
        // which is -Li₂(1-ξ)/ℓ; the constructor already excluded the cut.
        let value = dilogarithm(Complex64::new(1.0, 0.0) - self.xi)?;
        Ok(-value / self.ell as f64)
    }
}
