//! Asymptotic analysis of the hook-count residue classes.
//!
//! The exact tables in [`crate::series`] show the residue classes of the
//! hook-count statistic approaching equal shares of p(n); this module builds
//! the analytic side of that statement:
//!
//! * [`bernoulli`] — exact Bernoulli numbers and polynomials, the correction
//!   coefficients of every expansion below;
//! * [`em`] — Euler–Maclaurin expansions Σ_{m≥0} f((m+a)w) ≈ I_F/w + Σ e_n wⁿ
//!   for decaying functions, in particular the log-factor
//!   f_ξ(z) = Log(1 + (ξ-1)e^{-ℓz}) of the root-of-unity-specialized product;
//! * [`arcs`] — the integrals I_{f_ξ} = ∫₀^∞ f_ξ(x) dx whose negative real
//!   parts force every nontrivial root-of-unity contribution to die off;
//! * [`dilog`] — the dilogarithm, giving those integrals in closed form;
//! * [`wright`] — single-peak circle-method coefficients and the resulting
//!   p(n)-style estimates, plus the generating-function transformation they
//!   rest on;
//! * [`equidist`] — error tables quantifying how fast the residue classes of
//!   the exact filter converge to p(n)/b.

pub mod arcs;
pub mod bernoulli;
pub mod checks;
pub mod dilog;
pub mod em;
pub mod equidist;
pub mod quad;
pub mod wright;

pub use arcs::{hook_arc_integral, minor_arc_domination_report, ArcIntegral, ArcMethod, MinorArcReport};
pub use bernoulli::{bernoulli_numbers, bernoulli_polynomial, MAX_BERNOULLI_INDEX};
pub use checks::{
    em_constant_term_check, em_decay_order_checks, hardy_ramanujan_checks, modular_grid_check,
    standard_checks, IdentityCheck,
};
pub use dilog::{dilog_re_on_cut, dilogarithm};
pub use em::{euler_maclaurin_expansion, f_xi_taylor, EmExpansion, EmFunction, ExpDecay, HookLogFactor};
pub use equidist::{equidistribution_error_table, EquidistRow, EquidistTable};
pub use wright::{
    hardy_ramanujan_params, minor_arc_bound, minor_arc_rate, partition_gf_major_arc,
    wright_cjr, wright_estimate, wright_expansion, MajorArcCheck, WrightExpansion, WrightParams,
};

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AsymError {
    #[error("index {requested} exceeds the supported Bernoulli ceiling {ceiling}")]
    IndexCeiling { requested: usize, ceiling: usize },
    #[error("argument {0} lies on the logarithm branch cut")]
    BranchCut(Complex64),
    #[error("quadrature did not converge: {context}")]
    QuadratureFailure { context: String },
    #[error("evaluation at {argument} would overflow (log-magnitude {log_magnitude:.1})")]
    Overflow {
        argument: Complex64,
        log_magnitude: f64,
    },
    #[error("domain error: {0}")]
    InvalidDomain(String),
    #[error("arc integral at xi = {xi} has nonnegative real part {re:.6e}")]
    NonNegativeArc { xi: Complex64, re: f64 },
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(usize),
}
