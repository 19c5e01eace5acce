//! Exact Bernoulli numbers and polynomials over the rationals.
//!
//! Convention: first kind, B_1 = -1/2, so that B_1(1) = +1/2 and the
//! Euler–Maclaurin corrections in [`crate::asym::em`] read
//! e_n = -B_{n+1}(a) f^{(n)}(0) / (n+1)!.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::AsymError;

/// Largest index served; higher orders are of no use to the expansions here
/// and are refused instead of silently computed at growing cost.
pub const MAX_BERNOULLI_INDEX: usize = 64;

/// B_0, …, B_n as exact rationals, via the defining recurrence
/// Σ_{j≤m} C(m+1, j) B_j = 0 for m ≥ 1.
pub fn bernoulli_numbers(n: usize) -> Result<Vec<BigRational>, AsymError> {
    check_index(n)?;
    let mut numbers: Vec<BigRational> = Vec::with_capacity(n + 1);
    numbers.push(BigRational::one());
    for m in 1..=n {
        let mut acc = BigRational::zero();
        for (j, value) in numbers.iter().enumerate() {
            acc += BigRational::from_integer(binomial(m + 1, j)) * value;
        }
        numbers.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    Ok(numbers)
}

/// B_n(a) = Σ_k C(n,k) B_k a^{n-k}, exact.
pub fn bernoulli_polynomial(n: usize, a: &BigRational) -> Result<BigRational, AsymError> {
    let numbers = bernoulli_numbers(n)?;
    let mut acc = BigRational::zero();
    // Horner in a: (((B_0)·a + C(n,1)B_1)·a + …) keeps the powers implicit
    for k in 0..=n {
        acc = acc * a + BigRational::from_integer(binomial(n, k)) * &numbers[k];
    }
    Ok(acc)
}

fn check_index(n: usize) -> Result<(), AsymError> {
    if n > MAX_BERNOULLI_INDEX {
        Err(AsymError::IndexCeiling {
            requested: n,
            ceiling: MAX_BERNOULLI_INDEX,
        })
    } else {
        Ok(())
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}
