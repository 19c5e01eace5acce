//! Exact real-root location for ζ-polynomials.
//!
//! The verdict path is entirely rational arithmetic: strip the ζ^k factor,
//! pass to the square-free part, and count distinct real roots in (-∞, 0)
//! with a Sturm chain. A polynomial has every root in (-∞, 0) exactly when
//! that count equals the square-free degree, since the square-free part
//! carries each distinct root of the original once.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::IneqError;
use crate::zeta::ZetaPoly;

/// Root-location summary for one nonzero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootVerdict {
    /// Every root lies in (-∞, 0].
    pub nonpositive: bool,
    /// Every root lies in (-∞, 0); differs from `nonpositive` exactly when
    /// ζ = 0 is a root.
    pub strictly_negative: bool,
    /// Multiplicity of the root at ζ = 0.
    pub zero_multiplicity: usize,
}

/// True iff every root of p lies in (-∞, 0].
pub fn real_negative_roots_check(p: &ZetaPoly) -> Result<bool, IneqError> {
    Ok(root_negativity_verdict(p)?.nonpositive)
}

/// Full verdict, reporting both the weak and the strict reading of
/// "all roots negative" alongside the multiplicity at 0.
pub fn root_negativity_verdict(p: &ZetaPoly) -> Result<RootVerdict, IneqError> {
    if p.is_zero() {
        return Err(IneqError::ZeroPolynomial);
    }
    let coeffs = p.coeffs();
    let zero_multiplicity = coeffs
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero polynomial");
    let reduced: Vec<BigRational> = coeffs[zero_multiplicity..]
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();

    let rest_negative = if reduced.len() == 1 {
        true // constant after the ζ^k factor: no further roots
    } else {
        let square_free = square_free_part(&reduced);
        let distinct_degree = square_free.len() - 1;
        negative_root_count(&square_free) == distinct_degree
    };

    Ok(RootVerdict {
        nonpositive: rest_negative,
        strictly_negative: rest_negative && zero_multiplicity == 0,
        zero_multiplicity,
    })
}

/// Distinct real roots of a square-free polynomial in (-∞, 0), by Sturm's
/// theorem: V(-∞) - V(0). The polynomial must not vanish at 0 (guaranteed
/// here because the caller already removed the ζ^k factor).
fn negative_root_count(p: &[BigRational]) -> usize {
    debug_assert!(!p[0].is_zero(), "Sturm endpoint must not be a root");
    let mut chain = vec![p.to_vec(), derivative(p)];
    loop {
        let next = {
            let [.., a, b] = &chain[..] else { unreachable!() };
            if b.is_empty() {
                break;
            }
            negate(remainder(a, b))
        };
        chain.push(next);
    }

    let at_minus_infinity = variations(chain.iter().map(|s| {
        let sign = leading_sign(s);
        if s.len() % 2 == 1 {
            sign // even degree keeps the leading sign
        } else {
            -sign
        }
    }));
    let at_zero = variations(chain.iter().map(|s| constant_sign(s)));
    at_minus_infinity - at_zero
}

/// p / gcd(p, p′): same distinct roots, all simple.
fn square_free_part(p: &[BigRational]) -> Vec<BigRational> {
    let gcd = poly_gcd(p.to_vec(), derivative(p));
    if gcd.len() <= 1 {
        return p.to_vec();
    }
    divide_exact(p, &gcd)
}

fn derivative(p: &[BigRational]) -> Vec<BigRational> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
        .collect()
}

/// Euclidean remainder of a by b (b nonempty), trailing zeros trimmed.
fn remainder(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut rem = a.to_vec();
    let lead = b.last().expect("nonzero divisor");
    while rem.len() >= b.len() {
        let factor = rem.last().expect("trimmed") / lead;
        let offset = rem.len() - b.len();
        for (i, coeff) in b.iter().enumerate() {
            let adjusted = &rem[offset + i] - &factor * coeff;
            rem[offset + i] = adjusted;
        }
        rem.pop(); // the leading term cancels by construction
        trim(&mut rem);
    }
    rem
}

fn poly_gcd(mut a: Vec<BigRational>, mut b: Vec<BigRational>) -> Vec<BigRational> {
    while !b.is_empty() {
        let r = remainder(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn divide_exact(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut rem = a.to_vec();
    let mut quotient = vec![BigRational::zero(); a.len() - b.len() + 1];
    let lead = b.last().expect("nonzero divisor");
    while rem.len() >= b.len() {
        let factor = rem.last().expect("trimmed") / lead;
        let offset = rem.len() - b.len();
        quotient[offset] = factor.clone();
        for (i, coeff) in b.iter().enumerate() {
            let adjusted = &rem[offset + i] - &factor * coeff;
            rem[offset + i] = adjusted;
        }
        rem.pop();
        trim(&mut rem);
    }
    debug_assert!(rem.is_empty(), "square-free division must be exact");
    quotient
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn negate(p: Vec<BigRational>) -> Vec<BigRational> {
    p.into_iter().map(|c| -c).collect()
}

fn leading_sign(p: &[BigRational]) -> i8 {
    match p.last() {
        Some(c) if c.is_positive() => 1,
        Some(c) if c.is_negative() => -1,
        _ => 0,
    }
}

fn constant_sign(p: &[BigRational]) -> i8 {
    match p.first() {
        Some(c) if c.is_positive() => 1,
        Some(c) if c.is_negative() => -1,
        _ => 0,
    }
}

/// Sign changes in a sequence, zeros skipped.
fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut previous = 0i8;
    for sign in signs {
        if sign == 0 {
            continue;
        }
        if previous != 0 && sign != previous {
            count += 1;
        }
        previous = sign;
    }
    count
}
