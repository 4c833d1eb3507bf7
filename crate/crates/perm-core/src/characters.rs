//! Conjugacy-class sizes and characters of `∧ʲ` of the standard representation.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{CycleType, PermError};

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Size of the conjugacy class of cycle type `t` in `S_n`: `n! / ∏ ℓ^{a_ℓ} a_ℓ!`.
pub fn conjugacy_class_size(n: usize, t: &CycleType) -> Result<BigUint, PermError> {
    t.check_size(n)?;
    let centralizer = t
        .multiplicities()
        .into_iter()
        .fold(BigUint::one(), |acc, (len, mult)| {
            acc * BigUint::from(len).pow(mult as u32) * factorial(mult)
        });
    Ok(factorial(n) / centralizer)
}

/// Characters `(χ₀, …, χ_{n−1})` of the exterior powers of the
/// `(n−1)`-dimensional standard representation on the class of type `t`.
///
/// The coefficients of `∏_cycles (1 − (−x)^ℓ)` are the characters of `∧ʲ` of
/// the permutation representation; splitting off the trivial summand gives
/// `χ_j = a_j − χ_{j−1}`.
pub fn exterior_characters(n: usize, t: &CycleType) -> Result<Vec<BigInt>, PermError> {
    t.check_size(n)?;
    if n == 0 {
        return Err(PermError::SizeMismatch {
            expected: 1,
            got: 0,
        });
    }
    let coefficients = permutation_exterior_traces(t);
    let mut chars: Vec<BigInt> = Vec::with_capacity(n);
    for j in 0..n {
        let previous = if j == 0 {
            BigInt::zero()
        } else {
            chars[j - 1].clone()
        };
        chars.push(&coefficients[j] - previous);
    }
    debug_assert_eq!(coefficients[n], chars[n - 1]);
    Ok(chars)
}

/// Coefficients `a_0..a_n` of `∏_cycles (1 − (−x)^ℓ)`.
pub(crate) fn permutation_exterior_traces(t: &CycleType) -> Vec<BigInt> {
    let n = t.n();
    let mut poly = vec![BigInt::zero(); n + 1];
    poly[0] = BigInt::one();
    let mut degree = 0;
    for &len in t.lengths() {
        // multiply by 1 − (−1)^ℓ x^ℓ
        let factor = if len % 2 == 0 {
            BigInt::from(-1)
        } else {
            BigInt::one()
        };
        for k in (0..=degree).rev() {
            if poly[k].is_zero() {
                continue;
            }
            let term = &poly[k] * &factor;
            poly[k + len] += term;
        }
        degree += len;
    }
    poly
}

/// `Σ_{k=0}^{m} (−1)^k (C(m,k)/C(2m+1,2k) − C(m,k)/C(2m+1,2k+1))`.
pub fn alternating_binomial_sum(m: usize) -> BigRational {
    let mut total = BigRational::zero();
    for k in 0..=m {
        let c = BigInt::from(binomial(m, k));
        let even = BigRational::new(c.clone(), BigInt::from(binomial(2 * m + 1, 2 * k)));
        let odd = BigRational::new(c, BigInt::from(binomial(2 * m + 1, 2 * k + 1)));
        let term = even - odd;
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}
