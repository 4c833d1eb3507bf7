//! Counting one-cylinder diagrams of Abelian strata through characters of the
//! symmetric group.
//!
//! A one-cylinder diagram of `H(m₁,…,m_r)` corresponds to a solution of
//! `c₁c₂c₃ = 1` in `S_n` with `c₁`, `c₂` long cycles and `c₃` of cycle type
//! `(m₁+1,…,m_r+1)`. The number of solutions is a character sum over the
//! exterior powers of the standard representation.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use perm_core::{
    conjugacy_class_size, exterior_characters, factorial, CycleType, PermError, StratumSignature,
};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrobeniusError {
    #[error("character counts are only available for Abelian strata, got {0}")]
    NotAbelian(String),
    #[error("genus must be at least 2, got {0}")]
    Genus(usize),
    #[error(transparent)]
    Perm(#[from] PermError),
}

fn big(n: usize) -> BigInt {
    BigInt::from(factorial(n))
}

/// `Σ_{j=0}^{n−1} j!(n−1−j)! χ_j(t)`.
pub fn character_sum(n: usize, t: &CycleType) -> Result<BigInt, FrobeniusError> {
    let chars = exterior_characters(n, t)?;
    Ok(chars
        .iter()
        .enumerate()
        .map(|(j, chi)| big(j) * big(n - 1 - j) * chi)
        .sum())
}

/// Number of pairs of long cycles `(c₁, c₂)` in `S_n` whose product is the
/// inverse of an element of type `t`, i.e. solutions of `c₁c₂c₃ = 1` with
/// `c₃` of type `t`.
pub fn triple_count(n: usize, t: &CycleType) -> Result<BigInt, FrobeniusError> {
    let sum = character_sum(n, t)?;
    let class = BigInt::from(conjugacy_class_size(n, t)?);
    let numerator = class * sum;
    let n_big = BigInt::from(n);
    debug_assert!((&numerator % &n_big).is_zero());
    Ok(numerator / n_big)
}

/// `Σ_D 1/|Γ(D)|` over the one-cylinder diagrams of an Abelian stratum,
/// i.e. `triple_count / n!`. Zeros are labeled; order-0 entries count as
/// labeled marked points.
pub fn weighted_one_cyl_count(s: &StratumSignature) -> Result<BigRational, FrobeniusError> {
    if !s.is_abelian() {
        return Err(FrobeniusError::NotAbelian(s.to_string()));
    }
    let n = s.abelian_n();
    let t = s.abelian_cycle_type();
    Ok(BigRational::new(triple_count(n, &t)?, big(n)))
}

/// Closed form for `H(2g−2)`: `(1/n!)·2((n−1)!)²/(n+1)` with `n = 2g−1`.
pub fn minimal_count(g: usize) -> Result<BigRational, FrobeniusError> {
    if g < 2 {
        return Err(FrobeniusError::Genus(g));
    }
    let n = 2 * g - 1;
    let numerator = BigInt::from(2) * big(n - 1) * big(n - 1);
    Ok(BigRational::new(numerator, BigInt::from(n + 1) * big(n)))
}

/// Closed form for `H(1^{2g−2})`: `(4g−5)!! / ((4g−4)(2g−1))`.
pub fn principal_count(g: usize) -> Result<BigRational, FrobeniusError> {
    if g < 2 {
        return Err(FrobeniusError::Genus(g));
    }
    let double_factorial = (1..=4 * g - 5)
        .step_by(2)
        .fold(BigUint::one(), |acc, k| acc * BigUint::from(k));
    Ok(BigRational::new(
        BigInt::from(double_factorial),
        BigInt::from((4 * g - 4) * (2 * g - 1)),
    ))
}
