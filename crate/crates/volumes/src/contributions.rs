//! Contributions of one-cylinder diagrams to volumes of strata.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use perm_core::{factorial, StratumSignature};

use crate::{SymbolicValue, VolumeError};

fn fact(n: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(factorial(n)))
}

fn int(n: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `∏ μ_k!` over the multiplicities of the singularity orders.
fn multiplicity_factorials(s: &StratumSignature) -> BigRational {
    s.multiplicities()
        .values()
        .map(|&mu| fact(mu))
        .fold(BigRational::one(), |a, b| a * b)
}

fn require_abelian(s: &StratumSignature) -> Result<(), VolumeError> {
    if s.is_abelian() {
        Ok(())
    } else {
        Err(VolumeError::NotAbelian(s.to_string()))
    }
}

/// `2/|Γ| · ∏μ_k! / (d−2)! · ζ(d)` for a diagram of an Abelian stratum with
/// labeled zeros.
pub fn contribution_abelian(
    gamma: u64,
    s: &StratumSignature,
) -> Result<SymbolicValue, VolumeError> {
    require_abelian(s)?;
    if gamma == 0 {
        return Err(VolumeError::ZeroSymmetry);
    }
    let d = s.dim();
    let r = BigRational::new(BigInt::from(2), BigInt::from(gamma)) * multiplicity_factorials(s)
        / fact(d - 2);
    Ok(SymbolicValue::zeta(r, d as u32))
}

/// `2^{l+2}/|Γ| · (m+n−2)!/((m−1)!(n−1)!) · ∏μ_k!/(d−2)! · ζ(d)` for a
/// one-cylinder diagram of a quadratic stratum with `l` saddle connections
/// on both boundaries, `m` only on the top and `n` only on the bottom.
pub fn contribution_quadratic(
    gamma: u64,
    l: usize,
    m: usize,
    n: usize,
    s: &StratumSignature,
) -> Result<SymbolicValue, VolumeError> {
    if s.is_abelian() {
        return Err(VolumeError::NotQuadratic(s.to_string()));
    }
    if gamma == 0 {
        return Err(VolumeError::ZeroSymmetry);
    }
    if m == 0 || n == 0 {
        return Err(VolumeError::SideCount { m, n });
    }
    let d = s.dim();
    if l + m + n != d {
        return Err(VolumeError::Dimension {
            sum: l + m + n,
            dim: d,
        });
    }
    let r = BigRational::new(BigInt::one() << (l + 2), BigInt::from(gamma)) * fact(m + n - 2)
        / (fact(m - 1) * fact(n - 1))
        * multiplicity_factorials(s)
        / fact(d - 2);
    Ok(SymbolicValue::zeta(r, d as u32))
}

/// Total contribution of all one-cylinder diagrams of an Abelian stratum:
/// `2/n! · ∏(k+1)^{−μ_k} · Σ_j j!(n−1−j)!χ_j · ζ(n+1)` with `n = d−1`.
pub fn c1_total_abelian(s: &StratumSignature) -> Result<SymbolicValue, VolumeError> {
    require_abelian(s)?;
    let n = s.abelian_n();
    let sum = frobenius::character_sum(n, &s.abelian_cycle_type())?;
    let denominator = s
        .orders()
        .iter()
        .map(|&k| int(k as usize + 1))
        .fold(fact(n), |a, b| a * b);
    let r = BigRational::from_integer(BigInt::from(2) * sum) / denominator;
    Ok(SymbolicValue::zeta(r, n as u32 + 1))
}

/// Closed form `ζ(2g)/(2g) · 4/(2g−1)` of [`c1_total_abelian`] for the
/// minimal stratum `H(2g−2)`.
pub fn c1_minimal(genus: usize) -> Result<SymbolicValue, VolumeError> {
    if genus < 2 {
        return Err(VolumeError::Genus(genus));
    }
    let r = int(4) / (int(2 * genus) * int(2 * genus - 1));
    Ok(SymbolicValue::zeta(r, 2 * genus as u32))
}

/// Closed form `ζ(4g−3)/(4g−2) · 4/2^{2g−2}` of [`c1_total_abelian`] for the
/// principal stratum `H(1^{2g−2})`.
pub fn c1_principal(genus: usize) -> Result<SymbolicValue, VolumeError> {
    if genus < 2 {
        return Err(VolumeError::Genus(genus));
    }
    let r =
        int(4) / (int(4 * genus - 2) * BigRational::from_integer(BigInt::one() << (2 * genus - 2)));
    Ok(SymbolicValue::zeta(r, 4 * genus as u32 - 3))
}

/// Lower and upper bounds `ζ(d)/(d+1)·4/∏(m_i+1)` and
/// `ζ(d)/(d−10/29)·4/∏(m_i+1)` for [`c1_total_abelian`].
pub fn c1_bounds(s: &StratumSignature) -> Result<(SymbolicValue, SymbolicValue), VolumeError> {
    require_abelian(s)?;
    let d = s.dim();
    let product = s
        .orders()
        .iter()
        .map(|&k| int(k as usize + 1))
        .fold(BigRational::one(), |a, b| a * b);
    let base = int(4) / product;
    let lower = &base / int(d + 1);
    let upper = &base / (int(d) - BigRational::new(10.into(), 29.into()));
    Ok((
        SymbolicValue::zeta(lower, d as u32),
        SymbolicValue::zeta(upper, d as u32),
    ))
}
