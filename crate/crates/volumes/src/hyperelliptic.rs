//! One-cylinder proportions and volumes of hyperelliptic components.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use perm_core::factorial;

use crate::{SymbolicValue, VolumeError};

/// Hyperelliptic component of `H(2g−2)` or of `H(g−1, g−1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HyperellipticComponent {
    Minimal,
    TwoZeros,
}

/// `k!!`, with `0!! = (−1)!! = 1`.
pub fn double_factorial(k: i64) -> BigInt {
    let mut acc = BigInt::one();
    let mut i = k;
    while i > 1 {
        acc *= i;
        i -= 2;
    }
    acc
}

fn ratio(p: BigInt, q: BigInt) -> BigRational {
    BigRational::new(p, q)
}

fn check_genus(g: usize) -> Result<i64, VolumeError> {
    if g < 2 {
        Err(VolumeError::Genus(g))
    } else {
        Ok(g as i64)
    }
}

/// Proportion of the one-cylinder contribution in the volume of the
/// component:
/// `ζ(2g)/π^{2g}·2g(2g+1)·(2g−2)!!/(2g−3)!!` for `H(2g−2)` and
/// `ζ(2g+1)/(2π^{2g})·(2g+1)(2g+2)·(2g−1)!!/(2g−2)!!` for `H(g−1,g−1)`.
pub fn hyperelliptic_p1(
    kind: HyperellipticComponent,
    g: usize,
) -> Result<SymbolicValue, VolumeError> {
    let gi = check_genus(g)?;
    let value = match kind {
        HyperellipticComponent::Minimal => {
            let r = ratio(
                BigInt::from(2 * gi * (2 * gi + 1)) * double_factorial(2 * gi - 2),
                double_factorial(2 * gi - 3),
            );
            let zeta = SymbolicValue::zeta(r, 2 * g as u32);
            &zeta * &SymbolicValue::pi_power(BigRational::one(), -2 * g as i32)
        }
        HyperellipticComponent::TwoZeros => {
            let r = ratio(
                BigInt::from((2 * gi + 1) * (2 * gi + 2)) * double_factorial(2 * gi - 1),
                BigInt::from(2) * double_factorial(2 * gi - 2),
            );
            let zeta = SymbolicValue::zeta(r, 2 * g as u32 + 1);
            &zeta * &SymbolicValue::pi_power(BigRational::one(), -2 * g as i32)
        }
    };
    Ok(value)
}

/// `2π^{2g}/(2g+1)!·(2g−3)!!/(2g−2)!!` for `H(2g−2)` and
/// `4π^{2g}/(2g+2)!·(2g−2)!!/(2g−1)!!` for `H(g−1,g−1)`.
pub fn hyperelliptic_volume(
    kind: HyperellipticComponent,
    g: usize,
) -> Result<SymbolicValue, VolumeError> {
    let gi = check_genus(g)?;
    let r = match kind {
        HyperellipticComponent::Minimal => ratio(
            BigInt::from(2) * double_factorial(2 * gi - 3),
            BigInt::from(factorial(2 * g + 1)) * double_factorial(2 * gi - 2),
        ),
        HyperellipticComponent::TwoZeros => ratio(
            BigInt::from(4) * double_factorial(2 * gi - 2),
            BigInt::from(factorial(2 * g + 2)) * double_factorial(2 * gi - 1),
        ),
    };
    Ok(SymbolicValue::pi_power(r, 2 * g as i32))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial(-1), BigInt::one());
        assert_eq!(double_factorial(0), BigInt::one());
        assert_eq!(double_factorial(7), BigInt::from(105));
        assert_eq!(double_factorial(8), BigInt::from(384));
    }
}
