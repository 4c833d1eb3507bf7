//! Volumes from a one-cylinder contribution and its proportion.

use num_rational::BigRational;

use crate::zeta::Estimate;
use crate::{SymbolicValue, VolumeError};

/// `numeric(c₁)/p̂` with the standard error propagated to first order in `1/p`.
pub fn estimate_volume(
    c1: &SymbolicValue,
    p1_hat: f64,
    p1_stderr: f64,
) -> Result<Estimate, VolumeError> {
    if !(p1_hat > 0.0 && p1_hat <= 1.0) {
        return Err(VolumeError::Proportion(p1_hat));
    }
    let c = c1.numeric(1e-14);
    let value = c.value / p1_hat;
    let error = value.abs() * p1_stderr.abs() / p1_hat + c.error / p1_hat;
    Ok(Estimate { value, error })
}

/// Exact volume `c₁/p₁` for an exactly known proportion, with even zeta
/// values reduced to powers of `π`.
pub fn exact_volume(c1: &SymbolicValue, p1: &BigRational) -> Result<SymbolicValue, VolumeError> {
    Ok(c1.div_rational(p1)?.normalized())
}
