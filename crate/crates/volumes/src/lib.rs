//! Exact contributions of one-cylinder diagrams to volumes of strata of
//! Abelian and quadratic differentials, together with the numerics needed to
//! compare them: `ζ(k)`, multiple zeta values and volume estimates.

mod contributions;
mod error;
mod estimate;
mod hyperelliptic;
mod symbolic;
mod zeta;

pub use contributions::{
    c1_bounds, c1_minimal, c1_principal, c1_total_abelian, contribution_abelian,
    contribution_quadratic,
};
pub use error::VolumeError;
pub use estimate::{estimate_volume, exact_volume};
pub use hyperelliptic::{
    double_factorial, hyperelliptic_p1, hyperelliptic_volume, HyperellipticComponent,
};
pub use symbolic::{Factor, SymbolicRecord, SymbolicValue, TermRecord};
pub use zeta::{
    bernoulli_numbers, even_zeta_coefficient, mzv_numeric, zeta_estimate, zeta_numeric,
    zeta_series, Estimate,
};
