//! Generating functions for one-cylinder gluings.
//!
//! `F_n` counts rooted gluings of the two boundary components of a cylinder
//! by translations (Abelian case); `G_n` counts gluings of a `2n`-gon into an
//! orientable surface; `F_{l,m,n}` combines two such gluings joined by `l`
//! edges (quadratic case). Variable `t_i` (resp. `p_i`) marks a vertex of
//! cone angle `2πi` (resp. `πi`).

mod operators;
mod polynomial;

pub use operators::{
    abelian_f, abelian_f_by_coefficients, apply_m1, apply_m2, quadratic_f, quadratic_g,
    stratum_monomial, weighted_from_rooted, weighted_lmn_count, RootedContext,
};
pub use polynomial::{Monomial, PartitionPolynomial};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenfunError {
    #[error("no closed formula for F_{{l,m,n}} with l = {0}; only l ≤ 2 is supported")]
    UnsupportedL(usize),
    #[error("m and n must be positive, got m = {m}, n = {n}")]
    NonPositive { m: usize, n: usize },
    #[error("index must be at least 1")]
    ZeroIndex,
    #[error("l + m + n = {sum} does not match the stratum dimension {dim}")]
    Dimension { sum: usize, dim: usize },
}
