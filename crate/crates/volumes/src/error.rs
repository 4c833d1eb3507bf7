use frobenius::FrobeniusError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VolumeError {
    #[error("divergent zeta arguments {0:?}")]
    Divergent(Vec<u32>),
    #[error("expected an Abelian stratum, got {0}")]
    NotAbelian(String),
    #[error("expected a quadratic stratum, got {0}")]
    NotQuadratic(String),
    #[error("l+m+n = {sum} differs from the stratum dimension {dim}")]
    Dimension { sum: usize, dim: usize },
    #[error("cylinder side counts must be positive, got m={m}, n={n}")]
    SideCount { m: usize, n: usize },
    #[error("symmetry group order must be positive")]
    ZeroSymmetry,
    #[error("genus must be at least 2, got {0}")]
    Genus(usize),
    #[error("proportion {0} outside (0, 1]")]
    Proportion(f64),
    #[error("cannot parse symbolic value {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error(transparent)]
    Frobenius(#[from] FrobeniusError),
}
