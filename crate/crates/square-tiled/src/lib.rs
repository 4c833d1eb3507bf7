//! Square-tiled surfaces given by a pair of permutations, their strata and
//! cylinder decompositions, exhaustive censuses and volume fits.

mod census;
mod fit;
mod genus_two;
mod surface;

pub use census::{enumerate_sts, h2_census, Census, Strategy, BRUTE_FORCE_LIMIT};
pub use fit::{fit_power_law, volume_fit, VolumeFit};
pub use genus_two::h2_surfaces;
pub use surface::{stratum_of_sts, Cylinder, SquareTiledSurface};

#[derive(Debug, thiserror::Error)]
pub enum SquareTiledError {
    #[error("permutations act on {0} and {1} squares")]
    SizeMismatch(usize, usize),
    #[error("a surface needs at least one square")]
    Empty,
    #[error("the squares do not form a connected surface")]
    Disconnected,
    #[error("square-tiled censuses are only defined for Abelian strata, got {0}")]
    NotAbelian(String),
    #[error("census up to {requested} squares exceeds the limit {limit} of this strategy")]
    ResourceLimit { requested: usize, limit: usize },
    #[error("a fit needs at least {needed} data points, got {got}")]
    InsufficientData { needed: usize, got: usize },
    #[error(transparent)]
    Perm(#[from] perm_core::PermError),
}
