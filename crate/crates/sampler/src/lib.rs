//! Cylinder statistics of integer interval exchanges and linear involutions:
//! band counting, exhaustive grids, seeded random sampling and the
//! horizontal/vertical uncorrelatedness experiment.

mod bands;
mod correlation;
mod statistics;

pub use bands::{IntegerIet, MAX_CELLS};
pub use correlation::{uncorrelatedness_report, UncorrelatednessReport};
pub use statistics::{pk_exhaustive, pk_random, BandStatistics, Method, CHAINS, MAX_GRID_POINTS};

#[derive(Debug, thiserror::Error)]
pub enum SamplerError {
    #[error("lengths {lengths:?} are invalid for `{perm}`: {reason}")]
    Lengths {
        perm: String,
        lengths: Vec<u64>,
        reason: String,
    },
    #[error("{what} of {requested} exceeds the limit {limit}")]
    ResourceLimit {
        what: &'static str,
        requested: u128,
        limit: u128,
    },
    #[error("no surfaces of {stratum} with at most {n_max} squares")]
    NoSurfaces { stratum: String, n_max: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Rauzy(#[from] rauzy::RauzyError),
    #[error(transparent)]
    SquareTiled(#[from] square_tiled::SquareTiledError),
}
