//! Generalized permutations with Rauzy induction on both ends, Rauzy classes
//! built by breadth-first search, standard members and the stratum of the
//! suspension.

mod class;
mod error;
mod moves;
mod permutation;
mod representative;

pub use class::{rauzy_class, standard_members, RauzyClass, DEFAULT_CLASS_CAP};
pub use error::RauzyError;
pub use moves::{rauzy_move, undo_move, MoveKind};
pub use permutation::{GeneralizedPermutation, Row};
pub use representative::{representative, SEARCH_TRIALS};

/// Singularity profile of the suspensions over `p`.
pub fn stratum_of(p: &GeneralizedPermutation) -> perm_core::StratumSignature {
    p.stratum()
}
