//! Permutations, cycle types, stratum signatures and the characters of the
//! exterior powers of the standard representation of the symmetric group.
//!
//! Everything here is exact: counts are arbitrary-precision integers and the
//! only rational quantity is [`alternating_binomial_sum`].

mod characters;
mod cycle_type;
mod error;
mod permutation;
mod stratum;

pub use characters::{
    alternating_binomial_sum, conjugacy_class_size, exterior_characters, factorial,
};
pub use cycle_type::CycleType;
pub use error::PermError;
pub use permutation::{all_permutations, Permutation};
pub use stratum::{Kind, StratumSignature};
