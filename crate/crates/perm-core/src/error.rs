use thiserror::Error;

/// Errors raised by the constructors and operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("images do not form a bijection of 0..{0}")]
    NotBijection(usize),
    #[error("cycle type sums to {got}, expected {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("cycle lengths must be positive")]
    ZeroLength,
    #[error("cannot parse stratum `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error("orders {orders:?} violate the degree condition of a {kind} stratum")]
    Degree {
        kind: &'static str,
        orders: Vec<i32>,
    },
    #[error("order {order} is not allowed in a {kind} stratum")]
    Order { kind: &'static str, order: i32 },
}
