use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RauzyError {
    #[error("cannot parse generalized permutation `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error("symbol {symbol} occurs {count} times, expected twice")]
    Occurrences { symbol: usize, count: usize },
    #[error("symbols must be 0..{expected} without gaps")]
    Symbols { expected: usize },
    #[error("both rows must be nonempty")]
    EmptyRow,
    #[error("one row's symbols are a proper subset of the other's")]
    Unrealizable,
    #[error("permutation is reducible")]
    Reducible,
    #[error("permutation admits no suspension")]
    NoSuspension,
    #[error("Rauzy move undefined")]
    MoveUndefined,
    #[error("Rauzy class exceeds the cap of {0} members")]
    ClassTooLarge(usize),
    #[error("no representative found for {0}")]
    NotFound(String),
}
