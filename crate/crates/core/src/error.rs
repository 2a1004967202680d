use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operator index {index} out of range for {nvars} variables (need 1 <= i < n)")]
    IndexOutOfRange { index: usize, nvars: usize },

    #[error("parts {0:?} are not weakly decreasing")]
    NotAPartition(Vec<u32>),

    #[error("{parts} nonzero parts do not fit in {nvars} variables")]
    TooManyParts { parts: usize, nvars: usize },

    #[error("{0:?} is not a permutation of 1..n")]
    NotAPermutation(Vec<usize>),

    #[error("variable count mismatch: expected {expected}, found {found}")]
    VariableCount { expected: usize, found: usize },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid filling: {0}")]
    InvalidFilling(String),

    #[error("entry {entry} in row {row} has no admissible position")]
    PlacementFailed { row: usize, entry: u32 },

    #[error("Knuth class exceeded the cap of {cap} words")]
    ClosureTooLarge { cap: usize },

    #[error("no column-frank word with final column of height {height}")]
    NoColumnFrankWord { height: u32 },
}
