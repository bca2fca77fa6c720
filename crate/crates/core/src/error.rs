use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// `r - s + Ls` would have a negative entry.
    #[error("reduce underflow at index {index}: composition exceeds the available columns")]
    ReduceUnderflow { index: usize },

    /// A composition is not admissible for the counts vector under the mode.
    #[error("composition {parts:?} is not admissible for counts {counts:?}")]
    InadmissibleComposition { counts: Vec<u32>, parts: Vec<u32> },

    #[error("infeasible margins: no matrix has these row and column sums")]
    Infeasible,

    #[error("uniform draw from an empty range")]
    EmptyRange,

    /// Instance too large for the brute-force oracle.
    #[error("instance exceeds the oracle size guard: {0}")]
    OracleGuard(String),
}
