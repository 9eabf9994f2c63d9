use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("order {from} does not divide target order {to}")]
    OrderMismatch { from: usize, to: usize },
    #[error("operands belong to different design spaces")]
    SpaceMismatch,
    #[error("entry {value} at position {index} exceeds level count {bound}")]
    ResidueOutOfRange {
        index: usize,
        value: usize,
        bound: usize,
    },
    #[error("rank {rank} out of range for design of size {size}")]
    RankOutOfRange { rank: usize, size: usize },
    #[error("division by a zero cyclotomic element")]
    ZeroDivisor,
    #[error("table does not come from a counting function: {0}")]
    NonCountingTable(String),
    #[error("operation requires a single-replicate (indicator) fraction")]
    NotIndicator,
    #[error("operation requires a nonempty fraction")]
    EmptyFraction,
    #[error("empty factor subset")]
    EmptyFactorSet,
    #[error("factor index {0} out of range (factors are numbered from 1)")]
    FactorOutOfRange(usize),
    #[error("word {word}: right-hand side {rhs} is not in the value subgroup of the term (must be a multiple of {step} mod {order})")]
    InvalidWord {
        word: String,
        rhs: usize,
        step: usize,
        order: usize,
    },
    #[error("defining equations are inconsistent: two derivations of the word {word} give {first} and {second}")]
    InconsistentEquations {
        word: String,
        first: usize,
        second: usize,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
