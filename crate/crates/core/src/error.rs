use thiserror::Error;

use crate::symring::Basis;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<i64>),
    #[error("partition parts must be non-negative, got {0:?}")]
    NegativePart(Vec<i64>),
    #[error("invalid Frobenius coordinates: {0}")]
    InvalidFrobenius(String),
    #[error("negative weight {0}")]
    NegativeWeight(i64),
    #[error("basis mismatch: {0} vs {1}")]
    BasisMismatch(Basis, Basis),
    #[error("operation requires the {expected} basis, got {found}")]
    WrongBasis { expected: Basis, found: Basis },
    #[error("inadmissible determinant formula: {0}")]
    InadmissibleFormula(String),
    #[error("degenerate evaluation point: {0}")]
    DegeneratePoint(String),
    #[error("no value for p_{0} at this evaluation point")]
    MissingPowerSum(u32),
    #[error("partition {partition:?} does not fit rank {rank}")]
    RankViolation { partition: Vec<u32>, rank: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
