use thiserror::Error;

use crate::linalg::Q;

/// Errors raised by the library.
///
/// The CLI maps [`Error::Unsupported`] to exit code 2 and everything else to
/// exit code 1.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("arrangement is not central")]
    NotCentral,

    #[error("arrangement is not essential")]
    NotEssential,

    #[error("arrangement is not reduced")]
    NotReduced,

    #[error("arrangement is decomposable")]
    Decomposable,

    #[error("expected rank {expected}, found rank {found}")]
    WrongRank { expected: usize, found: usize },

    #[error("duplicate hyperplane at positions {0} and {1}")]
    DuplicateHyperplane(usize, usize),

    #[error("index {index} out of range (have {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("subset size {found} does not match the convention (expected {expected})")]
    SizeMismatch { expected: usize, found: usize },

    #[error("pole at s = {0}")]
    Pole(Q),

    #[error("pole of order {order} at s = {at}; coefficient undefined")]
    HigherOrderPole { at: Q, order: u32 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("denominator does not split into rational linear factors")]
    NonLinearDenominator,

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
