use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrystalError {
    #[error("index {index} is not in the index set {set:?}")]
    IndexOutOfRange { index: usize, set: Vec<usize> },

    #[error("weight coordinates must all have the same parity: {0:?}")]
    ParityMismatch(Vec<i64>),

    #[error("pairing of {coords:?} with h_{index} is not integral")]
    NonIntegralPairing { coords: Vec<i64>, index: usize },

    #[error("weight has {got} coordinates, expected {expected}")]
    WeightLength { expected: usize, got: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("vertex budget of {0} exceeded during graph generation")]
    BudgetExceeded(usize),

    #[error("an unbounded (ambient) crystal needs an explicit vertex budget")]
    BudgetRequired,

    #[error("invalid seed element: {0}")]
    InvalidSeed(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("involution failed: {0}")]
    Involution(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    Inapplicable(String),
}

pub type Result<T> = std::result::Result<T, CrystalError>;
