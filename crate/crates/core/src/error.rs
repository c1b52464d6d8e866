use thiserror::Error;

use crate::axioms::CheckReport;
use crate::scalar::Field;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a supported prime")]
    NotPrime(u32),
    #[error("{0} has no image in F{1}")]
    NotReducible(String, u32),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dim { expected: usize, got: usize },
    #[error("dimension {0} outside supported range 1..={1}")]
    DimLimit(usize, usize),
    #[error("linear map is singular")]
    Singular,
    #[error("malformed bundle: {0}")]
    Malformed(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown catalog id {0:?}")]
    UnknownId(String),
    #[error("missing parameter binding {0:?}")]
    MissingBinding(String),
    #[error("search space of {needed} candidates exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("theta {0} unsupported here (only 0 and 1)")]
    UnsupportedTheta(String),
    #[error("construction postcondition failed")]
    Postcondition(Box<CheckReport>),
    #[error("unknown strategy {0:?}")]
    UnknownStrategy(String),
}

pub type Result<T> = std::result::Result<T, Error>;
