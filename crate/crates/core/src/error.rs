use thiserror::Error;

use crate::diagram::ValidationReport;

/// Errors raised while reading a diagram document.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("edge multiplicity: label {label} used {count} times (expected 2)")]
    EdgeMultiplicity { label: u32, count: usize },
    #[error("line {line}: slot index {slot} out of range 0..3")]
    SlotOutOfRange { line: usize, slot: u64 },
    #[error("invalid structured document: {0}")]
    Object(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid diagram: {0}")]
    Invalid(ValidationReport),
    #[error("instance too large: {states} states exceed the cap of {cap}")]
    InstanceTooLarge { states: u128, cap: u64 },
    #[error("coefficient overflow")]
    Overflow,
    #[error("degree of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("state has no circles")]
    EmptyState,
    #[error("state has {got} choices, diagram has {expected} crossings")]
    StateSize { expected: usize, got: usize },
    #[error("crossing {0} does not exist")]
    NoSuchCrossing(usize),
    #[error("crossing {0} is not nugatory")]
    NotNugatory(usize),
    #[error("crossing {0} is not dotted-reducible")]
    NotDottedReducible(usize),
    #[error("edge {0} does not exist")]
    InvalidEdge(u32),
    #[error("edges {0} and {1} share no face")]
    NoSharedFace(u32, u32),
    #[error("unsupported rewrite: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
