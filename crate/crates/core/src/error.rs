use thiserror::Error;

use crate::laurent::Variable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("variable mismatch: {left} vs {right}")]
    VariableMismatch { left: Variable, right: Variable },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
}

/// Rejections of malformed pretzel tuples and marker strings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("pretzel spec needs at least one tangle")]
    Empty,
    #[error("tangle {index} has zero crossings")]
    ZeroTangle { index: usize },
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("invalid marker {0:?}, expected 'A' or 'B'")]
    Marker(char),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error("{spec} is outside the supported family {family}")]
    UnsupportedFamily { spec: String, family: &'static str },
    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),
    #[error("out of domain: {0}")]
    Domain(String),
    #[error("diagram has {crossings} crossings, enumeration limit is {limit}")]
    BudgetExceeded { crossings: usize, limit: usize },
    #[error("state covers {got} crossings, diagram has {expected}")]
    StateMismatch { expected: usize, got: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
