use thiserror::Error;

/// Malformed text input for one of the textual formats.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("cannot parse {what} from {input:?}: {reason}")]
pub struct ParseError {
    pub what: &'static str,
    pub input: String,
    pub reason: String,
}

impl ParseError {
    pub fn new(what: &'static str, input: &str, reason: &str) -> Self {
        ParseError {
            what,
            input: input.to_string(),
            reason: reason.to_string(),
        }
    }
}

/// A shape failed a precondition (containment, strip kind, ...).
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("{inner} is not contained in {outer}")]
    NotContained { outer: String, inner: String },
    #[error("{shape} is not a {expected}")]
    WrongKind {
        shape: String,
        expected: &'static str,
    },
}

/// A symmetric-function operation was refused.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("degree {degree} exceeds the limit {max}")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error("operands live in {left} and {right} variables")]
    NvarsMismatch { left: usize, right: usize },
}
