use std::fmt;

use thiserror::Error;

/// Errors produced by polynomial arithmetic and the basis computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring: expected {expected} variables, found {found}")]
    InvalidRing { expected: usize, found: usize },
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("monomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T> = std::result::Result<T, Error>;

/// A syntax or semantic error in textual input, with a 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }

    /// Shifts the position of an error produced while parsing a single line.
    pub(crate) fn at_line(mut self, line: usize, column_offset: usize) -> Self {
        self.line = line;
        self.column += column_offset;
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}
