use thiserror::Error;

/// Errors raised by tournament construction, parsing and counting.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid size: {0}")]
    InvalidSize(String),

    #[error("empty vertex subset")]
    EmptySubset,

    #[error("{what}: n = {n} exceeds the configured cap of {cap}")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("k = {k} out of range 1..={n}")]
    KOutOfRange { k: usize, n: usize },

    #[error("n = {0} is not a multiple of 3")]
    NotMultipleOfThree(usize),

    #[error("arithmetic overflow in the chosen count type")]
    Overflow,

    #[error("parse error at line {line}, column {column}: {kind}")]
    Parse {
        line: usize,
        column: usize,
        kind: ParseErrorKind,
    },

    #[error("invalid tournament: {0}")]
    Invalid(InvariantViolation),

    #[error("i/o error: {0}")]
    Io(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing or malformed vertex count header")]
    BadHeader,
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("row has {found} characters, expected {expected}")]
    RowLength { expected: usize, found: usize },
    #[error("unexpected character {0:?}")]
    BadChar(char),
    #[error("diagonal entry must be 0")]
    Diagonal,
    #[error("both or neither of the arcs i->j and j->i present")]
    Orientation,
}

/// A violated tournament invariant, with the offending position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum InvariantViolation {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("pair ({0}, {1}) is not oriented exactly once")]
    Orientation(usize, usize),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
