use std::fmt;

/// Errors reported by the library operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division or quotient selection with a zero divisor.
    DivisionByZero,
    /// An operation that requires a nonzero input received zero.
    ZeroInput(&'static str),
    /// Leading data requested for the zero vector.
    UndefinedForZero,
    /// Objects from different ring contexts were mixed.
    ShapeMismatch(String),
    /// A monomial order failed validation.
    InvalidOrder(String),
    /// Quotient of a term or monomial by a non-divisor.
    NotDivisible,
    /// A pair passed to `augment` does not consist of basis elements.
    PairNotInBasis,
    /// `softly_reduce_step` / `normalize_step` called on a finished set.
    AlreadyReduced(&'static str),
    IndexOutOfRange,
    EmptyMatrix,
    Parse { line: usize, col: usize, msg: String },
    /// A brute-force oracle was asked for more than its degree bound allows.
    Capacity(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::ZeroInput(what) => write!(f, "zero input: {what}"),
            Error::UndefinedForZero => write!(f, "undefined for the zero vector"),
            Error::ShapeMismatch(msg) => write!(f, "shape mismatch: {msg}"),
            Error::InvalidOrder(msg) => write!(f, "invalid order: {msg}"),
            Error::NotDivisible => write!(f, "quotient of a non-divisor"),
            Error::PairNotInBasis => write!(f, "pair elements are not in the basis"),
            Error::AlreadyReduced(what) => write!(f, "set is already {what}"),
            Error::IndexOutOfRange => write!(f, "index out of range"),
            Error::EmptyMatrix => write!(f, "empty matrix"),
            Error::Parse { line, col, msg } => {
                write!(f, "parse error at line {line}, column {col}: {msg}")
            }
            Error::Capacity(msg) => write!(f, "oracle capacity exceeded: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
