use alloc::string::String;
use core::fmt;

/// Errors raised by the monomial and bound computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two objects live in polynomial rings with different variable counts.
    DimensionMismatch { expected: usize, found: usize },
    /// A degree sequence is not positive and nondecreasing, or has too many entries.
    InvalidDegreeSequence { index: usize, reason: &'static str },
    /// An argument lies outside the domain of the operation.
    OutOfRange {
        what: &'static str,
        value: u64,
        min: u64,
        max: u64,
    },
    /// The quotient ring is not Artinian, so the requested quantity is infinite.
    NotArtinian,
    /// The ideal does not contain the pure-powers ideal of the degree sequence.
    MissingPurePowers,
    /// A numerical function violates the growth bound starting at `degree`.
    Inadmissible { degree: usize },
    /// An input violates a structural precondition.
    Precondition(&'static str),
    /// A monomial ideal expected to be squarefree is not.
    NotSquarefree,
    /// An exhaustive scan would exceed its state budget.
    BudgetExceeded { estimate: u128, budget: u128 },
    /// Malformed monomial text at byte `offset`.
    Parse { offset: usize, reason: &'static str },
    /// A runtime certificate failed; this indicates a bug.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(
                    f,
                    "variable count mismatch: expected {expected}, found {found}"
                )
            }
            Error::InvalidDegreeSequence { index, reason } => {
                write!(f, "invalid degree sequence at index {index}: {reason}")
            }
            Error::OutOfRange {
                what,
                value,
                min,
                max,
            } => {
                write!(f, "{what} = {value} out of range [{min}, {max}]")
            }
            Error::NotArtinian => f.write_str("quotient is not Artinian: multiplicity infinite"),
            Error::MissingPurePowers => f.write_str("ideal does not contain the pure-powers ideal"),
            Error::Inadmissible { degree } => {
                write!(f, "growth condition violated at d={degree}")
            }
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::NotSquarefree => f.write_str("ideal is not squarefree"),
            Error::BudgetExceeded { estimate, budget } => {
                write!(f, "scan needs about {estimate} states, budget is {budget}")
            }
            Error::Parse { offset, reason } => write!(f, "parse error at byte {offset}: {reason}"),
            Error::Internal(msg) => write!(f, "internal certificate failed: {msg}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;

impl core::error::Error for Error {}
