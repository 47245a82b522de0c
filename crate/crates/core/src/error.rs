use alloc::string::String;
use core::fmt;

/// Errors raised by the sweep-map operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The modulus was zero.
    ZeroModulus,
    /// A letter fell outside `0..modulus`.
    LetterOutOfRange {
        /// Offending letter.
        letter: usize,
        /// Modulus it was checked against.
        modulus: usize,
    },
    /// A letter position past the end of the word.
    IndexOutOfRange {
        /// Requested position.
        index: usize,
        /// Word length.
        len: usize,
    },
    /// Block sizes that do not cover the word, or the wrong number of blocks.
    BadBlockSizes(String),
    /// A block vector that increases somewhere or names a missing block.
    BadBlockVector(String),
    /// Input text that could not be parsed.
    Parse(String),
    /// An operation that needs an equitable partition got something else.
    NotEquitable,
    /// An operation that needs a successful partition got something else.
    NotSuccessful,
    /// Two partitions of different words were combined.
    MismatchedWords,
    /// A suffix vector that is not a left balanced block-suffix of its host.
    BadSuffix(String),
    /// An integer word that is not a Dyck word.
    NotDyck,
    /// A word whose letters do not realize the declared content.
    WrongContent(String),
    /// Schedule data that is out of range.
    BadSchedule(String),
    /// An exhaustive check would exceed its configured budget.
    BudgetExceeded {
        /// Work the request would need.
        needed: u128,
        /// Configured limit.
        budget: u128,
    },
    /// Internal state that a proven property rules out. Always a bug.
    InvariantViolation(String),
}

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    /// True for [`Error::InvariantViolation`].
    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, Error::InvariantViolation(_))
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroModulus => f.write_str("modulus must be at least 1"),
            Error::LetterOutOfRange { letter, modulus } => {
                write!(f, "letter {letter} is not in 0..{modulus}")
            }
            Error::IndexOutOfRange { index, len } => {
                write!(
                    f,
                    "letter index {index} out of range for word of length {len}"
                )
            }
            Error::BadBlockSizes(msg) => write!(f, "invalid block sizes: {msg}"),
            Error::BadBlockVector(msg) => write!(f, "invalid block vector: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::NotEquitable => f.write_str("partition is not equitable"),
            Error::NotSuccessful => f.write_str("partition is not successful"),
            Error::MismatchedWords => f.write_str("partitions belong to different words"),
            Error::BadSuffix(msg) => write!(f, "invalid block-suffix: {msg}"),
            Error::NotDyck => f.write_str("word is not a Dyck word (some level is negative)"),
            Error::WrongContent(msg) => write!(f, "word does not match content: {msg}"),
            Error::BadSchedule(msg) => write!(f, "invalid schedule: {msg}"),
            Error::BudgetExceeded { needed, budget } => {
                write!(f, "instance needs {needed} evaluations, budget is {budget}")
            }
            Error::InvariantViolation(msg) => write!(f, "invariant violation (bug): {msg}"),
        }
    }
}

impl core::error::Error for Error {}
