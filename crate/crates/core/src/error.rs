use thiserror::Error;

/// Errors raised by the algebra layers and the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: String, right: String },

    #[error("letter index {index} out of range for alphabet of size {size}")]
    InvalidLetter { index: usize, size: usize },

    #[error("unknown letter `{0}`")]
    UnknownLetter(String),

    #[error("duplicate letter `{0}` in alphabet")]
    DuplicateLetter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("degree {degree} exceeds truncation {truncation}")]
    DegreeOverflow { degree: usize, truncation: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("scalar `{0}` cannot be inverted in the coefficient domain")]
    NotInvertible(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("the identity element has no leading Lie term")]
    IdentityInput,

    #[error("zero input")]
    ZeroInput,

    #[error("invalid partition index {index} for degree {degree}")]
    InvalidPartition { index: usize, degree: usize },

    #[error("invalid monodromy index {0} (expected 1..=4)")]
    InvalidMonodromyIndex(usize),

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{0}")]
    Input(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
