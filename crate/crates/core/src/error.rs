use thiserror::Error;

use crate::cycle_set::Witness;

/// Errors raised by the library. Indices carried in variants are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("row {row} is not a permutation of 1..{n}")]
    NotAPermutation { row: usize, n: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range 1..{n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("not a cycle set: {0}")]
    InvalidCycleSet(Witness),

    #[error("diagonal map is not injective: T({i}) = T({j})")]
    NonDegeneracyViolation { i: usize, j: usize },

    #[error("{what} exceeds cap {cap}")]
    CapExceeded { what: String, cap: u64 },

    #[error("empty tuple")]
    EmptyTuple,

    #[error("element has negative exponent {value} at row {row}")]
    NegativeExponent { row: usize, value: i64 },

    #[error("classes {d1} and {d2} are not coprime")]
    NotCoprime { d1: u64, d2: u64 },

    #[error("cycle set has class 1")]
    TrivialClass,

    #[error("Zappa-Szep composition is not a cycle set: {0}")]
    CompositionInvalid(Witness),

    #[error("modulus {modulus} is not a positive multiple of the class {class}")]
    InvalidModulus { modulus: u64, class: u64 },

    #[error("census file disagrees with enumeration: {0}")]
    CensusMismatch(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable token, used by the CLI's `ERR <code>: <detail>` lines.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotAPermutation { .. } => "not-a-permutation",
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::IndexOutOfRange { .. } => "index-out-of-range",
            Error::InvalidCycleSet(_) => "invalid-cycle-set",
            Error::NonDegeneracyViolation { .. } => "non-degeneracy",
            Error::CapExceeded { .. } => "cap-exceeded",
            Error::EmptyTuple => "empty-tuple",
            Error::NegativeExponent { .. } => "negative-exponent",
            Error::NotCoprime { .. } => "not-coprime",
            Error::TrivialClass => "trivial-class",
            Error::CompositionInvalid(_) => "composition-invalid",
            Error::InvalidModulus { .. } => "invalid-modulus",
            Error::CensusMismatch(_) => "census-mismatch",
            Error::Parse { .. } => "parse",
            Error::Io(_) => "io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
