use alloc::string::String;
use core::fmt;

use crate::parse::ParseError;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Modulus is not a prime in `[2, 2^31)`.
    NotPrime(u64),
    /// Operands live in different rings.
    RingMismatch,
    /// Exponent vectors of different lengths.
    DimensionMismatch { left: usize, right: usize },
    /// An exponent or degree would leave the 32-bit exponent range.
    ExponentOverflow,
    /// `q` is not a power of `p`, or exceeds the supported cap.
    InvalidFrobenius { p: u32, q: u64 },
    /// A rational exponent with zero denominator or non-positive value.
    InvalidExponent(String),
    /// A configured resource limit was hit.
    Resource(String),
    /// A caller broke an operation's precondition.
    Precondition(String),
    /// ν is unbounded because the ideal is not contained in the maximal ideal.
    UnboundedNu,
    Infeasible,
    Unbounded,
    Parse(ParseError),
    /// An algebraic identity that must hold did not; indicates a bug.
    Internal(String),
}

impl Error {
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource(_))
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not a prime below 2^31"),
            Error::RingMismatch => write!(f, "operands belong to different rings"),
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right} variables")
            }
            Error::ExponentOverflow => write!(f, "exponent overflow"),
            Error::InvalidFrobenius { p, q } => {
                write!(f, "{q} is not a supported power of {p} (cap 2^20)")
            }
            Error::InvalidExponent(s) => write!(f, "invalid exponent: {s}"),
            Error::Resource(s) => write!(f, "resource limit: {s}"),
            Error::Precondition(s) => write!(f, "precondition violated: {s}"),
            Error::UnboundedNu => {
                write!(f, "nu is unbounded: ideal is not contained in the maximal ideal")
            }
            Error::Infeasible => write!(f, "linear program is infeasible"),
            Error::Unbounded => write!(f, "linear program is unbounded"),
            Error::Parse(e) => write!(f, "{e}"),
            Error::Internal(s) => write!(f, "internal error: {s}"),
        }
    }
}

impl core::error::Error for Error {}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e)
    }
}
