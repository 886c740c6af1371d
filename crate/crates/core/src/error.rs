use alloc::string::String;
use core::fmt;

/// Everything that can go wrong in this crate.
///
/// Variants fall into three groups that callers (the CLI in particular) map
/// to different exit statuses: malformed input, resource caps, and
/// mathematical precondition failures. See [`Error::category`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Polynomial or ring-element text did not parse.
    Parse { position: usize, message: String },
    DivisionByZero,
    /// `gcd(0, 0)` has no monic representative.
    GcdOfZeros,
    /// The reciprocal of a polynomial with zero constant term drops degree.
    ZeroConstantTerm,
    /// `n` outside `1..=bound` for factorization of `x^n + 1`.
    LengthOutOfRange { n: usize, bound: usize },
    DivisorCapExceeded { cap: u64, count: u64 },
    EnumerationCapExceeded { cap: u64, estimate: u64 },
    /// `generator` does not divide `x^n + 1`; `label` names it (e.g. "f2").
    NotADivisor { label: String, generator: String, n: usize },
    /// The polynomial criterion for dual containment failed for `label`.
    NotDualContaining { label: String, generator: String, n: usize },
    LengthMismatch { expected: usize, found: usize },
    ZeroCode,
}

/// Coarse classification of an [`Error`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    Input,
    ResourceCap,
    Precondition,
}

impl Error {
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::Parse { .. } => ErrorCategory::Input,
            Error::DivisorCapExceeded { .. } | Error::EnumerationCapExceeded { .. } => {
                ErrorCategory::ResourceCap
            }
            Error::LengthOutOfRange { .. } => ErrorCategory::Input,
            _ => ErrorCategory::Precondition,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { position, message } => {
                write!(f, "parse error at position {position}: {message}")
            }
            Error::DivisionByZero => f.write_str("division by the zero polynomial"),
            Error::GcdOfZeros => f.write_str("gcd(0, 0) is undefined"),
            Error::ZeroConstantTerm => {
                f.write_str("reciprocal requires a nonzero constant term")
            }
            Error::LengthOutOfRange { n, bound } => {
                write!(f, "length n = {n} is outside 1..={bound}")
            }
            Error::DivisorCapExceeded { cap, count } => {
                write!(f, "divisor count {count} exceeds the divisor cap {cap}")
            }
            Error::EnumerationCapExceeded { cap, estimate } => {
                write!(f, "enumeration of {estimate} elements exceeds the cap {cap}")
            }
            Error::NotADivisor { label, generator, n } => {
                write!(f, "{label} = {generator} does not divide x^{n}+1")
            }
            Error::NotDualContaining { label, generator, n } => write!(
                f,
                "{label} = {generator}: x^{n}+1 is not divisible by {label}*{label}^*"
            ),
            Error::LengthMismatch { expected, found } => {
                write!(f, "length mismatch: expected {expected}, found {found}")
            }
            Error::ZeroCode => f.write_str("the code has no nonzero codeword"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
