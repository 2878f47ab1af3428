//! Engine error type. Every variant carries a stable machine-readable code.

use thiserror::Error;

/// Errors raised by the algebra, homological and fullness layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a prime that fits a machine word")]
    NotPrime(u64),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("mismatched variable counts: {0} vs {1}")]
    VariableCountMismatch(usize, usize),
    #[error("at most {max} variables are supported, got {got}")]
    TooManyVariables { got: usize, max: usize },
    #[error("unsupported characteristic {characteristic}: {hint}")]
    Characteristic { characteristic: u64, hint: String },
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("ideal is not monomial")]
    NotMonomial,
    #[error("the unit ideal is not allowed here")]
    UnitIdeal,
    #[error("zero ideal is not allowed here")]
    ZeroIdeal,
    #[error("containment fails: {0}")]
    ContainmentFails(String),
    #[error("element is a zerodivisor on the quotient")]
    Zerodivisor,
    #[error("element is not in the radical: {0}")]
    NotInRadical(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// Stable code used in JSON reports and CLI diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "E_DIV_ZERO",
            Error::NotPrime(_) => "E_NOT_PRIME",
            Error::ExponentOverflow => "E_EXP_OVERFLOW",
            Error::RingMismatch => "E_RING_MISMATCH",
            Error::VariableCountMismatch(..) => "E_VAR_COUNT",
            Error::TooManyVariables { .. } => "E_TOO_MANY_VARS",
            Error::Characteristic { .. } => "E_CHARACTERISTIC",
            Error::NotHomogeneous => "E_NOT_HOMOGENEOUS",
            Error::NotMonomial => "E_NOT_MONOMIAL",
            Error::UnitIdeal => "E_UNIT_IDEAL",
            Error::ZeroIdeal => "E_ZERO_IDEAL",
            Error::ContainmentFails(_) => "E_CONTAINMENT",
            Error::Zerodivisor => "E_ZERODIVISOR",
            Error::NotInRadical(_) => "E_NOT_IN_RADICAL",
            Error::Precondition(_) => "E_PRECONDITION",
            Error::Internal(_) => "E_INTERNAL",
        }
    }

    /// Process exit code: 4 for internal consistency failures, 3 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Internal(_) => 4,
            _ => 3,
        }
    }

    pub(crate) fn characteristic(characteristic: u64, hint: &str) -> Self {
        Error::Characteristic { characteristic, hint: hint.to_string() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
