use thiserror::Error;

use crate::monomials::Term;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("elementary move e_{j}{sign} is not applicable to {term}")]
    Move { term: String, j: usize, sign: char },

    #[error("terms {a} and {b} are not comparable in the Borel order (different degrees)")]
    Incomparable { a: String, b: String },

    #[error("value {value} out of range {min}..={max}")]
    Range { value: u64, min: u64, max: u64 },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid term order: {0}")]
    InvalidOrder(String),

    #[error(transparent)]
    NotAdmissible(#[from] crate::polynomials::NotAdmissible),

    #[error("not a Borel ideal: e_{j}^+({generator}) is not in the ideal")]
    NotBorel { generator: String, j: usize },

    #[error("the ideal is not saturated")]
    NotSaturated,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("problem too large: {0}")]
    SizeGuard(String),

    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn not_borel(generator: &Term, j: usize) -> Self {
        Error::NotBorel {
            generator: generator.to_string(),
            j,
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
