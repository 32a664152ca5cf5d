//! Error taxonomy shared by every operation in the crate.
//!
//! Three failure classes cover everything:
//! * `InvalidInput` — the caller handed us data violating a precondition
//!   (wrong degree, non-canonical rational, point not on the variety, ...).
//! * `UnsupportedInstance` — the input is well-formed but lies on a stratum
//!   the algorithm deliberately does not decide (e.g. a degenerate Hessian).
//! * `Undecided` — an exact decision would need resources past a configured
//!   limit; the limit that was hit is always stated.

use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    InvalidInput(String),
    UnsupportedInstance(String),
    Undecided { limit: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::UnsupportedInstance(msg) => write!(f, "unsupported instance: {msg}"),
            Error::Undecided { limit } => write!(f, "undecided: resource limit reached ({limit})"),
        }
    }
}

#[cfg(test)]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

/// Shorthand constructors; call sites read better with these.
impl Error {
    pub fn invalid(msg: impl fmt::Display) -> Self {
        Error::InvalidInput(alloc::format!("{msg}"))
    }
    pub fn unsupported(msg: impl fmt::Display) -> Self {
        Error::UnsupportedInstance(alloc::format!("{msg}"))
    }
    pub fn undecided(limit: impl fmt::Display) -> Self {
        Error::Undecided {
            limit: alloc::format!("{limit}"),
        }
    }
}
