use thiserror::Error;

/// Errors raised by the library.
///
/// `Falsified` is reserved for computations that contradict a mathematical
/// claim being checked; everything else is a usage or resource problem.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected n = {expected}, got n = {found}")]
    Dimension { expected: usize, found: usize },

    #[error("not a permutation of [{n}]: {detail}")]
    NotAPermutation { n: usize, detail: String },

    #[error("invalid lattice path: {0}")]
    InvalidPath(String),

    #[error("invalid parking function: {0}")]
    InvalidParkingFunction(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid root ideal: {0}")]
    InvalidIdeal(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{what} = {value} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("time budget of {0:.1}s exhausted")]
    BudgetExceeded(f64),

    #[error("falsified: {0}")]
    Falsified(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_cap(what: &'static str, value: usize, cap: usize) -> Result<()> {
    if value > cap {
        Err(Error::CapExceeded { what, value, cap })
    } else {
        Ok(())
    }
}
