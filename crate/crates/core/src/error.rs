use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pole at q = {0}")]
    Pole(String),

    #[error("{what} = {value} exceeds the supported maximum {max}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        max: usize,
    },

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("invalid Hessenberg function: {0}")]
    InvalidHessenberg(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("not a polynomial: {0}")]
    NotPolynomial(String),

    #[error("{action} action does not preserve the {flavor} congruences: {detail}")]
    ActionNotPreserving {
        action: &'static str,
        flavor: &'static str,
        detail: String,
    },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by a request that is too large rather than
    /// malformed.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::OutOfRange { .. } | Error::Budget(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_range(what: &'static str, value: usize, max: usize) -> Result<()> {
    if value > max {
        Err(Error::OutOfRange { what, value, max })
    } else {
        Ok(())
    }
}
