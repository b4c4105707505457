use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} must be at least {min}, got {value}")]
    TooSmall {
        what: &'static str,
        value: u64,
        min: u64,
    },

    #[error("{n} is not a composite number")]
    NotComposite { n: u64 },

    #[error("residue {value} is outside Z_{n}")]
    ResidueOutOfRange { n: u64, value: u64 },

    #[error("{{{a},{b}}} is not a gcd-pair in Z_{n}")]
    NotGcdPair { n: u64, a: u64, b: u64 },

    #[error("{m} does not divide {n}")]
    NotDivisor { m: u64, n: u64 },

    #[error("S'_{d} is not a nonempty zero-divisor cell of Z_{n}")]
    InvalidCell { n: u64, d: u64 },

    #[error("{operation} requires {requirement}, got n = {n}")]
    Unsupported {
        operation: &'static str,
        requirement: &'static str,
        n: u64,
    },

    #[error("{search} is limited to n <= {bound}, got n = {n} (bound exceeded)")]
    BoundExceeded {
        search: &'static str,
        n: u64,
        bound: u64,
    },

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("construction failed validation: {0}")]
    Construction(String),

    #[error("no verification claim matches {0:?}")]
    UnknownClaim(String),
}

pub(crate) fn at_least(what: &'static str, value: u64, min: u64) -> Result<()> {
    if value < min {
        Err(Error::TooSmall { what, value, min })
    } else {
        Ok(())
    }
}
