use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A request exceeds a configured resource cap.
    #[error("{what}: requested {requested} exceeds the configured maximum {max}")]
    Capacity {
        what: &'static str,
        requested: u64,
        max: u64,
    },

    /// An argument lies outside what the supplied prime table covers.
    #[error("{what}: {value} is outside the sieved range 0..={limit}")]
    OutOfRange {
        what: &'static str,
        value: u64,
        limit: u64,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// `n - 3` has no odd-prime partition.
    #[error("{n} has no decomposition 3 + p + q")]
    NoDecomposition { n: u64 },

    /// A Bezout identity was requested for a pair whose gcd is not the
    /// expected value.
    #[error("gcd mismatch for a = {a}: expected {expected}, found {found}")]
    GcdMismatch {
        a: u64,
        expected: String,
        found: String,
    },

    #[error("unknown claim code `{0}`")]
    UnknownClaim(String),
}
