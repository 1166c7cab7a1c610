use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus must be at least 1, got {0}")]
    InvalidModulus(u64),

    #[error("exhaustive enumeration is limited to n <= {limit}, got n = {n}")]
    EnumerationLimit { n: u64, limit: u64 },

    /// A signed sum that must be a nonnegative count came out negative.
    /// Only reachable when the backing table has been tampered with.
    #[error("alternating sum for n = {n} is negative; table entries are inconsistent")]
    NegativeCount { n: u64 },

    #[error("malformed table file: {0}")]
    Format(#[from] crate::ptable::FormatError),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
