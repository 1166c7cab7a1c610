//! Exact counting of integer partitions into parts not divisible by `m`.
//!
//! The fast path evaluates
//!
//! ```text
//! P_m(n) = p(n) + sum_{k >= 1} (-1)^k [ p(n - m k(3k-1)/2) + p(n - m k(3k+1)/2) ]
//! ```
//!
//! against a memoized table of the unrestricted partition function `p`,
//! itself built with Euler's recurrence. By Glaisher's theorem the same sum
//! counts partitions in which every part appears fewer than `m` times.
//!
//! Everything in [`oracle`] is an independent slow path (dynamic programming
//! and exhaustive enumeration) used to check the fast one; [`verify`] bundles
//! those checks into suites.

pub mod error;
pub mod oracle;
pub mod pentagonal;
pub mod ptable;
pub mod restricted;
pub mod verify;

pub use error::Error;
pub use pentagonal::{gp_terms, gp_terms_up_to, pentagonal_indicator, Branch, GpTerm, Sign};
pub use ptable::PTable;
pub use restricted::{complement, p_m, q_m, Evaluation, Restriction};

/// Arbitrary-precision nonnegative partition count.
pub type Count = num_bigint::BigUint;

pub type Result<T, E = Error> = std::result::Result<T, E>;
