//! Restricted partition counts via the generalized pentagonal sum
//!
//! ```text
//! P_m(n) = p(n) + sum_{k >= 1} (-1)^k [ p(n - m k(3k-1)/2) + p(n - m k(3k+1)/2) ]
//! ```
//!
//! `P_m(n)` counts partitions of `n` with no part divisible by `m`, and
//! `Q_m(n)` counts those in which every part appears fewer than `m` times.
//! Both equal the sum above; `q_m` does not run a computation of its own.
//! The oracle module checks that claim independently.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{CheckedSub, Zero};

use crate::pentagonal::{gp_terms, Sign};
use crate::{Count, Error, PTable, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RestrictionKind {
    /// No part is divisible by `m`.
    ModulusFree,
    /// Every part appears fewer than `m` times.
    MultiplicityBound,
}

/// A family of restricted partitions. `m >= 1` always holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Restriction {
    kind: RestrictionKind,
    m: u64,
}

impl Restriction {
    pub fn new(kind: RestrictionKind, m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidModulus(m));
        }
        Ok(Restriction { kind, m })
    }

    pub fn modulus_free(m: u64) -> Result<Self> {
        Self::new(RestrictionKind::ModulusFree, m)
    }

    pub fn multiplicity_bound(m: u64) -> Result<Self> {
        Self::new(RestrictionKind::MultiplicityBound, m)
    }

    pub fn kind(&self) -> RestrictionKind {
        self.kind
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// Whether a partition given by its parts (any order) satisfies the
    /// restriction.
    pub fn admits(&self, parts: &[u64]) -> bool {
        match self.kind {
            RestrictionKind::ModulusFree => parts.iter().all(|&p| p % self.m != 0),
            RestrictionKind::MultiplicityBound => {
                let mut sorted = parts.to_vec();
                sorted.sort_unstable();
                sorted
                    .chunk_by(|a, b| a == b)
                    .all(|run| (run.len() as u64) < self.m)
            }
        }
    }
}

impl fmt::Display for Restriction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RestrictionKind::ModulusFree => write!(f, "parts not divisible by {}", self.m),
            RestrictionKind::MultiplicityBound => {
                write!(f, "each part appearing fewer than {} times", self.m)
            }
        }
    }
}

/// Result of one pentagonal-sum evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub count: Count,
    /// Pentagonal terms that contributed, i.e. `|{g : m * g.value <= n}|`.
    pub terms: usize,
}

/// Evaluates the pentagonal sum for modulus `m` at `n`, extending `table`
/// as far as `n`.
pub fn evaluate(table: &mut PTable, m: u64, n: u64) -> Result<Evaluation> {
    if m == 0 {
        return Err(Error::InvalidModulus(m));
    }
    table.extend(n);
    let counts = table.counts();
    let at = |j: u64| &counts[j as usize];

    let mut plus: BigUint = at(n).clone();
    let mut minus = BigUint::zero();
    let mut terms = 0;
    for term in gp_terms() {
        let offset = match m.checked_mul(term.value) {
            Some(o) if o <= n => o,
            _ => break,
        };
        match term.sign {
            Sign::Positive => plus += at(n - offset),
            Sign::Negative => minus += at(n - offset),
        }
        terms += 1;
    }
    let count = plus.checked_sub(&minus).ok_or(Error::NegativeCount { n })?;
    Ok(Evaluation { count, terms })
}

/// Number of partitions of `n` into parts not divisible by `m`.
pub fn p_m(table: &mut PTable, m: u64, n: u64) -> Result<Count> {
    evaluate(table, m, n).map(|e| e.count)
}

/// Number of partitions of `n` in which each part appears fewer than `m` times.
pub fn q_m(table: &mut PTable, m: u64, n: u64) -> Result<Count> {
    evaluate(table, m, n).map(|e| e.count)
}

/// Number of partitions of `n` with at least one part divisible by `m`.
pub fn complement(table: &mut PTable, m: u64, n: u64) -> Result<Count> {
    let restricted = p_m(table, m, n)?;
    let total = table.get(n).expect("table extended to n");
    total
        .checked_sub(&restricted)
        .ok_or(Error::NegativeCount { n })
}

/// Count for an arbitrary [`Restriction`].
pub fn count(table: &mut PTable, restriction: Restriction, n: u64) -> Result<Count> {
    match restriction.kind() {
        RestrictionKind::ModulusFree => p_m(table, restriction.m(), n),
        RestrictionKind::MultiplicityBound => q_m(table, restriction.m(), n),
    }
}
