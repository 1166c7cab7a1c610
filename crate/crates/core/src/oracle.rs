//! Slow, independent counting paths used only to check the fast ones.
//!
//! None of these functions touch pentagonal numbers or [`crate::PTable`]:
//! the dynamic-programming counters multiply out the generating products
//! one part size at a time, and the enumerator lists partitions outright.

use std::fmt;

use num_traits::{One, Zero};

use crate::{Count, Error, Restriction, Result};

/// Largest `n` accepted by exhaustive enumeration. `p(60) = 966467`.
pub const ENUMERATION_LIMIT: u64 = 60;

/// A partition stored as non-increasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Sorts `parts` into non-increasing order. Panics on a zero part.
    pub fn new(mut parts: Vec<u64>) -> Self {
        assert!(parts.iter().all(|&p| p >= 1), "parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] != w[1])
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Iterator over the partitions of `n` in decreasing lexicographic order.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<u64>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.take()?;
        let out = Partition {
            parts: parts.clone(),
        };
        self.current = successor(parts);
        Some(out)
    }
}

/// Next partition in decreasing lexicographic order: lower the last part
/// above 1 by one, then refill the freed amount greedily with parts no
/// larger than it.
fn successor(mut parts: Vec<u64>) -> Option<Vec<u64>> {
    let pivot = parts.iter().rposition(|&p| p > 1)?;
    let ones = (parts.len() - pivot - 1) as u64;
    let cap = parts[pivot] - 1;
    let mut rest = ones + 1;
    parts.truncate(pivot);
    parts.push(cap);
    while rest > 0 {
        let next = rest.min(cap);
        parts.push(next);
        rest -= next;
    }
    Some(parts)
}

fn guard(n: u64) -> Result<()> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::EnumerationLimit {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(())
}

/// Every partition of `n`, largest first. `n = 0` yields the empty partition.
pub fn enumerate_partitions(n: u64) -> Result<Partitions> {
    guard(n)?;
    let first = if n == 0 { Vec::new() } else { vec![n] };
    Ok(Partitions {
        current: Some(first),
    })
}

/// Counts the partitions of `n` admitted by `restriction`, by enumeration.
pub fn count_by_predicate(n: u64, restriction: Restriction) -> Result<Count> {
    let hits = enumerate_partitions(n)?
        .filter(|p| restriction.admits(p.parts()))
        .count();
    Ok(Count::from(hits))
}

/// `sum (-1)^(number of parts)` over the partitions of `n` into distinct parts.
pub fn distinct_signed_sum(n: u64) -> Result<i64> {
    Ok(enumerate_partitions(n)?
        .filter(Partition::is_distinct)
        .map(|p| if p.num_parts() % 2 == 0 { 1 } else { -1 })
        .sum())
}

fn table_len(n: u64) -> usize {
    usize::try_from(n)
        .ok()
        .and_then(|n| n.checked_add(1))
        .expect("table size exceeds address space")
}

/// Unbounded-multiplicity DP restricted to part sizes satisfying `allowed`:
/// `acc[t] += acc[t - s]` for each allowed size `s`.
fn unbounded_dp(n: u64, allowed: impl Fn(u64) -> bool) -> Vec<Count> {
    let len = table_len(n);
    let mut acc = vec![Count::zero(); len];
    acc[0] = Count::one();
    for s in (1..len).filter(|&s| allowed(s as u64)) {
        for t in s..len {
            let (lo, hi) = acc.split_at_mut(t);
            hi[0] += &lo[t - s];
        }
    }
    acc
}

/// `p(0), ..., p(n)` by the part-size DP.
pub fn p_dp_table(n: u64) -> Vec<Count> {
    unbounded_dp(n, |_| true)
}

/// `p(n)` without Euler's recurrence.
pub fn p_dp(n: u64) -> Count {
    p_dp_table(n).pop().expect("non-empty table")
}

/// `P_m(0), ..., P_m(n)`: partitions into parts not divisible by `m`.
pub fn p_m_dp_table(m: u64, n: u64) -> Result<Vec<Count>> {
    if m == 0 {
        return Err(Error::InvalidModulus(m));
    }
    Ok(unbounded_dp(n, |s| s % m != 0))
}

pub fn p_m_dp(m: u64, n: u64) -> Result<Count> {
    Ok(p_m_dp_table(m, n)?.pop().expect("non-empty table"))
}

/// `Q_m(0), ..., Q_m(n)`: partitions where each part size occurs at most
/// `m - 1` times.
pub fn q_m_dp_table(m: u64, n: u64) -> Result<Vec<Count>> {
    if m == 0 {
        return Err(Error::InvalidModulus(m));
    }
    let len = table_len(n);
    let mut acc = vec![Count::zero(); len];
    acc[0] = Count::one();
    for s in 1..len {
        // descending t keeps acc[t - c*s] at its value before size s
        for t in (s..len).rev() {
            let max_copies = (m - 1).min((t / s) as u64) as usize;
            let mut total = Count::zero();
            for c in 1..=max_copies {
                total += &acc[t - c * s];
            }
            acc[t] += total;
        }
    }
    Ok(acc)
}

pub fn q_m_dp(m: u64, n: u64) -> Result<Count> {
    Ok(q_m_dp_table(m, n)?.pop().expect("non-empty table"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: u64) -> Count {
        Count::from(v)
    }

    fn listed(n: u64) -> Vec<Vec<u64>> {
        enumerate_partitions(n)
            .unwrap()
            .map(|p| p.parts().to_vec())
            .collect()
    }

    #[test]
    fn enumerates_zero_and_four() {
        assert_eq!(listed(0), vec![Vec::<u64>::new()]);
        assert_eq!(
            listed(4),
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn enumeration_order_and_shape() {
        let all: Vec<Partition> = enumerate_partitions(17).unwrap().collect();
        assert_eq!(all.len(), 297);
        assert!(all.windows(2).all(|w| w[0] > w[1]));
        for p in &all {
            assert_eq!(p.weight(), 17);
            assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
            assert!(p.parts().iter().all(|&x| x >= 1));
        }
    }

    #[test]
    fn enumeration_guard() {
        assert!(enumerate_partitions(60).is_ok());
        let err = enumerate_partitions(61).unwrap_err();
        assert!(matches!(err, Error::EnumerationLimit { n: 61, limit: 60 }));
        assert!(err.to_string().contains("60"));
        assert!(count_by_predicate(61, Restriction::modulus_free(2).unwrap()).is_err());
        assert!(distinct_signed_sum(61).is_err());
    }

    #[test]
    fn predicate_counts() {
        let mf = |m| Restriction::modulus_free(m).unwrap();
        let mb = |m| Restriction::multiplicity_bound(m).unwrap();
        assert_eq!(count_by_predicate(17, mf(3)).unwrap(), c(108));
        assert_eq!(count_by_predicate(10, mf(2)).unwrap(), c(10));
        assert_eq!(count_by_predicate(5, mb(1)).unwrap(), c(0));
        assert_eq!(count_by_predicate(0, mb(1)).unwrap(), c(1));
        assert_eq!(count_by_predicate(17, mb(3)).unwrap(), c(108));
    }

    #[test]
    fn dp_examples() {
        assert_eq!(p_dp(0), c(1));
        assert_eq!(p_dp(5), c(7));
        assert_eq!(p_dp(17), c(297));
        assert_eq!(p_m_dp(3, 17).unwrap(), c(108));
        assert_eq!(p_m_dp(1, 7).unwrap(), c(0));
        assert_eq!(p_m_dp(2, 10).unwrap(), c(10));
        assert_eq!(q_m_dp(3, 17).unwrap(), c(108));
        assert_eq!(q_m_dp(2, 10).unwrap(), c(10));
        for m in 1..=5 {
            assert_eq!(q_m_dp(m, 0).unwrap(), c(1));
        }
        assert!(p_m_dp(0, 3).is_err());
        assert!(q_m_dp(0, 3).is_err());
    }

    #[test]
    fn signed_sums() {
        assert_eq!(distinct_signed_sum(5).unwrap(), 1);
        assert_eq!(distinct_signed_sum(3).unwrap(), 0);
        assert_eq!(distinct_signed_sum(12).unwrap(), -1);
    }

    #[test]
    fn enumeration_length_matches_dp() {
        let dp = p_dp_table(40);
        for n in 0..=40u64 {
            assert_eq!(
                Count::from(enumerate_partitions(n).unwrap().count()),
                dp[n as usize]
            );
        }
    }

    #[test]
    fn odd_parts_equal_distinct_parts() {
        for n in 0..=40 {
            assert_eq!(
                count_by_predicate(n, Restriction::modulus_free(2).unwrap()).unwrap(),
                count_by_predicate(n, Restriction::multiplicity_bound(2).unwrap()).unwrap(),
                "n = {n}"
            );
        }
    }
}
