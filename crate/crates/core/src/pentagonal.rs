//! Generalized pentagonal numbers `k(3k-1)/2` and `k(3k+1)/2`, `k >= 1`.

use std::fmt;

/// Which of the two pentagonal expressions a term comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `k(3k-1)/2`
    Minus,
    /// `k(3k+1)/2`
    Plus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    /// `(-1)^k`.
    pub fn of_index(k: u64) -> Self {
        if k.is_multiple_of(2) {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

/// One generalized pentagonal term together with its sign `(-1)^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GpTerm {
    pub k: u64,
    pub branch: Branch,
    pub value: u64,
    pub sign: Sign,
}

impl GpTerm {
    /// Panics if `k == 0` or the value overflows `u64`.
    pub fn new(k: u64, branch: Branch) -> Self {
        assert!(k >= 1, "pentagonal index must be positive");
        let three_k = k.checked_mul(3).expect("pentagonal index overflow");
        let factor = match branch {
            Branch::Minus => three_k - 1,
            Branch::Plus => three_k + 1,
        };
        let doubled = k.checked_mul(factor).expect("pentagonal value overflow");
        // k and 3k +- 1 have opposite parities.
        debug_assert_eq!(doubled % 2, 0);
        GpTerm {
            k,
            branch,
            value: doubled / 2,
            sign: Sign::of_index(k),
        }
    }
}

/// Unbounded iterator over all generalized pentagonal terms in increasing
/// value order: 1, 2, 5, 7, 12, 15, 22, 26, ...
#[derive(Debug, Clone)]
pub struct GpTerms {
    k: u64,
    next_branch: Branch,
}

pub fn gp_terms() -> GpTerms {
    GpTerms {
        k: 1,
        next_branch: Branch::Minus,
    }
}

impl Iterator for GpTerms {
    type Item = GpTerm;

    fn next(&mut self) -> Option<GpTerm> {
        let term = GpTerm::new(self.k, self.next_branch);
        match self.next_branch {
            Branch::Minus => self.next_branch = Branch::Plus,
            Branch::Plus => {
                self.next_branch = Branch::Minus;
                self.k += 1;
            }
        }
        Some(term)
    }
}

/// All terms with `value <= limit`, increasing.
pub fn gp_terms_up_to(limit: u64) -> Vec<GpTerm> {
    gp_terms().take_while(|t| t.value <= limit).collect()
}

/// `(-1)^k` if `n = k(3k +- 1)/2` for some `k >= 1`, otherwise 0.
pub fn pentagonal_indicator(n: u64) -> i64 {
    gp_terms()
        .take_while(|t| t.value <= n)
        .find(|t| t.value == n)
        .map_or(0, |t| t.sign.as_i64())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn values(terms: &[GpTerm]) -> Vec<u64> {
        terms.iter().map(|t| t.value).collect()
    }

    #[test]
    fn first_four_terms() {
        use Branch::*;
        use Sign::*;
        let expected = [
            (1, Minus, 1, Negative),
            (1, Plus, 2, Negative),
            (2, Minus, 5, Positive),
            (2, Plus, 7, Positive),
        ];
        let got = gp_terms_up_to(7);
        assert_eq!(got.len(), expected.len());
        for (t, (k, b, v, s)) in got.iter().zip(expected) {
            assert_eq!((t.k, t.branch, t.value, t.sign), (k, b, v, s));
        }
    }

    #[test]
    fn empty_at_zero() {
        assert!(gp_terms_up_to(0).is_empty());
    }

    #[test]
    fn up_to_26() {
        let terms = gp_terms_up_to(26);
        assert_eq!(values(&terms), [1, 2, 5, 7, 12, 15, 22, 26]);
        let signs: Vec<i64> = terms.iter().map(|t| t.sign.as_i64()).collect();
        assert_eq!(signs, [-1, -1, 1, 1, -1, -1, 1, 1]);
        // limit just below a value excludes it
        assert_eq!(values(&gp_terms_up_to(25)), [1, 2, 5, 7, 12, 15, 22]);
    }

    #[test]
    fn indicator_examples() {
        assert_eq!(pentagonal_indicator(5), 1);
        assert_eq!(pentagonal_indicator(3), 0);
        assert_eq!(pentagonal_indicator(12), -1);
        assert_eq!(pentagonal_indicator(1), -1);
        assert_eq!(pentagonal_indicator(4), 0);
    }

    #[test]
    fn indicator_matches_enumeration() {
        let terms = gp_terms_up_to(1000);
        for n in 1..=1000u64 {
            let listed = terms.iter().any(|t| t.value == n);
            assert_eq!(pentagonal_indicator(n) != 0, listed, "n = {n}");
        }
    }

    #[test]
    fn strictly_increasing() {
        let vals = values(&gp_terms().take(2000).collect::<Vec<_>>());
        assert!(vals.windows(2).all(|w| w[0] < w[1]));
    }

    proptest! {
        #[test]
        fn branches_differ_by_index(k in 1u64..1_000_000) {
            let minus = GpTerm::new(k, Branch::Minus);
            let plus = GpTerm::new(k, Branch::Plus);
            prop_assert_eq!(plus.value - minus.value, k);
            prop_assert_eq!(minus.sign, plus.sign);
            prop_assert_eq!(minus.sign == Sign::Positive, k % 2 == 0);
        }
    }
}
