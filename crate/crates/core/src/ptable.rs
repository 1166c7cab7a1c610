//! Memoized table of the unrestricted partition function `p(n)`.
//!
//! Entries are appended with Euler's recurrence
//!
//! ```text
//! p(i) = p(i-1) + p(i-2) - p(i-5) - p(i-7) + p(i-12) + p(i-15) - ...
//! ```
//!
//! which is the pentagonal sum with every sign flipped, since the pentagonal
//! terms have been moved to the other side of the equality.
//!
//! # Text format
//!
//! ```text
//! pcount-table v1 <highest>
//! p(0)
//! p(1)
//! ...
//! p(highest)
//! ```
//!
//! Every count is a plain decimal string on its own line.

use std::io::{BufRead, Write};

use num_bigint::BigUint;
use num_traits::{CheckedSub, One, ToPrimitive, Zero};
use thiserror::Error;

use crate::pentagonal::{gp_terms, Sign};
use crate::Count;

const MAGIC: &str = "pcount-table";
const VERSION: &str = "v1";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("empty input, expected a `{MAGIC} {VERSION} <highest>` header")]
    MissingHeader,
    #[error("bad header line {0:?}")]
    BadHeader(String),
    #[error("unsupported table version {0:?}")]
    UnsupportedVersion(String),
    #[error("line {line}: not a decimal count: {content:?}")]
    BadLine { line: usize, content: String },
    #[error("header promises {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("entry 0 must be 1")]
    BaseCase,
    #[error("entry {index} does not satisfy the partition recurrence")]
    Inconsistent { index: usize },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TableStats {
    /// New entries computed by the recurrence.
    pub extensions: u64,
    /// Pentagonal terms summed while computing them.
    pub terms: u64,
}

/// Append-only table with `counts[i] = p(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PTable {
    counts: Vec<Count>,
    stats: TableStats,
}

impl Default for PTable {
    fn default() -> Self {
        Self::new()
    }
}

impl PTable {
    /// A table holding only `p(0) = 1`.
    pub fn new() -> Self {
        PTable {
            counts: vec![Count::one()],
            stats: TableStats::default(),
        }
    }

    /// Builds a table from stored counts, checking that every entry is
    /// consistent with the recurrence.
    pub fn from_counts(counts: Vec<Count>) -> Result<Self, FormatError> {
        check_counts(&counts)?;
        Ok(PTable {
            counts,
            stats: TableStats::default(),
        })
    }

    pub fn highest(&self) -> u64 {
        (self.counts.len() - 1) as u64
    }

    pub fn counts(&self) -> &[Count] {
        &self.counts
    }

    pub fn stats(&self) -> TableStats {
        self.stats
    }

    /// Already-computed `p(n)`, if any.
    pub fn get(&self, n: u64) -> Option<&Count> {
        usize::try_from(n).ok().and_then(|i| self.counts.get(i))
    }

    /// Grows the table so that `highest() >= n`. Existing entries are untouched.
    pub fn extend(&mut self, n: u64) -> &mut Self {
        let target = usize::try_from(n).expect("table index exceeds address space");
        self.counts
            .reserve(target.saturating_sub(self.counts.len() - 1));
        while self.counts.len() <= target {
            let i = self.counts.len() as u64;
            let mut plus = BigUint::zero();
            let mut minus = BigUint::zero();
            for term in gp_terms().take_while(|t| t.value <= i) {
                let entry = &self.counts[(i - term.value) as usize];
                match term.sign.flipped() {
                    Sign::Positive => plus += entry,
                    Sign::Negative => minus += entry,
                }
                self.stats.terms += 1;
            }
            let value = plus
                .checked_sub(&minus)
                .unwrap_or_else(|| panic!("recurrence for p({i}) went negative; table is corrupt"));
            self.counts.push(value);
            self.stats.extensions += 1;
        }
        self
    }

    /// `p(j)`, with `p(j) = 0` for negative `j`. Extends the table on demand.
    pub fn p(&mut self, j: i64) -> Count {
        if j < 0 {
            return Count::zero();
        }
        let j = j as u64;
        self.extend(j);
        self.counts[j as usize].clone()
    }

    /// Replaces one stored entry without any validation. Exists so that the
    /// verification suites can be exercised against a known-bad table.
    pub fn overwrite_entry(&mut self, index: u64, value: Count) {
        self.counts[index as usize] = value;
    }

    pub fn write_to<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "{MAGIC} {VERSION} {}", self.highest())?;
        for c in &self.counts {
            writeln!(out, "{c}")?;
        }
        out.flush()
    }

    pub fn read_from<R: BufRead>(input: R) -> Result<Self, crate::Error> {
        let mut lines = input.lines();
        let header = lines.next().ok_or(FormatError::MissingHeader)??;
        let highest = parse_header(&header)?;
        let expected = highest
            .checked_add(1)
            .ok_or_else(|| FormatError::BadHeader(header.clone()))?;

        let mut counts = Vec::with_capacity(expected.min(1 << 20));
        for (idx, line) in lines.enumerate() {
            let line = line?;
            let line_no = idx + 2;
            if counts.len() == expected {
                if line.trim().is_empty() {
                    continue;
                }
                return Err(FormatError::LengthMismatch {
                    expected,
                    found: expected + 1,
                }
                .into());
            }
            let value = parse_count(&line).ok_or_else(|| FormatError::BadLine {
                line: line_no,
                content: line.clone(),
            })?;
            counts.push(value);
        }
        if counts.len() != expected {
            return Err(FormatError::LengthMismatch {
                expected,
                found: counts.len(),
            }
            .into());
        }
        Ok(Self::from_counts(counts)?)
    }
}

fn parse_header(line: &str) -> Result<usize, FormatError> {
    let mut fields = line.split(' ');
    match (fields.next(), fields.next(), fields.next(), fields.next()) {
        (Some(MAGIC), Some(VERSION), Some(h), None) => h
            .parse()
            .map_err(|_| FormatError::BadHeader(line.to_owned())),
        (Some(MAGIC), Some(v), _, _) if v != VERSION => {
            Err(FormatError::UnsupportedVersion(v.to_owned()))
        }
        _ => Err(FormatError::BadHeader(line.to_owned())),
    }
}

fn parse_count(line: &str) -> Option<Count> {
    if line.is_empty() || !line.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    // reject leading zeros so that the text form stays canonical
    if line.len() > 1 && line.starts_with('0') {
        return None;
    }
    line.parse().ok()
}

// 2^61 - 1
const CHECK_PRIME: u64 = (1 << 61) - 1;

/// Checks every entry against the recurrence modulo a large prime. A
/// tampered entry is detected unless the change is a multiple of the prime.
fn check_counts(counts: &[Count]) -> Result<(), FormatError> {
    match counts.first() {
        Some(c) if c.is_one() => {}
        _ => return Err(FormatError::BaseCase),
    }
    let modulus = BigUint::from(CHECK_PRIME);
    let residues: Vec<u64> = counts
        .iter()
        .map(|c| (c % &modulus).to_u64().expect("residue fits in u64"))
        .collect();
    for i in 1..residues.len() {
        let mut acc: u64 = 0;
        for term in gp_terms().take_while(|t| t.value <= i as u64) {
            let r = residues[i - term.value as usize];
            acc = match term.sign.flipped() {
                Sign::Positive => (acc + r) % CHECK_PRIME,
                Sign::Negative => (acc + CHECK_PRIME - r) % CHECK_PRIME,
            };
        }
        if acc != residues[i] {
            return Err(FormatError::Inconsistent { index: i });
        }
    }
    Ok(())
}
