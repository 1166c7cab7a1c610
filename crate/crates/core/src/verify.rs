//! Cross-checks of the fast path against the oracles, grouped into suites.
//! Each suite stops at its first counterexample.

use std::fmt;

use crate::oracle::{self, ENUMERATION_LIMIT};
use crate::pentagonal::pentagonal_indicator;
use crate::restricted::{p_m, q_m};
use crate::{Count, Error, PTable, Restriction, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Upper bound for the enumeration-based suites; at most 60.
    pub max_n: u64,
    pub max_m: u64,
    /// Upper bound for the dynamic-programming suites.
    pub dp_max_n: u64,
}

impl VerifyConfig {
    pub fn new(max_n: u64, max_m: u64, dp_max_n: Option<u64>) -> Result<Self> {
        if max_n > ENUMERATION_LIMIT {
            return Err(Error::EnumerationLimit {
                n: max_n,
                limit: ENUMERATION_LIMIT,
            });
        }
        Ok(VerifyConfig {
            max_n,
            max_m,
            dp_max_n: dp_max_n.unwrap_or(max_n),
        })
    }

    /// Largest table index any suite reads.
    pub fn table_extent(&self) -> u64 {
        self.max_n.max(self.dp_max_n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Recurrence,
    Formula,
    Enumeration,
    PentagonalTheorem,
    Glaisher,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Recurrence,
        Suite::Formula,
        Suite::Enumeration,
        Suite::PentagonalTheorem,
        Suite::Glaisher,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Recurrence => "recurrence-vs-dp",
            Suite::Formula => "formula-vs-dp",
            Suite::Enumeration => "enumeration",
            Suite::PentagonalTheorem => "pentagonal-theorem",
            Suite::Glaisher => "glaisher-cross",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub what: &'static str,
    pub n: u64,
    pub m: Option<u64>,
    pub expected: String,
    pub got: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: n={}", self.what, self.n)?;
        if let Some(m) = self.m {
            write!(f, " m={m}")?;
        }
        write!(f, " expected={} got={}", self.expected, self.got)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: u64,
    pub failure: Option<Counterexample>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suites: Vec<SuiteReport>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    pub fn first_failure(&self) -> Option<&Counterexample> {
        self.suites.iter().find_map(|s| s.failure.as_ref())
    }
}

/// Tallies checks and remembers the first mismatch.
struct Tally {
    checks: u64,
    failure: Option<Counterexample>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checks: 0,
            failure: None,
        }
    }

    fn done(&self) -> bool {
        self.failure.is_some()
    }

    fn compare<T: PartialEq + fmt::Display>(
        &mut self,
        what: &'static str,
        n: u64,
        m: Option<u64>,
        expected: &T,
        got: &T,
    ) {
        self.checks += 1;
        if expected != got && self.failure.is_none() {
            self.failure = Some(Counterexample {
                what,
                n,
                m,
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }

    fn compare_result(
        &mut self,
        what: &'static str,
        n: u64,
        m: Option<u64>,
        expected: &Count,
        got: Result<Count>,
    ) {
        match got {
            Ok(v) => self.compare(what, n, m, expected, &v),
            Err(e) => {
                self.checks += 1;
                if self.failure.is_none() {
                    self.failure = Some(Counterexample {
                        what,
                        n,
                        m,
                        expected: expected.to_string(),
                        got: format!("error ({e})"),
                    });
                }
            }
        }
    }

    fn into_report(self, suite: Suite) -> SuiteReport {
        SuiteReport {
            suite,
            checks: self.checks,
            failure: self.failure,
        }
    }
}

/// Runs every suite against `table`, extending it as needed.
pub fn run(table: &mut PTable, config: &VerifyConfig) -> Result<Report> {
    table.extend(config.table_extent());
    let suites = Suite::ALL
        .iter()
        .map(|&s| run_suite(table, config, s))
        .collect::<Result<Vec<_>>>()?;
    Ok(Report { suites })
}

pub fn run_suite(table: &mut PTable, config: &VerifyConfig, suite: Suite) -> Result<SuiteReport> {
    let mut tally = Tally::new();
    match suite {
        Suite::Recurrence => {
            let dp = oracle::p_dp_table(config.dp_max_n);
            for (n, expected) in dp.iter().enumerate() {
                let got = table.p(n as i64);
                tally.compare("p(n)", n as u64, None, expected, &got);
                if tally.done() {
                    break;
                }
            }
        }
        Suite::Formula => {
            'outer: for m in 1..=config.max_m {
                let pm = oracle::p_m_dp_table(m, config.dp_max_n)?;
                let qm = oracle::q_m_dp_table(m, config.dp_max_n)?;
                for n in 0..=config.dp_max_n {
                    let i = n as usize;
                    tally.compare_result("P_m(n)", n, Some(m), &pm[i], p_m(table, m, n));
                    tally.compare_result("Q_m(n)", n, Some(m), &qm[i], q_m(table, m, n));
                    if tally.done() {
                        break 'outer;
                    }
                }
            }
        }
        Suite::Enumeration => {
            let restrictions: Vec<Restriction> = (1..=config.max_m)
                .flat_map(|m| {
                    [
                        Restriction::modulus_free(m),
                        Restriction::multiplicity_bound(m),
                    ]
                })
                .collect::<Result<_>>()?;
            for n in 0..=config.max_n {
                let mut total = 0u64;
                let mut hits = vec![0u64; restrictions.len()];
                for partition in oracle::enumerate_partitions(n)? {
                    total += 1;
                    for (hit, r) in hits.iter_mut().zip(&restrictions) {
                        if r.admits(partition.parts()) {
                            *hit += 1;
                        }
                    }
                }
                let p = table.p(n as i64);
                tally.compare("partition count", n, None, &Count::from(total), &p);
                for (hit, r) in hits.iter().zip(&restrictions) {
                    let got = crate::restricted::count(table, *r, n);
                    let what = match r.kind() {
                        crate::restricted::RestrictionKind::ModulusFree => "P_m(n) by enumeration",
                        crate::restricted::RestrictionKind::MultiplicityBound => {
                            "Q_m(n) by enumeration"
                        }
                    };
                    tally.compare_result(what, n, Some(r.m()), &Count::from(*hit), got);
                }
                if tally.done() {
                    break;
                }
            }
        }
        Suite::PentagonalTheorem => {
            for n in 1..=config.max_n {
                let signed = oracle::distinct_signed_sum(n)?;
                tally.compare(
                    "signed distinct sum",
                    n,
                    None,
                    &signed,
                    &pentagonal_indicator(n),
                );
                if tally.done() {
                    break;
                }
            }
        }
        Suite::Glaisher => {
            'outer: for m in 1..=config.max_m {
                let pm = oracle::p_m_dp_table(m, config.dp_max_n)?;
                let qm = oracle::q_m_dp_table(m, config.dp_max_n)?;
                for n in 0..=config.dp_max_n {
                    let i = n as usize;
                    tally.compare_result("P_m(n) vs Q_m DP", n, Some(m), &qm[i], p_m(table, m, n));
                    tally.compare_result("Q_m(n) vs P_m DP", n, Some(m), &pm[i], q_m(table, m, n));
                    if tally.done() {
                        break 'outer;
                    }
                }
            }
        }
    }
    Ok(tally.into_report(suite))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clean_table_passes() {
        let config = VerifyConfig::new(30, 5, None).unwrap();
        let report = run(&mut PTable::new(), &config).unwrap();
        assert_eq!(report.suites.len(), 5);
        assert!(report.passed(), "{:?}", report.first_failure());
        assert!(report.suites.iter().all(|s| s.checks > 0));
    }

    #[test]
    fn limit_is_enforced() {
        assert!(matches!(
            VerifyConfig::new(61, 5, None),
            Err(Error::EnumerationLimit { n: 61, limit: 60 })
        ));
        let c = VerifyConfig::new(10, 2, Some(300)).unwrap();
        assert_eq!(c.table_extent(), 300);
    }

    #[test]
    fn corrupt_entry_is_named() {
        let config = VerifyConfig::new(20, 3, Some(50)).unwrap();
        let mut table = PTable::new();
        table.extend(config.table_extent());
        let bumped = table.get(23).unwrap() + 1u32;
        table.overwrite_entry(23, bumped);
        let report = run(&mut table, &config).unwrap();
        assert!(!report.passed());
        let first = report.first_failure().unwrap();
        assert_eq!(report.suites[0].suite, Suite::Recurrence);
        assert_eq!(first.n, 23);
        assert_eq!(first.expected, "1255");
        assert_eq!(first.got, "1256");
    }
}
