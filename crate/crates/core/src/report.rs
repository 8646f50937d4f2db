//! Verdicts and exhaustive law checking.

use std::fmt;

use serde::Serialize;

/// Default number of violations kept in a report.
pub const DEFAULT_VIOLATION_CAP: usize = 10;

/// A failed law together with the first witness found in lexicographic
/// element order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: String,
    pub witness: Vec<String>,
    pub detail: String,
}

impl Violation {
    pub fn new(law: impl Into<String>, witness: Vec<String>, detail: impl Into<String>) -> Self {
        Violation {
            law: law.into(),
            witness,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at ({})", self.law, self.witness.join(","))?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

/// Pass/fail outcome of a one-law check.
pub type Verdict = Result<(), Violation>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn pass() -> Self {
        VerificationReport {
            passed: true,
            violations: Vec::new(),
        }
    }

    pub fn from_violations(violations: Vec<Violation>) -> Self {
        VerificationReport {
            passed: violations.is_empty(),
            violations,
        }
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub fn merge(mut self, other: VerificationReport, cap: usize) -> Self {
        for v in other.violations {
            if self.violations.len() >= cap {
                break;
            }
            self.violations.push(v);
        }
        self.passed = self.violations.is_empty();
        self
    }
}

/// Anything whose elements can be printed by index.
pub trait Named {
    fn size(&self) -> usize;
    fn element_name(&self, x: usize) -> &str;
}

/// Quantifier range of one law variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Domain {
    All,
    GroupPart,
    IntegralPart,
}

/// A universally quantified law. `check` returns a description of the
/// failure for one assignment, or `None` when the law holds there.
pub(crate) struct Law<S: ?Sized> {
    pub name: &'static str,
    pub domains: &'static [Domain],
    pub check: fn(&S, &[usize]) -> Option<String>,
}

/// Checks every law over the full product of its domains. Each failing law
/// contributes one violation: the first failing tuple in lexicographic order.
pub(crate) fn run_laws<S: Named + ?Sized>(
    s: &S,
    laws: &[Law<S>],
    resolve: impl Fn(Domain) -> Vec<usize>,
    cap: usize,
) -> VerificationReport {
    let mut violations = Vec::new();
    for law in laws {
        if violations.len() >= cap {
            break;
        }
        let ranges: Vec<Vec<usize>> = law.domains.iter().map(|&d| resolve(d)).collect();
        if let Some((tuple, detail)) = first_failure(s, law, &ranges) {
            let witness = tuple.iter().map(|&x| s.element_name(x).to_string()).collect();
            violations.push(Violation::new(law.name, witness, detail));
        }
    }
    VerificationReport::from_violations(violations)
}

fn first_failure<S: ?Sized>(
    s: &S,
    law: &Law<S>,
    ranges: &[Vec<usize>],
) -> Option<(Vec<usize>, String)> {
    if ranges.iter().any(|r| r.is_empty()) {
        return None;
    }
    let mut idx = vec![0usize; ranges.len()];
    let mut tuple: Vec<usize> = ranges.iter().map(|r| r[0]).collect();
    loop {
        if let Some(detail) = (law.check)(s, &tuple) {
            return Some((tuple, detail));
        }
        // odometer, last variable fastest
        let mut k = ranges.len();
        loop {
            if k == 0 {
                return None;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < ranges[k].len() {
                tuple[k] = ranges[k][idx[k]];
                break;
            }
            idx[k] = 0;
            tuple[k] = ranges[k][0];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Digits;
    impl Named for Digits {
        fn size(&self) -> usize {
            3
        }
        fn element_name(&self, x: usize) -> &str {
            ["0", "1", "2"][x]
        }
    }

    #[test]
    fn first_witness_is_lexicographic() {
        let laws = [Law::<Digits> {
            name: "x+y<3",
            domains: &[Domain::All, Domain::All],
            check: |_, v| (v[0] + v[1] >= 3).then(|| format!("{}", v[0] + v[1])),
        }];
        let r = run_laws(&Digits, &laws, |_| vec![0, 1, 2], 10);
        assert!(!r.passed);
        assert_eq!(r.violations[0].witness, vec!["1", "2"]);
        assert_eq!(r.violations[0].detail, "3");
    }

    #[test]
    fn cap_limits_violations() {
        let fail: Law<Digits> = Law {
            name: "never",
            domains: &[Domain::All],
            check: |_, _| Some(String::new()),
        };
        let laws = [
            Law { ..fail },
            Law {
                name: "never2",
                domains: &[Domain::All],
                check: |_, _| Some(String::new()),
            },
        ];
        let r = run_laws(&Digits, &laws, |_| vec![0], 1);
        assert_eq!(r.violations.len(), 1);
        assert!(!r.passed);
    }
}
