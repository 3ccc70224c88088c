//! Pass/fail findings shared by the verifiers.

use serde::Serialize;

use crate::config::Coverage;

/// One verified claim. A failed check always names a concrete witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coverage: Option<Coverage>,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

impl Check {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed: true, coverage: None, detail: detail.into(), witness: None }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>, witness: Vec<usize>) -> Self {
        Check { name: name.into(), passed: false, coverage: None, detail: detail.into(), witness: Some(witness) }
    }

    /// Pass iff `ok`; on failure the detail doubles as the explanation.
    pub fn expect(name: impl Into<String>, ok: bool, detail: impl Into<String>, witness: Vec<usize>) -> Self {
        if ok {
            Check::pass(name, detail)
        } else {
            Check::fail(name, detail, witness)
        }
    }

    /// Result of a tuple scan: passes iff no witness was found.
    pub fn scanned(name: impl Into<String>, (coverage, witness): (Coverage, Option<Vec<usize>>)) -> Self {
        let detail = match (&witness, coverage) {
            (None, Coverage::Exhaustive(n)) => format!("all {n} tuples"),
            (None, Coverage::Sampled(n)) => format!("{n} sampled tuples"),
            (Some(w), _) => format!("fails at {w:?}"),
        };
        Check { name: name.into(), passed: witness.is_none(), coverage: Some(coverage), detail, witness }
    }
}

/// Whether every check passed.
pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

/// The checks run for one theorem, plus the values the run determined.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub theorem: &'static str,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub facts: std::collections::BTreeMap<String, String>,
}

impl TheoremReport {
    pub fn new(theorem: &'static str) -> Self {
        TheoremReport { theorem, passed: true, checks: Vec::new(), facts: Default::default() }
    }

    pub fn push(&mut self, check: Check) {
        self.passed &= check.passed;
        self.checks.push(check);
    }

    pub fn fact(&mut self, key: &str, value: impl ToString) {
        self.facts.insert(key.to_string(), value.to_string());
    }
}
