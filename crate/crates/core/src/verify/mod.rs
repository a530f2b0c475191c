//! Invariant suites, registered by name and run with shared bounds.

mod suites;

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::valuative::SubdivisionWitness;

pub use suites::{
    AxiomsSuite, DualitySuite, FlacetsSuite, IdentitiesSuite, PositroidsSuite, SvalsSuite,
    ValuationSuite,
};

/// Bounds shared by every suite. `None` means the suite's own default.
#[derive(Debug, Clone, Default)]
pub struct SuiteConfig {
    pub n: Option<usize>,
    pub samples: Option<usize>,
    pub seed: u64,
    pub witness: Option<SubdivisionWitness>,
}

/// Result of one named property over a batch of cases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    /// The first failing case in input order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Runs `f` on every case in parallel; `f` returns a description of the
/// failure, if any. The reported counterexample is the first failure in
/// input order, independent of scheduling.
pub fn run_check<T, F>(name: impl Into<String>, cases: &[T], f: F) -> CheckOutcome
where
    T: Sync,
    F: Fn(&T) -> Option<String> + Sync,
{
    let failures: Vec<(usize, String)> = cases
        .par_iter()
        .enumerate()
        .filter_map(|(i, c)| f(c).map(|msg| (i, msg)))
        .collect();
    CheckOutcome {
        name: name.into(),
        cases: cases.len(),
        failures: failures.len(),
        counterexample: failures.into_iter().min_by_key(|(i, _)| *i).map(|(_, m)| m),
        note: None,
    }
}

/// A single yes/no fact.
pub fn single_check(name: impl Into<String>, failure: Option<String>) -> CheckOutcome {
    CheckOutcome {
        name: name.into(),
        cases: 1,
        failures: failure.is_some() as usize,
        counterexample: failure,
        note: None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().map(|c| c.failures).sum()
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub trait VerificationSuite: Send + Sync {
    fn name(&self) -> &str;
    fn description(&self) -> &str;
    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport>;
}

#[derive(Clone)]
pub struct SuiteRegistry {
    entries: BTreeMap<String, Arc<dyn VerificationSuite>>,
}

impl Default for SuiteRegistry {
    fn default() -> Self {
        let mut r = SuiteRegistry {
            entries: BTreeMap::new(),
        };
        r.register(Arc::new(AxiomsSuite));
        r.register(Arc::new(DualitySuite));
        r.register(Arc::new(FlacetsSuite));
        r.register(Arc::new(PositroidsSuite));
        r.register(Arc::new(SvalsSuite));
        r.register(Arc::new(ValuationSuite));
        r.register(Arc::new(IdentitiesSuite));
        r
    }
}

impl SuiteRegistry {
    pub fn register(&mut self, s: Arc<dyn VerificationSuite>) {
        self.entries.insert(s.name().to_string(), s);
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn VerificationSuite>> {
        self.entries
            .get(name)
            .cloned()
            .ok_or_else(|| Error::Unknown {
                kind: "suite",
                name: name.to_string(),
            })
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.keys().map(String::as_str).collect()
    }

    pub fn suites(&self) -> impl Iterator<Item = &Arc<dyn VerificationSuite>> {
        self.entries.values()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counterexample_is_first_in_order() {
        let cases: Vec<u32> = (0..1000).collect();
        let out = run_check("odd multiples of 7", &cases, |&c| {
            (c % 7 == 3).then(|| format!("case {c}"))
        });
        assert_eq!(out.cases, 1000);
        assert_eq!(out.failures, 143);
        assert_eq!(out.counterexample.as_deref(), Some("case 3"));
    }

    #[test]
    fn registry_names() {
        let reg = SuiteRegistry::default();
        assert_eq!(
            reg.names(),
            vec![
                "axioms",
                "duality",
                "flacets",
                "identities",
                "positroids",
                "svals",
                "valuation"
            ]
        );
        assert!(reg.get("nope").is_err());
    }

    #[test]
    fn small_runs_pass() {
        let reg = SuiteRegistry::default();
        let cfg = SuiteConfig {
            n: Some(4),
            samples: Some(10),
            seed: 3,
            witness: None,
        };
        for s in reg.suites() {
            let report = s.run(&cfg).unwrap();
            assert!(report.passed(), "{}: {:?}", s.name(), report);
        }
    }
}
