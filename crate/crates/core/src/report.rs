//! Structured diagnostics.
//!
//! Validation operations never panic and never return `Err` on a *mathematical*
//! failure; they collect every violated law together with the first witness,
//! so the caller (and ultimately the CLI) can surface exactly which basis
//! instance broke which identity.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// One violated law with a human-readable witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    /// Short stable identifier of the law, e.g. `"associativity"`.
    pub check: String,
    /// First failing instance, in basis coordinates.
    pub witness: String,
}

/// Outcome of a validation pass: empty iff the object is valid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub findings: Vec<Finding>,
}

impl Report {
    pub fn new() -> Self {
        Report { findings: Vec::new() }
    }

    pub fn push(&mut self, check: impl Into<String>, witness: impl Into<String>) {
        self.findings.push(Finding { check: check.into(), witness: witness.into() });
    }

    pub fn is_ok(&self) -> bool {
        self.findings.is_empty()
    }

    pub fn merge(&mut self, other: Report) {
        self.findings.extend(other.findings);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        for (i, finding) in self.findings.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}: {}", finding.check, finding.witness)?;
        }
        Ok(())
    }
}

/// Result of one named check in an axiom suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomResult {
    /// Stable name of the axiom or derived identity.
    pub axiom: String,
    /// Number of basis instances examined.
    pub instances: usize,
    /// First failing instance, if any.
    pub failure: Option<String>,
}

impl AxiomResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Per-axiom pass/fail outcome of a full bialgebroid verification.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomSuite {
    pub results: Vec<AxiomResult>,
}

impl AxiomSuite {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(AxiomResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult> {
        self.results.iter().filter(|r| !r.passed())
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.axiom == axiom)
    }
}

impl fmt::Display for AxiomSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.results.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            match &r.failure {
                None => write!(f, "{}: pass ({} instances)", r.axiom, r.instances)?,
                Some(w) => write!(f, "{}: FAIL at {}", r.axiom, w)?,
            }
        }
        Ok(())
    }
}
