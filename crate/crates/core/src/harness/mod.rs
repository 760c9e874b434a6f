//! Cross-check suites and their reports.
//!
//! Every suite evaluates its cases in parallel and assembles the report in
//! case order, so the output depends only on the inputs and the seed.

pub mod corpus;
pub mod suites;

use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub use suites::{
    suite_appendix_family, suite_jets_modp, suite_lct_consistency, suite_lifting_descent, suite_mld_consistency,
    translated_mld_bound,
};

pub const DEFAULT_SEED: u64 = 2024;
pub const SUITE_NAMES: [&str; 5] = ["appendix", "mld", "lct", "lifting", "jets"];
pub const DEFAULT_PRIMES: [u64; 5] = [2, 3, 5, 7, 13];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseStatus {
    Pass,
    Fail,
    /// The routes disagree and at least one of them is not certified.
    Inconclusive,
    /// Not applicable, e.g. a polynomial that vanishes mod `p`.
    Skipped,
}

impl CaseStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseStatus::Pass => "pass",
            CaseStatus::Fail => "fail",
            CaseStatus::Inconclusive => "inconclusive",
            CaseStatus::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseRecord {
    pub id: String,
    /// One-line description of the inputs.
    pub inputs: String,
    pub route_a: String,
    pub route_b: String,
    pub status: CaseStatus,
    pub note: String,
}

impl CaseRecord {
    pub fn new(id: String, inputs: String, route_a: String, route_b: String, status: CaseStatus) -> Self {
        Self {
            id,
            inputs,
            route_a,
            route_b,
            status,
            note: String::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    /// First 16 hex digits of the SHA-256 of the inputs.
    pub fn inputs_digest(&self) -> String {
        Sha256::digest(self.inputs.as_bytes())
            .iter()
            .take(8)
            .fold(String::new(), |mut s, b| {
                let _ = write!(s, "{b:02x}");
                s
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub cases: Vec<CaseRecord>,
    /// Suite-level observations, e.g. certification rates.
    pub notes: Vec<String>,
    /// Suite-level checks that are not tied to one case.
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn new(suite: &str, seed: u64, cases: Vec<CaseRecord>) -> Self {
        Self {
            suite: suite.to_string(),
            seed,
            cases,
            notes: Vec::new(),
            failures: Vec::new(),
        }
    }

    pub fn count(&self, status: CaseStatus) -> usize {
        self.cases.iter().filter(|c| c.status == status).count()
    }

    /// No failing or inconclusive case and no suite-level failure.
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.count(CaseStatus::Fail) == 0 && self.count(CaseStatus::Inconclusive) == 0
    }

    /// `suite, case-id, inputs-digest, route A, route B, status`, tab separated.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}",
                self.suite,
                c.id,
                c.inputs_digest(),
                c.route_a,
                c.route_b,
                c.status.as_str()
            );
        }
        out
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite {} seed={}", self.suite, self.seed);
        let _ = writeln!(
            out,
            "cases: {}, pass: {}, fail: {}, inconclusive: {}, skipped: {}",
            self.cases.len(),
            self.count(CaseStatus::Pass),
            self.count(CaseStatus::Fail),
            self.count(CaseStatus::Inconclusive),
            self.count(CaseStatus::Skipped)
        );
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        for c in self.cases.iter().filter(|c| matches!(c.status, CaseStatus::Fail | CaseStatus::Inconclusive)) {
            let _ = writeln!(
                out,
                "{} {}: inputs [{}] A: {} B: {}{}",
                c.status.as_str(),
                c.id,
                c.inputs,
                c.route_a,
                c.route_b,
                if c.note.is_empty() { String::new() } else { format!(" ({})", c.note) }
            );
        }
        for f in &self.failures {
            let _ = writeln!(out, "fail: {f}");
        }
        let _ = writeln!(out, "result: {}", if self.passed() { "pass" } else { "fail" });
        out
    }
}

/// Runs a suite by name with its default parameters.
pub fn run_suite(name: &str, seed: u64) -> Result<SuiteReport> {
    match name {
        "appendix" => suite_appendix_family(20),
        "mld" => Ok(suite_mld_consistency(&corpus::mld_corpus())),
        "lct" => Ok(suite_lct_consistency(&corpus::lct_corpus())),
        "lifting" => suite_lifting_descent(&DEFAULT_PRIMES, 50, seed),
        "jets" => suite_jets_modp(&DEFAULT_PRIMES),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
    .map(|mut r| {
        r.seed = seed;
        r
    })
}
