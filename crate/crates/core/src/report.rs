//! Verdicts together with the random choices that produced them.

use serde::{Deserialize, Serialize};

pub const REPORT_SCHEMA: &str = "polyproof.report/1";

/// One random choice or shortcut taken during verification.
///
/// Ring elements are rendered as strings so that a report can be replayed
/// without knowing the ring statically.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// Rejected by a size or support check before any random choice.
    Precheck { reason: String },
    /// A random prime used to reduce integer coefficients.
    Prime { p: String },
    /// An evaluation point.
    Point { alpha: String },
    /// The modulus of a random extension field.
    Extension { modulus: String },
    /// A companion modulus `R` and projection vector `u`.
    Companion { modulus: String, u: Vec<String> },
    /// A companion modulus compared by full matrices.
    CompanionMatrix { modulus: String },
    /// A reduction modulo `X^i − 1` or `2^i − 1`.
    Fold { i: String },
    /// Decided by exact computation.
    Deterministic { reason: String },
}

/// Outcome of one verification.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema: String,
    pub verdict: bool,
    /// Upper bound on the probability of accepting a false identity.
    pub error_bound: f64,
    pub rounds: u64,
    pub method: String,
    pub witnesses: Vec<Witness>,
}

impl VerifyReport {
    pub fn new(method: impl Into<String>, error_bound: f64) -> Self {
        Self {
            schema: REPORT_SCHEMA.to_string(),
            verdict: true,
            error_bound,
            rounds: 0,
            method: method.into(),
            witnesses: Vec::new(),
        }
    }

    pub(crate) fn reject(mut self) -> Self {
        self.verdict = false;
        self
    }

    pub(crate) fn precheck(method: impl Into<String>, reason: impl Into<String>) -> Self {
        let mut r = Self::new(method, 0.0).reject();
        r.witnesses.push(Witness::Precheck { reason: reason.into() });
        r
    }

    pub(crate) fn deterministic(method: impl Into<String>, verdict: bool, reason: impl Into<String>) -> Self {
        let mut r = Self::new(method, 0.0);
        r.verdict = verdict;
        r.witnesses.push(Witness::Deterministic { reason: reason.into() });
        r
    }

    /// Appends the rounds and witnesses of a sub-verification and adopts its
    /// verdict.
    pub(crate) fn absorb(&mut self, inner: VerifyReport) {
        self.verdict = inner.verdict;
        self.rounds += inner.rounds;
        self.witnesses.extend(inner.witnesses);
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
