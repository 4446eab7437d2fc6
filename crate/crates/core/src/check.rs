//! Structured pass/fail evidence for a single verified identity.

use std::fmt::Display;

/// One verified congruence or identity: both sides rendered, a verdict, and
/// an optional witness with the failing detail. `pass` holds exactly when
/// the two sides agree in the claim's ambient structure (mod p, exact
/// integer, sign, or a stated tolerance).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub claim: &'static str,
    pub p: u64,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    pub witness: Option<String>,
}

impl CheckResult {
    /// Builds a result by comparing two displayable values for equality.
    pub fn compare<T: PartialEq + Display>(claim: &'static str, p: u64, lhs: T, rhs: T) -> Self {
        CheckResult {
            claim,
            p,
            pass: lhs == rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            witness: None,
        }
    }

    pub fn with_witness(mut self, witness: String) -> Self {
        self.witness = Some(witness);
        self
    }
}
