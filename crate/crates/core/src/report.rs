//! Structured results of verification passes.
//!
//! Every checker in this crate returns a [`CheckReport`] (or, for
//! Maurer-Cartan sweeps, an [`MCReport`]) instead of a bare boolean, so that
//! the first failing witness and its exact residual survive into reports.
//! All maps are ordered; serialized reports are byte-stable.

use std::collections::BTreeMap;

use serde::Serialize;

/// Result of one identity check: name, pass flag, and on failure the first
/// violating tuple together with its residual, rendered with exact rationals.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub pass: bool,
    /// Number of cases evaluated (basis tuples, points, ...).
    pub checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    /// Residual of the first failure, keyed by basis label, values `p/q`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<BTreeMap<String, String>>,
}

impl CheckReport {
    pub fn pass(name: impl Into<String>, checked: u64) -> Self {
        CheckReport {
            name: name.into(),
            pass: true,
            checked,
            witness: None,
            residual: None,
        }
    }

    pub fn fail(
        name: impl Into<String>,
        checked: u64,
        witness: Vec<String>,
        residual: BTreeMap<String, String>,
    ) -> Self {
        CheckReport {
            name: name.into(),
            pass: false,
            checked,
            witness: Some(witness),
            residual: Some(residual),
        }
    }
}

/// One failing input tuple of a Maurer-Cartan sweep.
#[derive(Debug, Clone, Serialize)]
pub struct MCFailure {
    pub inputs: Vec<String>,
    pub residual: BTreeMap<String, String>,
}

/// Result of the arity-`arity` Maurer-Cartan check: the full list of failing
/// tuples (pass iff empty) and the number of tuples evaluated.
#[derive(Debug, Clone, Serialize)]
pub struct MCReport {
    pub arity: u8,
    pub pass: bool,
    pub tuples: u64,
    pub failures: Vec<MCFailure>,
}

impl MCReport {
    pub fn new(arity: u8, tuples: u64, failures: Vec<MCFailure>) -> Self {
        MCReport {
            arity,
            pass: failures.is_empty(),
            tuples,
            failures,
        }
    }

    pub fn first_witness(&self) -> Option<&MCFailure> {
        self.failures.first()
    }
}
