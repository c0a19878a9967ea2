//! Structured results for verification checks.
//!
//! Every check in this crate reports through [`CheckReport`] so that the
//! command-line tool and the examples can render outcomes uniformly. The
//! serialized field names are stable and part of the output format.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Outcome of a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// The first place a comparison went wrong.
///
/// `exponent` is the q-exponent for series checks; lattice checks reuse it
/// for the norm or genus at which the mismatch occurred. The two sides are
/// rendered as exact strings so nothing is lost to formatting.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub exponent: u64,
    pub expected: String,
    pub got: String,
}

/// Result of one verification check.
///
/// `precision` records the working size of the check: the series precision
/// for q-expansion identities, or the norm/genus cap for lattice sweeps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub precision: u64,
    pub status: CheckStatus,
    pub first_discrepancy: Option<Discrepancy>,
    pub notes: Option<String>,
}

impl CheckReport {
    /// A passing report.
    pub fn pass(name: &str, precision: u64) -> Self {
        CheckReport {
            name: name.to_string(),
            precision,
            status: CheckStatus::Pass,
            first_discrepancy: None,
            notes: None,
        }
    }

    /// A failing report carrying the first mismatch found.
    pub fn fail(
        name: &str,
        precision: u64,
        exponent: u64,
        expected: impl fmt::Display,
        got: impl fmt::Display,
    ) -> Self {
        CheckReport {
            name: name.to_string(),
            precision,
            status: CheckStatus::Fail,
            first_discrepancy: Some(Discrepancy {
                exponent,
                expected: expected.to_string(),
                got: got.to_string(),
            }),
            notes: None,
        }
    }

    /// Attaches a human-readable note.
    pub fn with_notes(mut self, notes: impl Into<String>) -> Self {
        self.notes = Some(notes.into());
        self
    }

    /// True when the check passed.
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.status {
            CheckStatus::Pass => write!(f, "pass  {} (precision {})", self.name, self.precision)?,
            CheckStatus::Fail => write!(f, "FAIL  {} (precision {})", self.name, self.precision)?,
        }
        if let Some(d) = &self.first_discrepancy {
            write!(
                f,
                ": at {} expected {}, got {}",
                d.exponent, d.expected, d.got
            )?;
        }
        if let Some(n) = &self.notes {
            write!(f, " [{n}]")?;
        }
        Ok(())
    }
}
