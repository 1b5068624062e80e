use std::fmt;

use serde::{Deserialize, Serialize};

use crate::lia::HypothesisCheck;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A point of the unit cube together with the two quantities that were
/// compared there.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub point: Vec<f64>,
    pub lhs: f64,
    pub rhs: f64,
}

impl Witness {
    pub fn new(point: &[f64], lhs: f64, rhs: f64) -> Self {
        Witness {
            point: point.to_vec(),
            lhs,
            rhs,
        }
    }

    pub fn gap(&self) -> f64 {
        (self.lhs - self.rhs).abs()
    }
}

/// Values are rounded to nine decimals with trailing zeros dropped.
impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let point: Vec<String> = self.point.iter().map(|&v| short(v)).collect();
        write!(f, "({}): {} vs {}", point.join(", "), short(self.lhs), short(self.rhs))
    }
}

fn short(v: f64) -> String {
    let s = format!("{v:.9}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".into() } else { s.into() }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{what} = {value} lies outside [0, 1]")]
    Domain { what: &'static str, value: f64 },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("{operator} violates {axiom} at {witness}")]
    Axiom {
        operator: String,
        axiom: String,
        witness: Witness,
    },

    #[error("{}", describe_hypotheses(.construction, .failed, .counterexample, .note))]
    Hypothesis {
        construction: String,
        failed: Vec<HypothesisCheck>,
        counterexample: Option<Witness>,
        note: Option<String>,
    },

    #[error("{engine} refused the system: {reason}")]
    Admission {
        engine: String,
        reason: String,
        ledger: Vec<HypothesisCheck>,
    },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("unknown label `{label}` for input `{input}`")]
    UnknownLabel { input: String, label: String },

    #[error("descriptor: {0}")]
    Descriptor(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn describe_hypotheses(
    construction: &str,
    failed: &[HypothesisCheck],
    counterexample: &Option<Witness>,
    note: &Option<String>,
) -> String {
    let mut parts: Vec<String> = failed
        .iter()
        .map(|h| match &h.witness {
            Some(w) => format!("{} fails at {w}", h.hypothesis),
            None => format!("{} fails", h.hypothesis),
        })
        .collect();
    if let Some(w) = counterexample {
        parts.push(format!("counterexample {w}"));
    }
    parts.extend(note.iter().cloned());
    format!("{construction} rejected: {}", parts.join("; "))
}

pub(crate) fn check_unit(what: &'static str, value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::Domain { what, value })
    }
}

pub(crate) fn param(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}
