//! Error types shared across the crate.

use std::fmt;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// A group axiom violated by a multiplication table, with the witness
/// elements that expose the violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomFailure {
    /// The table is not an `n x n` square.
    NotSquare { entries: usize, order: usize },
    /// A table entry is outside `[0, n)`.
    EntryOutOfRange { row: usize, col: usize, value: usize },
    /// `mul(0, a) != a` or `mul(a, 0) != a`.
    Identity { witness: usize },
    /// `mul(mul(a, b), c) != mul(a, mul(b, c))`.
    Associativity { witness: (usize, usize, usize) },
    /// Element `a` has no two-sided inverse.
    Inverse { witness: usize },
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomFailure::NotSquare { entries, order } => {
                write!(f, "table axiom: {entries} entries cannot form a {order}x{order} square")
            }
            AxiomFailure::EntryOutOfRange { row, col, value } => {
                write!(f, "table axiom: entry ({row},{col}) = {value} is out of range")
            }
            AxiomFailure::Identity { witness } => {
                write!(f, "identity axiom: witness element {witness}")
            }
            AxiomFailure::Associativity { witness: (a, b, c) } => {
                write!(f, "associativity axiom: witness triple ({a},{b},{c})")
            }
            AxiomFailure::Inverse { witness } => {
                write!(f, "inverse axiom: witness element {witness}")
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("group `{label}` fails the {failure}")]
    Axiom { label: String, failure: AxiomFailure },

    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),

    #[error("{0}")]
    Input(String),

    #[error("mismatched parent groups: `{left}` vs `{right}`")]
    ParentMismatch { left: String, right: String },

    #[error("capacity exceeded: {what} is {actual}, limit {limit}")]
    Capacity { what: String, actual: usize, limit: usize },

    #[error("{path}: {message}")]
    Manifest { path: PathBuf, message: String },

    #[error("parse error at {line}:{col}: found {found}, expected {}", expected.join(" | "))]
    Parse { line: usize, col: usize, found: String, expected: Vec<String> },

    #[error("binding error at line {line}: {message}")]
    Binding { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn capacity(what: impl Into<String>, actual: usize, limit: usize) -> Self {
        Error::Capacity { what: what.into(), actual, limit }
    }

    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    /// True for errors that a suite run treats as a skip rather than a failure.
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }
}
