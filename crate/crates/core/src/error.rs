use thiserror::Error;

use crate::arrangement::{EllipticCase, ValidationReport};
use crate::resolution::{BlowupStep, LedgerCounts};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("invalid arrangement descriptor: {0}")]
    Invalid(ValidationReport),
    #[error("descriptor is tagged with triple elliptic case {0}; use classify_elliptic")]
    EllipticCase(EllipticCase),
    #[error("descriptor carries no triple elliptic case tag")]
    NotElliptic,
    #[error("descriptor does not match triple elliptic case {case}: {reason}")]
    EllipticMismatch { case: EllipticCase, reason: String },
    #[error("inconsistent descriptor: implied isolated triple-point count is {0}")]
    NegativeTriplePoints(i64),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("plane coefficients are all zero")]
    ZeroPlane,
    #[error("point coordinates are all zero")]
    ZeroPoint,
    #[error("planes {first} and {second} coincide")]
    DuplicatePlane { first: usize, second: usize },
    #[error("arrangement violates the resolution hypotheses: {0:?}")]
    Violations(Vec<crate::geometry::IncidenceViolation>),
    #[error("construction parameter {value} out of range for {family} (allowed {allowed})")]
    OutOfRange {
        family: &'static str,
        value: usize,
        allowed: &'static str,
    },
    #[error("unknown construction {0:?}")]
    UnknownConstruction(String),
    #[error("construction {name} failed certification: expected {expected}, found {found}")]
    Certification {
        name: String,
        expected: String,
        found: String,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LedgerError {
    #[error("codimension {0} is outside the supported range 2..=3")]
    CodimensionOutOfRange(u32),
    #[error("stratum {0:?} is not an admissible blow-up center")]
    Inadmissible(crate::resolution::Stratum),
    #[error("worklist disagrees with strata counts: {0}")]
    InconsistentWorklist(String),
    #[error("invariant changed from {before} to {after} at step {index} ({step:?})")]
    InvariantViolation {
        index: usize,
        step: BlowupStep,
        before: i64,
        after: i64,
    },
    #[error("strata model after step {index} ({step:?}) has {found:?}, table predicts {expected:?}")]
    ModelMismatch {
        index: usize,
        step: BlowupStep,
        expected: LedgerCounts,
        found: LedgerCounts,
    },
    #[error("resolution ended in a singular state {0:?}")]
    NonTerminal(LedgerCounts),
    #[error("double-curve order has {given} entries, expected a permutation of {expected}")]
    BadOrder { given: usize, expected: usize },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
}
