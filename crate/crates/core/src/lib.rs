//! Euler numbers of Calabi–Yau threefolds obtained as resolved double covers
//! of projective 3-space branched along octic arrangements.
//!
//! Three independent routes to `e(Y)` live here:
//!
//! * [`arrangement`]: closed-form evaluation from the degree multiset and the
//!   stratified singularity counts, plus the upstairs formula in terms of
//!   Euler numbers of the strata.
//! * [`resolution`]: a bookkeeping ledger that walks the four-stage admissible
//!   blow-up resolution step by step and checks the conserved quantity.
//! * [`geometry`]: exact incidence computation for arrangements of rational
//!   planes, producing the descriptors the other two routes consume.
//!
//! [`corpus`] ships the catalogue of arrangement descriptors together with the
//! named plane constructions.

pub mod arrangement;
pub mod corpus;
pub mod error;
pub mod geometry;
pub mod resolution;

pub use arrangement::{
    classify_elliptic, derive_extended, enumerate_descriptors, euler_main, euler_star,
    euler_upstairs, pair_curve_euler_sum, solve_p3, triple_sum, validate, ArrangementDescriptor,
    EllipticCase, EnumerationBounds, EulerPath, EulerResult, ExtendedDescriptor, Term,
    ValidationReport, Violation,
};
pub use error::{ArrangementError, GeometryError, LedgerError};
pub use geometry::{
    analyze, meet_planes, to_descriptor, ArrangementLine, Construction, IncidencePoint,
    IncidenceReport, Meet, PluckerLine, ProjectivePoint, RationalPlane,
};
pub use resolution::{
    invariant_value, is_admissible, run, step_delta, verify_table_rows, Admissibility,
    AdmissibilityQuery, BlowupStep, BranchLocus, LedgerCounts, LedgerRun, LedgerState, StepKind,
    Stratum,
};
