//! The four-stage admissible blow-up resolution as integer bookkeeping.
//!
//! Stages run in a fixed order: fivefold points (a), triple curves (b),
//! fourfold points (c), double curves (d). Each step changes eight tracked
//! integers by a fixed table row, and the quantity returned by
//! [`invariant_value`] is unchanged by every row. Once the branch locus is
//! smooth the invariant equals the Euler number of the double cover.

mod admissible;
mod ledger;
mod locus;
mod step;

pub use admissible::{is_admissible, Admissibility, AdmissibilityQuery};
pub use ledger::{run, LedgerRun, LedgerState, Stratum, TraceEntry};
pub use locus::{BranchLocus, Resolution};
pub use step::{
    invariant_value, step_delta, verify_table_rows, BlowupStep, LedgerCounts, Linear,
    RowCertificate, StepKind,
};
