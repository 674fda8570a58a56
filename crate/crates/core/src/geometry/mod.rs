//! Exact incidence geometry for arrangements of rational planes in
//! projective 3-space.
//!
//! All coordinates are arbitrary-precision integers kept content-free with
//! the first nonzero entry positive, so equal objects compare equal.

mod constructions;
mod exact;
mod incidence;
mod line;
mod plane;

pub use constructions::Construction;
pub use incidence::{
    analyze, to_descriptor, ArrangementLine, IncidencePoint, IncidenceReport, IncidenceSummary,
    IncidenceViolation,
};
pub use line::{meet_planes, Meet, PluckerLine};
pub use plane::{ProjectivePoint, RationalPlane};
