//! Arrangement data model and the closed-form Euler-number computations.

mod descriptor;
mod elliptic;
mod enumerate;
mod formulas;

pub use descriptor::{validate, ArrangementDescriptor, ValidationReport, Violation};
pub use elliptic::{classify_elliptic, EllipticCase};
pub use enumerate::{enumerate_descriptors, partitions, EnumerationBounds};
pub use formulas::{
    derive_extended, euler_main, euler_star, euler_upstairs, pair_curve_euler_sum, solve_p3,
    surface_euler, triple_sum, EulerPath, EulerResult, ExtendedDescriptor, Term,
};
