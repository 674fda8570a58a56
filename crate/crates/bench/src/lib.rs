//! Inputs shared by the kernel benchmarks.

use octic_core::{ArrangementDescriptor, Construction, RationalPlane};

/// Plane lists of every registered construction, by name.
pub fn plane_fixtures() -> Vec<(String, Vec<RationalPlane>)> {
    Construction::registry()
        .into_iter()
        .map(|c| (c.name(), c.planes().expect("registered constructions build")))
        .collect()
}

/// `n` planes in general position.
pub fn generic_planes(n: usize) -> Vec<RationalPlane> {
    Construction::Generic(n).planes().expect("n within range")
}

pub fn catalogue() -> Vec<ArrangementDescriptor> {
    octic_core::corpus::catalogue()
}
