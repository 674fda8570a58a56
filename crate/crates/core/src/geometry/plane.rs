use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::exact::{det3, dot, normalize};
use crate::error::GeometryError;

/// The plane `aX + bY + cZ + dW = 0` with integer coefficients in canonical
/// form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalPlane {
    coeffs: [BigInt; 4],
}

impl RationalPlane {
    pub fn new(coeffs: [BigInt; 4]) -> Result<Self, GeometryError> {
        normalize(coeffs)
            .map(|coeffs| RationalPlane { coeffs })
            .ok_or(GeometryError::ZeroPlane)
    }

    pub fn from_ints(coeffs: [i64; 4]) -> Result<Self, GeometryError> {
        Self::new(coeffs.map(BigInt::from))
    }

    /// Builds a plane from `(numerator, denominator)` pairs by clearing
    /// denominators. Zero denominators are rejected as a zero plane.
    pub fn from_fractions(coeffs: [(BigInt, BigInt); 4]) -> Result<Self, GeometryError> {
        if coeffs.iter().any(|(_, den)| den.is_zero()) {
            return Err(GeometryError::ZeroPlane);
        }
        let lcm = coeffs.iter().fold(BigInt::one(), |acc, (_, den)| acc.lcm(den));
        Self::new(coeffs.map(|(num, den)| num * (&lcm / den)))
    }

    pub fn coefficients(&self) -> &[BigInt; 4] {
        &self.coeffs
    }

    pub fn contains(&self, point: &ProjectivePoint) -> bool {
        dot(&self.coeffs, point.coordinates()).is_zero()
    }

    /// Applies an integer matrix to the coefficient vector. Acting on
    /// coefficients by `M` is the same as acting on points by `M^{-T}`.
    pub fn map(&self, matrix: &[[BigInt; 4]; 4]) -> Result<Self, GeometryError> {
        let coeffs = std::array::from_fn(|i| dot(&matrix[i], &self.coeffs));
        Self::new(coeffs)
    }
}

impl fmt::Display for RationalPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.coeffs;
        write!(f, "[{}, {}, {}, {}]", c[0], c[1], c[2], c[3])
    }
}

/// A point of projective 3-space in canonical homogeneous coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectivePoint {
    coords: [BigInt; 4],
}

impl ProjectivePoint {
    pub fn new(coords: [BigInt; 4]) -> Result<Self, GeometryError> {
        normalize(coords)
            .map(|coords| ProjectivePoint { coords })
            .ok_or(GeometryError::ZeroPoint)
    }

    pub fn from_ints(coords: [i64; 4]) -> Result<Self, GeometryError> {
        Self::new(coords.map(BigInt::from))
    }

    pub fn coordinates(&self) -> &[BigInt; 4] {
        &self.coords
    }

    /// The common point of three planes, or `None` when they share a line.
    pub fn meet(a: &RationalPlane, b: &RationalPlane, c: &RationalPlane) -> Option<Self> {
        let rows = [a.coefficients(), b.coefficients(), c.coefficients()];
        // Signed maximal minors of the 3x4 coefficient matrix.
        let coords: [BigInt; 4] = std::array::from_fn(|k| {
            let cols: Vec<usize> = (0..4).filter(|&j| j != k).collect();
            let minor = det3(std::array::from_fn(|r| {
                std::array::from_fn(|s| &rows[r][cols[s]])
            }));
            if k % 2 == 0 {
                minor
            } else {
                -minor
            }
        });
        Self::new(coords).ok()
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.coords;
        write!(f, "({} : {} : {} : {})", c[0], c[1], c[2], c[3])
    }
}
