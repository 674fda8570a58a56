use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::exact::normalize;
use super::plane::{ProjectivePoint, RationalPlane};

/// Index pairs of the six Plücker coordinates, in storage order.
pub const PLUCKER_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// A line in canonical Plücker coordinates `p_ij = x_i y_j - x_j y_i` for any
/// two distinct points `x`, `y` on it, ordered `(p01, p02, p03, p12, p13, p23)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PluckerLine {
    coords: [BigInt; 6],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Meet {
    Line(PluckerLine),
    Coincident,
}

/// Intersection line of two planes.
pub fn meet_planes(a: &RationalPlane, b: &RationalPlane) -> Meet {
    let (u, v) = (a.coefficients(), b.coefficients());
    let dual: [BigInt; 6] = PLUCKER_PAIRS.map(|(i, j)| &u[i] * &v[j] - &u[j] * &v[i]);
    // Dual (plane) coordinates to primal (point) coordinates.
    let [d01, d02, d03, d12, d13, d23] = dual;
    let primal = [d23, -d13, d12, d03, -d02, d01];
    match normalize(primal) {
        Some(coords) => Meet::Line(PluckerLine { coords }),
        None => Meet::Coincident,
    }
}

impl PluckerLine {
    pub fn coordinates(&self) -> &[BigInt; 6] {
        &self.coords
    }

    /// Line through two points, `None` if they coincide.
    pub fn through(x: &ProjectivePoint, y: &ProjectivePoint) -> Option<Self> {
        let (x, y) = (x.coordinates(), y.coordinates());
        normalize(PLUCKER_PAIRS.map(|(i, j)| &x[i] * &y[j] - &x[j] * &y[i]))
            .map(|coords| PluckerLine { coords })
    }

    /// `p01 p23 - p02 p13 + p03 p12`, zero for every actual line.
    pub fn quadric_residual(&self) -> BigInt {
        let p = &self.coords;
        &p[0] * &p[5] - &p[1] * &p[4] + &p[2] * &p[3]
    }

    /// The plane contains the line iff `P u = 0` for the skew primal matrix.
    pub fn lies_in(&self, plane: &RationalPlane) -> bool {
        skew_apply(&self.coords, plane.coefficients())
            .iter()
            .all(Zero::is_zero)
    }

    /// The point lies on the line iff `D x = 0` for the skew dual matrix.
    pub fn contains(&self, point: &ProjectivePoint) -> bool {
        let [p01, p02, p03, p12, p13, p23] = self.coords.clone();
        let dual = [p23, -p13, p12, p03, -p02, p01];
        skew_apply(&dual, point.coordinates())
            .iter()
            .all(Zero::is_zero)
    }
}

/// `M v` for the skew-symmetric 4x4 matrix with upper triangle `m`.
fn skew_apply(m: &[BigInt; 6], v: &[BigInt; 4]) -> [BigInt; 4] {
    let mut out: [BigInt; 4] = Default::default();
    for (k, &(i, j)) in PLUCKER_PAIRS.iter().enumerate() {
        out[i] += &m[k] * &v[j];
        out[j] -= &m[k] * &v[i];
    }
    out
}

impl fmt::Display for PluckerLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plane(c: [i64; 4]) -> RationalPlane {
        RationalPlane::from_ints(c).unwrap()
    }

    fn point(c: [i64; 4]) -> ProjectivePoint {
        ProjectivePoint::from_ints(c).unwrap()
    }

    fn line(m: Meet) -> PluckerLine {
        match m {
            Meet::Line(l) => l,
            Meet::Coincident => panic!("planes coincide"),
        }
    }

    #[test]
    fn axis_aligned_meet() {
        let l = line(meet_planes(&plane([1, 0, 0, -1]), &plane([0, 1, 0, -1])));
        let expected = PluckerLine::through(&point([1, 1, 1, 1]), &point([0, 0, 1, 0])).unwrap();
        assert_eq!(l, expected);
        let want: [BigInt; 6] = [0, 1, 0, 1, 0, -1].map(BigInt::from);
        assert_eq!(l.coordinates(), &want);
        assert!(l.quadric_residual().is_zero());
    }

    #[test]
    fn parallel_planes_meet_at_infinity() {
        let l = line(meet_planes(&plane([1, 0, 0, -1]), &plane([1, 0, 0, 1])));
        // X = W = 0 is spanned by (0,1,0,0) and (0,0,1,0).
        let expected = PluckerLine::through(&point([0, 1, 0, 0]), &point([0, 0, 1, 0])).unwrap();
        assert_eq!(l, expected);
    }

    #[test]
    fn coincident_planes_are_flagged() {
        assert_eq!(
            meet_planes(&plane([1, 0, 0, -1]), &plane([-2, 0, 0, 2])),
            Meet::Coincident
        );
    }

    #[test]
    fn incidence_predicates() {
        let a = plane([1, 2, 3, 4]);
        let b = plane([2, -1, 0, 5]);
        let l = line(meet_planes(&a, &b));
        assert!(l.lies_in(&a) && l.lies_in(&b));
        assert!(!l.lies_in(&plane([1, 0, 0, 0])));
        let c = plane([0, 0, 1, 0]);
        let p = ProjectivePoint::meet(&a, &b, &c).unwrap();
        assert!(l.contains(&p));
        assert!(!l.contains(&point([1, 0, 0, 0])));
    }
}
