use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::incidence::{analyze, to_descriptor, IncidenceReport};
use super::plane::RationalPlane;
use crate::arrangement::ArrangementDescriptor;
use crate::error::GeometryError;

/// Named plane arrangements realising rows of the Euler-number catalogue.
///
/// Coefficients are fixed small integers; "general" planes are certified
/// after the fact by [`Construction::certify`] rather than chosen at random.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    /// Cube faces plus two planes through `k` vertices in total.
    CubePlus(usize),
    /// The eight faces of the octahedron.
    Octahedron,
    /// Seven faces of two tetrahedra glued along a face, plus a plane
    /// through `m` of the two apexes.
    GluedTetrahedra(usize),
    /// Four planes in general position, planes through three consecutive
    /// edges of their tetrahedron, and a general eighth plane.
    PencilChain,
    /// Four planes in general position and a plane through each of four
    /// edges forming a closed cycle.
    FourPencils,
    /// `n` planes with coefficient vectors `(1, t, t², t³)`, `t = 1..=n`; any
    /// four are independent, so no point lies on four of them.
    Generic(usize),
}

const CUBE: [[i64; 4]; 6] = [
    [1, 0, 0, -1],
    [1, 0, 0, 1],
    [0, 1, 0, -1],
    [0, 1, 0, 1],
    [0, 0, 1, -1],
    [0, 0, 1, 1],
];

// Extra planes for the cube, indexed by total number of vertices hit.
const CUBE_EXTRAS: [[[i64; 4]; 2]; 7] = [
    [[1, -4, -4, -4], [1, -3, -2, 1]],
    [[1, -4, -3, -2], [1, -3, -4, -1]],
    [[1, -4, -3, -2], [1, -3, -4, 2]],
    [[1, -4, -4, -1], [1, -3, -2, 4]],
    [[1, -4, -4, -1], [1, -3, 1, -3]],
    [[1, -1, -1, -1], [1, -4, 1, -4]],
    // A plane through three vertices avoiding every edge is one of the eight
    // corner-cutting planes ±X±Y±Z = W. Any two of them with disjoint vertex
    // sets meet on a line at infinity of the cube, which adds a fourfold point.
    [[1, 1, 1, -1], [1, 1, -1, -1]],
];

const OCTAHEDRON: [[i64; 4]; 8] = [
    [1, 1, 1, -1],
    [1, 1, -1, -1],
    [1, -1, 1, -1],
    [1, -1, -1, -1],
    [1, 1, 1, 1],
    [1, 1, -1, 1],
    [1, -1, 1, 1],
    [1, -1, -1, 1],
];

// Base Z = 0 with triangle (0,0,0), (1,0,0), (0,1,0); apexes (-2,-2,1) and
// (-2,-2,-2).
const GLUED_TETRAHEDRA: [[i64; 4]; 7] = [
    [0, 0, 1, 0],
    [0, 1, 2, 0],
    [1, 1, 5, -1],
    [1, 0, 2, 0],
    [0, 1, -1, 0],
    [2, 2, -5, -2],
    [1, 0, -1, 0],
];

const GLUED_TETRAHEDRA_EXTRA: [[i64; 4]; 3] = [[1, 1, 1, 1], [1, 0, 1, 1], [2, -1, 0, 2]];

const PENCIL_CHAIN: [[i64; 4]; 8] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [1, 1, 0, 0],
    [0, 1, 1, 0],
    [0, 0, 1, 1],
    [1, 2, 3, 4],
];

const FOUR_PENCILS: [[i64; 4]; 8] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [1, 1, 0, 0],
    [1, 0, 1, 0],
    [0, 1, 0, 1],
    [0, 0, 1, -1],
];

const MAX_GENERIC: usize = 64;

fn to_planes(rows: &[[i64; 4]]) -> Vec<RationalPlane> {
    rows.iter()
        .map(|&c| RationalPlane::from_ints(c).expect("fixture planes are nonzero"))
        .collect()
}

impl Construction {
    /// Every registered construction in a stable order.
    pub fn registry() -> Vec<Construction> {
        let mut all: Vec<Construction> = (0..=6).map(Construction::CubePlus).collect();
        all.push(Construction::Octahedron);
        all.extend((0..=2).map(Construction::GluedTetrahedra));
        all.push(Construction::PencilChain);
        all.push(Construction::FourPencils);
        all.push(Construction::Generic(8));
        all
    }

    pub fn name(&self) -> String {
        match self {
            Construction::CubePlus(k) => format!("cube+2@{k}"),
            Construction::Octahedron => "octahedron".into(),
            Construction::GluedTetrahedra(m) => format!("glued-tetrahedra-{m}"),
            Construction::PencilChain => "pencil-chain".into(),
            Construction::FourPencils => "four-pencils".into(),
            Construction::Generic(n) => format!("planes-{n}-generic"),
        }
    }

    fn check_range(&self) -> Result<(), GeometryError> {
        let (family, value, ok, allowed) = match *self {
            Construction::CubePlus(k) => ("cube+2", k, k <= 6, "0..=6"),
            Construction::GluedTetrahedra(m) => ("glued-tetrahedra", m, m <= 2, "0..=2"),
            Construction::Generic(n) => ("generic", n, n <= MAX_GENERIC, "0..=64"),
            _ => return Ok(()),
        };
        if ok {
            Ok(())
        } else {
            Err(GeometryError::OutOfRange { family, value, allowed })
        }
    }

    pub fn planes(&self) -> Result<Vec<RationalPlane>, GeometryError> {
        self.check_range()?;
        Ok(match *self {
            Construction::CubePlus(k) => {
                let mut rows = CUBE.to_vec();
                rows.extend(CUBE_EXTRAS[k]);
                to_planes(&rows)
            }
            Construction::Octahedron => to_planes(&OCTAHEDRON),
            Construction::GluedTetrahedra(m) => {
                let mut rows = GLUED_TETRAHEDRA.to_vec();
                rows.push(GLUED_TETRAHEDRA_EXTRA[m]);
                to_planes(&rows)
            }
            Construction::PencilChain => to_planes(&PENCIL_CHAIN),
            Construction::FourPencils => to_planes(&FOUR_PENCILS),
            Construction::Generic(n) => (1..=n)
                .map(|t| {
                    let t = BigInt::from(t);
                    let coeffs = [BigInt::from(1), t.clone(), &t * &t, &t * &t * &t];
                    RationalPlane::new(coeffs).expect("leading coefficient is 1")
                })
                .collect(),
        })
    }

    /// The descriptor the construction is meant to realise.
    pub fn advertised(&self) -> ArrangementDescriptor {
        let planes8 = ArrangementDescriptor::planes(8);
        match *self {
            Construction::CubePlus(k) => ArrangementDescriptor {
                p4_0: 3 + k as i64,
                ..planes8
            },
            Construction::Octahedron => ArrangementDescriptor { p4_0: 12, ..planes8 },
            Construction::GluedTetrahedra(m) => ArrangementDescriptor {
                p4_0: m as i64,
                p4_1: 3,
                p5_2: 3,
                l3: 3,
                ..planes8
            },
            Construction::PencilChain => ArrangementDescriptor {
                p4_1: 7,
                p5_2: 2,
                l3: 3,
                ..planes8
            },
            Construction::FourPencils => ArrangementDescriptor {
                p4_1: 4,
                p5_2: 4,
                l3: 4,
                ..planes8
            },
            Construction::Generic(n) => ArrangementDescriptor::planes(n),
        }
    }

    /// Runs the incidence analysis and checks that the realised descriptor is
    /// the advertised one.
    pub fn certify(&self) -> Result<IncidenceReport, GeometryError> {
        let report = analyze(&self.planes()?)?;
        let found = to_descriptor(&report)?;
        let expected = self.advertised();
        if found != expected {
            return Err(GeometryError::Certification {
                name: self.name(),
                expected: expected.to_string(),
                found: found.to_string(),
            });
        }
        Ok(report)
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Construction {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || GeometryError::UnknownConstruction(s.to_string());
        let parsed = if let Some(k) = s.strip_prefix("cube+2@") {
            Construction::CubePlus(k.parse().map_err(|_| unknown())?)
        } else if let Some(m) = s.strip_prefix("glued-tetrahedra-") {
            Construction::GluedTetrahedra(m.parse().map_err(|_| unknown())?)
        } else if let Some(rest) = s.strip_prefix("planes-") {
            let n = rest.strip_suffix("-generic").ok_or_else(unknown)?;
            Construction::Generic(n.parse().map_err(|_| unknown())?)
        } else {
            match s {
                "octahedron" => Construction::Octahedron,
                "pencil-chain" => Construction::PencilChain,
                "four-pencils" => Construction::FourPencils,
                _ => return Err(unknown()),
            }
        };
        parsed.check_range()?;
        Ok(parsed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::euler_main;

    #[test]
    fn names_round_trip() {
        for c in Construction::registry() {
            assert_eq!(c.name().parse::<Construction>().unwrap(), c);
        }
        assert!("cube+2@7".parse::<Construction>().is_err());
        assert!("dodecahedron".parse::<Construction>().is_err());
    }

    #[test]
    fn certified_constructions() {
        for c in Construction::registry() {
            if c == Construction::CubePlus(6) {
                continue;
            }
            let report = c.certify().unwrap_or_else(|e| panic!("{c}: {e}"));
            assert_eq!(report.plane_count, c.advertised().degrees.len());
        }
    }

    #[test]
    fn cube_with_six_vertices_gains_a_point_at_infinity() {
        let err = Construction::CubePlus(6).certify().unwrap_err();
        assert!(matches!(err, GeometryError::Certification { .. }));
        let report = analyze(&Construction::CubePlus(6).planes().unwrap()).unwrap();
        let desc = to_descriptor(&report).unwrap();
        assert_eq!(desc.p4_0, 10);
        assert_eq!(euler_main(&desc).unwrap().value, 80);
    }

    #[test]
    fn corner_cutting_pairs_never_give_nine_fourfold_points() {
        let corners: Vec<[i64; 4]> = [1i64, -1]
            .iter()
            .flat_map(|&a| [1i64, -1].into_iter().flat_map(move |b| [1i64, -1].map(|c| [a, b, c, -1])))
            .collect();
        let vertices: Vec<[i64; 4]> = corners.iter().map(|c| [c[0], c[1], c[2], 1]).collect();
        let on = |p: &[i64; 4]| -> Vec<usize> {
            (0..8)
                .filter(|&v| (0..4).map(|i| p[i] * vertices[v][i]).sum::<i64>() == 0)
                .collect()
        };
        for (i, p) in corners.iter().enumerate() {
            assert_eq!(on(p).len(), 3);
            for q in &corners[i + 1..] {
                if on(p).iter().any(|v| on(q).contains(v)) {
                    continue;
                }
                let mut rows = CUBE.to_vec();
                rows.extend([*p, *q]);
                let desc = to_descriptor(&analyze(&to_planes(&rows)).unwrap()).unwrap();
                assert!(desc.p4_0 >= 10, "{p:?} {q:?} gives {desc}");
            }
        }
    }

    #[test]
    fn out_of_range_parameters() {
        assert!(Construction::CubePlus(7).planes().is_err());
        assert!(Construction::GluedTetrahedra(3).planes().is_err());
        assert!(Construction::Generic(65).planes().is_err());
    }
}
