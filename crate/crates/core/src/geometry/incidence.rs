use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::line::{meet_planes, Meet, PluckerLine};
use super::plane::{ProjectivePoint, RationalPlane};
use crate::arrangement::ArrangementDescriptor;
use crate::error::GeometryError;

/// A line lying on at least two planes of the arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrangementLine {
    pub line: PluckerLine,
    pub planes_through: BTreeSet<usize>,
    /// Points on the line lying on more planes than the line itself.
    pub t_count: usize,
}

impl ArrangementLine {
    pub fn multiplicity(&self) -> usize {
        self.planes_through.len()
    }
}

/// A point lying on at least three planes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidencePoint {
    pub point: ProjectivePoint,
    pub planes: BTreeSet<usize>,
    /// Number of triple lines through the point.
    pub triple_lines: usize,
    /// Indices into [`IncidenceReport::lines`] of the lines through the point.
    pub lines: Vec<usize>,
}

impl IncidencePoint {
    pub fn multiplicity(&self) -> usize {
        self.planes.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IncidenceViolation {
    /// A line on four or more planes.
    CurveMultiplicity { line: usize, multiplicity: usize },
    /// A point on six or more planes.
    PointMultiplicity { point: usize, multiplicity: usize },
}

/// Complete multiple-line and multiple-point structure of a plane arrangement.
/// Lines and points are sorted by their canonical coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceReport {
    pub plane_count: usize,
    pub lines: Vec<ArrangementLine>,
    pub points: Vec<IncidencePoint>,
    pub violations: Vec<IncidenceViolation>,
}

/// Coordinate-free shape of a report, as sorted multisets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IncidenceSummary {
    pub line_multiplicities: Vec<usize>,
    /// `(multiplicity, triple lines through the point)`.
    pub point_strata: Vec<(usize, usize)>,
    /// `(line multiplicity, t-count)`.
    pub line_t_counts: Vec<(usize, usize)>,
}

impl IncidenceReport {
    pub fn summary(&self) -> IncidenceSummary {
        let mut line_multiplicities: Vec<usize> =
            self.lines.iter().map(ArrangementLine::multiplicity).collect();
        let mut point_strata: Vec<(usize, usize)> = self
            .points
            .iter()
            .map(|p| (p.multiplicity(), p.triple_lines))
            .collect();
        let mut line_t_counts: Vec<(usize, usize)> = self
            .lines
            .iter()
            .map(|l| (l.multiplicity(), l.t_count))
            .collect();
        line_multiplicities.sort_unstable();
        point_strata.sort_unstable();
        line_t_counts.sort_unstable();
        IncidenceSummary {
            line_multiplicities,
            point_strata,
            line_t_counts,
        }
    }

    pub fn count_points(&self, multiplicity: usize, triple_lines: usize) -> usize {
        self.points
            .iter()
            .filter(|p| p.multiplicity() == multiplicity && p.triple_lines == triple_lines)
            .count()
    }

    pub fn count_lines(&self, multiplicity: usize) -> usize {
        self.lines
            .iter()
            .filter(|l| l.multiplicity() == multiplicity)
            .count()
    }

    /// Points on exactly three planes; these never lie on a triple line.
    pub fn isolated_triple_points(&self) -> usize {
        self.points.iter().filter(|p| p.multiplicity() == 3).count()
    }
}

/// Computes every multiple line and every point on three or more planes.
///
/// Lines come from all plane pairs, merged by canonical Plücker coordinates.
/// Points come from plane triples with a unique common point; multiplicity is
/// then decided by testing membership against every plane.
pub fn analyze(planes: &[RationalPlane]) -> Result<IncidenceReport, GeometryError> {
    let n = planes.len();
    let mut lines: BTreeMap<PluckerLine, BTreeSet<usize>> = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            match meet_planes(&planes[i], &planes[j]) {
                Meet::Coincident => {
                    return Err(GeometryError::DuplicatePlane { first: i, second: j })
                }
                Meet::Line(line) => {
                    lines.entry(line).or_default().extend([i, j]);
                }
            }
        }
    }

    let mut points: BTreeMap<ProjectivePoint, BTreeSet<usize>> = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let Some(point) = ProjectivePoint::meet(&planes[i], &planes[j], &planes[k]) else {
                    continue;
                };
                points.entry(point).or_insert_with_key(|point| {
                    (0..n).filter(|&m| planes[m].contains(point)).collect()
                });
            }
        }
    }

    let mut lines: Vec<ArrangementLine> = lines
        .into_iter()
        .map(|(line, planes_through)| ArrangementLine {
            line,
            planes_through,
            t_count: 0,
        })
        .collect();

    // Two planes of a line through a point force the whole line through it.
    let points: Vec<IncidencePoint> = points
        .into_iter()
        .map(|(point, planes)| {
            let through: Vec<usize> = lines
                .iter()
                .enumerate()
                .filter(|(_, l)| l.planes_through.is_subset(&planes))
                .map(|(idx, _)| idx)
                .collect();
            let triple_lines = through
                .iter()
                .filter(|&&idx| lines[idx].multiplicity() == 3)
                .count();
            IncidencePoint {
                point,
                planes,
                triple_lines,
                lines: through,
            }
        })
        .collect();

    for point in &points {
        for &idx in &point.lines {
            if point.multiplicity() > lines[idx].multiplicity() {
                lines[idx].t_count += 1;
            }
        }
    }

    let mut violations = Vec::new();
    for (idx, line) in lines.iter().enumerate() {
        if line.multiplicity() >= 4 {
            violations.push(IncidenceViolation::CurveMultiplicity {
                line: idx,
                multiplicity: line.multiplicity(),
            });
        }
    }
    for (idx, point) in points.iter().enumerate() {
        if point.multiplicity() >= 6 {
            violations.push(IncidenceViolation::PointMultiplicity {
                point: idx,
                multiplicity: point.multiplicity(),
            });
        }
    }

    Ok(IncidenceReport {
        plane_count: n,
        lines,
        points,
        violations,
    })
}

/// Reads the descriptor of a violation-free plane arrangement.
pub fn to_descriptor(report: &IncidenceReport) -> Result<ArrangementDescriptor, GeometryError> {
    if !report.violations.is_empty() {
        return Err(GeometryError::Violations(report.violations.clone()));
    }
    let count = |p, k| report.count_points(p, k) as i64;
    Ok(ArrangementDescriptor {
        p4_0: count(4, 0),
        p4_1: count(4, 1),
        p5_0: count(5, 0),
        p5_1: count(5, 1),
        p5_2: count(5, 2),
        l3: report.count_lines(3) as i64,
        ..ArrangementDescriptor::planes(report.plane_count)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn planes(cs: &[[i64; 4]]) -> Vec<RationalPlane> {
        cs.iter().map(|&c| RationalPlane::from_ints(c).unwrap()).collect()
    }

    const CUBE: [[i64; 4]; 6] = [
        [1, 0, 0, -1],
        [1, 0, 0, 1],
        [0, 1, 0, -1],
        [0, 1, 0, 1],
        [0, 0, 1, -1],
        [0, 0, 1, 1],
    ];

    #[test]
    fn cube_faces() {
        let report = analyze(&planes(&CUBE)).unwrap();
        assert_eq!(report.lines.len(), 15);
        assert!(report.lines.iter().all(|l| l.multiplicity() == 2));
        assert_eq!(report.count_points(3, 0), 8);
        assert_eq!(report.count_points(4, 0), 3);
        assert_eq!(report.points.len(), 11);
        assert!(report.violations.is_empty());
        // Edges see two vertices and a fourfold point at infinity; the lines
        // at infinity see two fourfold points.
        let summary = report.summary();
        assert_eq!(summary.line_t_counts, [vec![(2, 2); 3], vec![(2, 3); 12]].concat());
    }

    #[test]
    fn pencil_of_three() {
        let report = analyze(&planes(&[[1, 0, 0, 0], [0, 1, 0, 0], [1, -1, 0, 0]])).unwrap();
        assert_eq!(report.lines.len(), 1);
        assert_eq!(report.lines[0].multiplicity(), 3);
        assert!(report.points.is_empty());
        assert!(report.violations.is_empty());
    }

    #[test]
    fn duplicate_plane_is_an_error() {
        let err = analyze(&planes(&[[1, 0, 0, 0], [0, 1, 0, 0], [2, 0, 0, 0]])).unwrap_err();
        assert_eq!(err, GeometryError::DuplicatePlane { first: 0, second: 2 });
    }

    #[test]
    fn violations_are_listed_not_raised() {
        // Four planes through the Z-axis and two more through the origin.
        let report = analyze(&planes(&[
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [1, 1, 0, 0],
            [1, -1, 0, 0],
            [0, 0, 1, 0],
            [1, 2, 3, 0],
        ]))
        .unwrap();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, IncidenceViolation::CurveMultiplicity { multiplicity: 4, .. })));
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, IncidenceViolation::PointMultiplicity { multiplicity: 6, .. })));
        assert!(to_descriptor(&report).is_err());
    }

    #[test]
    fn fourfold_point_descriptor() {
        let report = analyze(&planes(&[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [1, 1, 1, 0]])).unwrap();
        let desc = to_descriptor(&report).unwrap();
        assert_eq!(desc.p4_0, 1);
        assert_eq!(desc.degrees, vec![1; 4]);
        assert!(!crate::validate(&desc).is_valid());
    }
}
