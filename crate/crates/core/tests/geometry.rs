use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use octic_core::{
    analyze, euler_main, solve_p3, to_descriptor, validate, Construction, IncidenceReport,
    RationalPlane,
};
use proptest::prelude::*;

type Vec4 = [i128; 4];

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn canonical(v: Vec4) -> Option<Vec4> {
    let g = v.iter().fold(0, |g, &x| gcd(g, x));
    if g == 0 {
        return None;
    }
    let sign = if v.iter().find(|&&x| x != 0).copied().unwrap_or(1) < 0 { -1 } else { 1 };
    Some(v.map(|x| sign * x / g))
}

fn det3(m: [[i128; 3]; 3]) -> i128 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// 3×3 minor of three rows with column `skip` deleted.
fn minor(rows: [&Vec4; 3], skip: usize) -> i128 {
    let cols: Vec<usize> = (0..4).filter(|&c| c != skip).collect();
    det3(rows.map(|r| [r[cols[0]], r[cols[1]], r[cols[2]]]))
}

/// Common point of three planes by cofactors, if they meet in a point.
fn cofactor_point(a: &Vec4, b: &Vec4, c: &Vec4) -> Option<Vec4> {
    let v: Vec4 = std::array::from_fn(|m| if m % 2 == 0 { 1 } else { -1 } * minor([a, b, c], m));
    canonical(v)
}

fn dot(a: &Vec4, b: &Vec4) -> i128 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

struct Oracle {
    lines: BTreeSet<BTreeSet<usize>>,
    points: BTreeMap<Vec4, BTreeSet<usize>>,
}

/// Incidences by rank tests on small integer matrices, independent of the
/// Plücker machinery.
fn oracle(planes: &[Vec4]) -> Oracle {
    let n = planes.len();
    let mut lines = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            let through: BTreeSet<usize> = (0..n)
                .filter(|&k| k == i || k == j || cofactor_point(&planes[i], &planes[j], &planes[k]).is_none())
                .collect();
            lines.insert(through);
        }
    }
    let mut points = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if let Some(p) = cofactor_point(&planes[i], &planes[j], &planes[k]) {
                    let on: BTreeSet<usize> = (0..n).filter(|&m| dot(&planes[m], &p) == 0).collect();
                    points.insert(p, on);
                }
            }
        }
    }
    Oracle { lines, points }
}

fn small(v: &BigInt) -> i128 {
    i128::try_from(v).expect("small coordinates")
}

fn to_planes(rows: &[Vec4]) -> Vec<RationalPlane> {
    rows.iter()
        .map(|r| RationalPlane::new(r.map(BigInt::from)).unwrap())
        .collect()
}

fn check_against_oracle(rows: &[Vec4], report: &IncidenceReport) {
    let o = oracle(rows);
    let lines: BTreeSet<BTreeSet<usize>> = report.lines.iter().map(|l| l.planes_through.clone()).collect();
    assert_eq!(lines, o.lines);
    let points: BTreeMap<Vec4, BTreeSet<usize>> = report
        .points
        .iter()
        .map(|p| (p.point.coordinates().each_ref().map(small), p.planes.clone()))
        .collect();
    assert_eq!(points, o.points);
    for line in &report.lines {
        let t = o
            .points
            .values()
            .filter(|on| line.planes_through.is_subset(on) && on.len() > line.multiplicity())
            .count();
        assert_eq!(line.t_count, t);
    }
    for point in &report.points {
        let triple = o
            .lines
            .iter()
            .filter(|l| l.len() == 3 && l.is_subset(&point.planes))
            .count();
        assert_eq!(point.triple_lines, triple);
    }
}

fn construction_rows(c: Construction) -> Vec<Vec4> {
    c.planes()
        .unwrap()
        .iter()
        .map(|p| p.coefficients().each_ref().map(small))
        .collect()
}

#[test]
fn constructions_match_oracle() {
    for c in Construction::registry() {
        let rows = construction_rows(c);
        let report = analyze(&to_planes(&rows)).unwrap();
        check_against_oracle(&rows, &report);
    }
}

#[test]
fn constructions_realise_their_rows() {
    let expected = [
        ("cube+2@0", 52),
        ("cube+2@1", 56),
        ("cube+2@2", 60),
        ("cube+2@3", 64),
        ("cube+2@4", 68),
        ("cube+2@5", 72),
        ("octahedron", 88),
        ("glued-tetrahedra-0", 112),
        ("glued-tetrahedra-1", 116),
        ("glued-tetrahedra-2", 120),
        ("pencil-chain", 104),
        ("four-pencils", 136),
        ("planes-8-generic", 40),
    ];
    for (name, euler) in expected {
        let c: Construction = name.parse().unwrap();
        let report = c.certify().unwrap();
        let desc = to_descriptor(&report).unwrap();
        assert_eq!(euler_main(&desc).unwrap().value, euler, "{name}");
    }
}

/// Every plane through three cube vertices that avoids the edges cuts off a
/// corner, and any two disjoint corner cuts meet on a line at infinity
/// through a fourfold point of the cube; so six vertices force a tenth
/// fourfold point.
#[test]
fn six_vertices_force_an_extra_fourfold_point() {
    let report = analyze(&Construction::CubePlus(6).planes().unwrap()).unwrap();
    let desc = to_descriptor(&report).unwrap();
    assert_eq!(desc.p4_0, 10);
    assert_eq!(euler_main(&desc).unwrap().value, 80);
    assert!(Construction::CubePlus(6).certify().is_err());
}

#[test]
fn generic_eight() {
    let report = analyze(&Construction::Generic(8).planes().unwrap()).unwrap();
    assert_eq!(report.lines.len(), 28);
    assert!(report.lines.iter().all(|l| l.multiplicity() == 2 && l.t_count == 6));
    assert_eq!(report.points.len(), 56);
    assert_eq!(report.isolated_triple_points(), 56);
    assert!(report.violations.is_empty());
    assert_eq!(to_descriptor(&report).unwrap(), octic_core::ArrangementDescriptor::planes(8));
}

#[test]
fn octahedron_descriptor() {
    let report = Construction::Octahedron.certify().unwrap();
    let desc = to_descriptor(&report).unwrap();
    assert_eq!(desc.p4_0, 12);
    assert_eq!(report.isolated_triple_points(), 8);
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Both counting identities for a violation-free arrangement of planes. Each
/// triple line meets the other `n − 3` planes at fourfold or fivefold
/// points; for eight planes the factor is 5.
fn check_lemma(report: &IncidenceReport) {
    let n = report.plane_count as i64;
    let c = |p, k| report.count_points(p, k) as i64;
    let (p4_0, p4_1) = (c(4, 0), c(4, 1));
    let (p5_0, p5_1, p5_2) = (c(5, 0), c(5, 1), c(5, 2));
    let l3 = report.count_lines(3) as i64;
    let p3 = report.isolated_triple_points() as i64;
    assert_eq!((n - 3) * l3, p4_1 + 2 * p5_1 + 4 * p5_2);
    assert_eq!(
        p3 + 4 * (p4_0 + p4_1) + 10 * (p5_0 + p5_1 + p5_2) - (p4_1 + p5_1 + 2 * p5_2 - l3),
        n * (n - 1) * (n - 2) / 6
    );
}

#[test]
fn lemma_on_constructions() {
    for c in Construction::registry() {
        let report = analyze(&c.planes().unwrap()).unwrap();
        check_lemma(&report);
        let desc = to_descriptor(&report).unwrap();
        assert!(validate(&desc).is_valid(), "{c}");
        assert_eq!(solve_p3(&desc).unwrap(), report.isolated_triple_points() as i64);
    }
}

fn plane_rows() -> impl Strategy<Value = Vec<Vec4>> {
    prop::collection::vec(prop::array::uniform4(-2i128..=2), 3..=9).prop_map(|rows| {
        let set: BTreeSet<Vec4> = rows.into_iter().filter_map(canonical).collect();
        set.into_iter().collect()
    })
}

fn det4(m: &[[i128; 4]; 4]) -> i128 {
    let rows: Vec<Vec4> = m.to_vec();
    (0..4)
        .map(|c| {
            let sign = if c % 2 == 0 { 1 } else { -1 };
            let rest = [&rows[1], &rows[2], &rows[3]];
            sign * rows[0][c] * minor(rest, c)
        })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn analyze_matches_oracle(rows in plane_rows()) {
        let report = analyze(&to_planes(&rows)).unwrap();
        check_against_oracle(&rows, &report);
    }

    #[test]
    fn pair_count_and_plucker(rows in plane_rows()) {
        let report = analyze(&to_planes(&rows)).unwrap();
        let pairs: usize = report.lines.iter().map(|l| binom(l.multiplicity(), 2)).sum();
        prop_assert_eq!(pairs, binom(rows.len(), 2));
        for l in &report.lines {
            prop_assert!(l.multiplicity() >= 2);
            prop_assert_eq!(l.line.quadric_residual(), BigInt::from(0));
        }
        for p in &report.points {
            let k = p.triple_lines;
            match p.multiplicity() {
                4 => prop_assert!(k <= 1),
                5 => prop_assert!(k <= 2),
                _ => {}
            }
        }
    }

    #[test]
    fn lemma_on_random_arrangements(rows in plane_rows()) {
        let report = analyze(&to_planes(&rows)).unwrap();
        if report.violations.is_empty() {
            check_lemma(&report);
        }
    }

    #[test]
    fn projective_invariance(
        rows in plane_rows(),
        m in prop::array::uniform4(prop::array::uniform4(-2i128..=2)),
    ) {
        prop_assume!(det4(&m) != 0);
        let planes = to_planes(&rows);
        let matrix = m.map(|r| r.map(BigInt::from));
        let moved: Vec<RationalPlane> = planes.iter().map(|p| p.map(&matrix).unwrap()).collect();
        let before = analyze(&planes).unwrap().summary();
        let after = analyze(&moved).unwrap().summary();
        prop_assert_eq!(before, after);
    }
}
