//! The catalogue of octic arrangements with pairwise distinct Euler numbers,
//! and named descriptor fixtures.
//!
//! Catalogue rows are stored as degrees and counts only. Euler numbers are
//! always computed.

use crate::arrangement::{ArrangementDescriptor, EllipticCase};

/// `(degrees, [p4_0, p4_1, p5_0, p5_1, p5_2, l3])`
type Row = (&'static [u32], [i64; 6]);

const NONE: [i64; 6] = [0; 6];

const fn p4(n: i64) -> [i64; 6] {
    [n, 0, 0, 0, 0, 0]
}

const P5: [i64; 6] = [0, 0, 1, 0, 0, 0];
const EIGHT: &[u32] = &[1, 1, 1, 1, 1, 1, 1, 1];

#[rustfmt::skip]
const ROWS: [Row; 63] = [
    (&[8], NONE),
    (&[1, 7], NONE),
    (&[2, 6], NONE),
    (&[1, 1, 6], NONE),
    (&[3, 5], NONE),
    (&[4, 4], NONE),
    (&[1, 2, 5], NONE),
    (&[1, 1, 1, 5], NONE),
    (&[1, 1, 1, 5], p4(1)),
    (&[2, 2, 4], NONE),
    (&[2, 3, 3], NONE),
    (&[1, 1, 2, 4], NONE),
    (&[1, 1, 2, 4], p4(1)),
    (&[1, 1, 2, 4], p4(2)),
    (&[1, 1, 3, 3], NONE),
    (&[1, 1, 3, 3], p4(1)),
    (&[1, 1, 1, 1, 4], NONE),
    (&[1, 1, 1, 1, 4], p4(1)),
    (&[1, 2, 2, 3], NONE),
    (&[1, 2, 2, 3], p4(1)),
    (&[1, 1, 1, 1, 4], P5),
    (&[1, 2, 2, 3], p4(3)),
    (&[2, 2, 2, 2], NONE),
    (&[1, 1, 1, 2, 3], NONE),
    (&[1, 1, 1, 2, 3], p4(1)),
    (&[1, 1, 1, 2, 3], p4(2)),
    (&[1, 1, 1, 2, 3], p4(3)),
    (&[1, 1, 2, 2, 2], NONE),
    (&[1, 1, 1, 1, 1, 3], NONE),
    (&[1, 1, 1, 1, 1, 3], p4(1)),
    (&[1, 1, 1, 1, 1, 3], p4(2)),
    (&[1, 1, 1, 1, 1, 3], p4(3)),
    (&[1, 1, 1, 1, 2, 2], NONE),
    (&[1, 1, 1, 1, 2, 2], p4(1)),
    (&[1, 1, 1, 1, 2, 2], p4(2)),
    (&[1, 1, 1, 1, 2, 2], p4(3)),
    (&[1, 1, 1, 1, 2, 2], P5),
    (&[1, 1, 1, 1, 1, 1, 2], NONE),
    (&[1, 1, 1, 1, 1, 1, 2], p4(1)),
    (&[1, 1, 1, 1, 1, 1, 2], p4(2)),
    (&[1, 1, 1, 1, 1, 1, 2], p4(3)),
    (&[1, 1, 1, 1, 1, 1, 2], P5),
    (EIGHT, NONE),
    (EIGHT, p4(1)),
    (EIGHT, p4(2)),
    (EIGHT, p4(3)),
    (EIGHT, p4(4)),
    (EIGHT, p4(5)),
    (EIGHT, p4(6)),
    (EIGHT, p4(7)),
    (EIGHT, p4(8)),
    (EIGHT, p4(9)),
    (EIGHT, [0, 1, 0, 2, 0, 1]),
    (EIGHT, [0, 8, 0, 1, 0, 2]),
    (EIGHT, p4(12)),
    (EIGHT, [0, 4, 0, 1, 1, 2]),
    (EIGHT, [0, 6, 0, 2, 0, 2]),
    (EIGHT, [0, 7, 0, 0, 2, 3]),
    (EIGHT, [0, 9, 0, 1, 1, 3]),
    (EIGHT, [0, 3, 0, 0, 3, 3]),
    (EIGHT, [1, 3, 0, 0, 3, 3]),
    (EIGHT, [2, 3, 0, 0, 3, 3]),
    (EIGHT, [0, 4, 0, 0, 4, 4]),
];

fn descriptor(&(degrees, [p4_0, p4_1, p5_0, p5_1, p5_2, l3]): &Row) -> ArrangementDescriptor {
    ArrangementDescriptor {
        degrees: degrees.to_vec(),
        p4_0,
        p4_1,
        p5_0,
        p5_1,
        p5_2,
        l3,
        elliptic_case: None,
    }
}

/// The 63 catalogue rows in table order.
pub fn catalogue() -> Vec<ArrangementDescriptor> {
    ROWS.iter().map(descriptor).collect()
}

/// Arrangements containing a triple elliptic curve.
pub fn elliptic() -> Vec<ArrangementDescriptor> {
    EllipticCase::ALL.iter().map(|c| c.descriptor()).collect()
}

/// Names accepted by [`descriptor_fixture`]: `octic-smooth`, `row-1` to
/// `row-63`, and `elliptic-e1` to `elliptic-e4`.
pub fn descriptor_fixture_names() -> Vec<String> {
    let mut names = vec!["octic-smooth".to_string()];
    names.extend((1..=ROWS.len()).map(|i| format!("row-{i}")));
    names.extend(EllipticCase::ALL.iter().map(|c| format!("elliptic-{}", c.to_string().to_lowercase())));
    names
}

pub fn descriptor_fixture(name: &str) -> Option<ArrangementDescriptor> {
    if name == "octic-smooth" {
        return Some(ArrangementDescriptor::new([8]));
    }
    if let Some(n) = name.strip_prefix("row-") {
        let i: usize = n.parse().ok()?;
        return ROWS.get(i.checked_sub(1)?).map(descriptor);
    }
    let case = name.strip_prefix("elliptic-")?;
    EllipticCase::ALL
        .into_iter()
        .find(|c| c.to_string().eq_ignore_ascii_case(case))
        .map(EllipticCase::descriptor)
}
