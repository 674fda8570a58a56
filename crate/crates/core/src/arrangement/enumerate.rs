use super::descriptor::{validate, ArrangementDescriptor};
use super::formulas::{euler_main, EulerResult};

/// Per-field maxima for [`enumerate_descriptors`]; minima are all zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumerationBounds {
    pub degree_sets: Vec<Vec<u32>>,
    pub p4_0: i64,
    pub p4_1: i64,
    pub p5_0: i64,
    pub p5_1: i64,
    pub p5_2: i64,
    pub l3: i64,
}

impl EnumerationBounds {
    /// Every partition of 8 with all counts zero.
    pub fn smooth_partitions() -> Self {
        EnumerationBounds {
            degree_sets: partitions(8),
            ..Default::default()
        }
    }

    /// Every partition of 8 with the count ranges spanned by the catalogue.
    pub fn catalogue_ranges() -> Self {
        EnumerationBounds {
            degree_sets: partitions(8),
            p4_0: 12,
            p4_1: 9,
            p5_0: 1,
            p5_1: 2,
            p5_2: 4,
            l3: 4,
        }
    }
}

/// Partitions of `n` with parts in ascending order, listed by descending
/// largest part.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            let mut p = prefix.clone();
            p.reverse();
            out.push(p);
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Every descriptor within `bounds` that passes validation, paired with its
/// closed-form Euler number. Candidates are combinatorial only; nothing here
/// decides whether a descriptor is realised by actual surfaces.
pub fn enumerate_descriptors(
    bounds: &EnumerationBounds,
) -> impl Iterator<Item = (ArrangementDescriptor, EulerResult)> + '_ {
    let counts = move || {
        let b = bounds;
        (0..=b.p4_0).flat_map(move |p4_0| {
            (0..=b.p4_1).flat_map(move |p4_1| {
                (0..=b.p5_0).flat_map(move |p5_0| {
                    (0..=b.p5_1).flat_map(move |p5_1| {
                        (0..=b.p5_2).flat_map(move |p5_2| {
                            (0..=b.l3).map(move |l3| [p4_0, p4_1, p5_0, p5_1, p5_2, l3])
                        })
                    })
                })
            })
        })
    };
    bounds.degree_sets.iter().flat_map(move |degrees| {
        counts().filter_map(move |[p4_0, p4_1, p5_0, p5_1, p5_2, l3]| {
            // Cheap prefilter on the triple-line identity before full validation.
            if 5 * l3 != p4_1 + 2 * p5_1 + 4 * p5_2 {
                return None;
            }
            let desc = ArrangementDescriptor {
                degrees: degrees.clone(),
                p4_0,
                p4_1,
                p5_0,
                p5_1,
                p5_2,
                l3,
                elliptic_case: None,
            };
            if !validate(&desc).is_valid() {
                return None;
            }
            let result = euler_main(&desc).ok()?;
            Some((desc, result))
        })
    })
}
