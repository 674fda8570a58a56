use std::collections::BTreeSet;

use octic_core::arrangement::partitions;
use octic_core::corpus;
use octic_core::{
    classify_elliptic, derive_extended, euler_main, euler_star, euler_upstairs,
    pair_curve_euler_sum, solve_p3, triple_sum, validate, ArrangementDescriptor, EllipticCase,
    EulerPath,
};
use proptest::prelude::*;

/// Noether's formula: e = 12·χ(O) − K², with χ(O) = C(d−1, 3) + 1 and
/// K² = d(d − 4)² for a smooth degree-d surface.
fn surface_euler_oracle(d: i64) -> i64 {
    let binom3 = (d - 1) * (d - 2) * (d - 3) / 6;
    12 * (binom3 + 1) - d * (d - 4) * (d - 4)
}

/// Genus of the complete intersection of degrees a and b is
/// 1 + ab(a + b − 4)/2.
fn curve_euler_oracle(a: i64, b: i64) -> i64 {
    let twice_genus = 2 + a * b * (a + b - 4);
    2 - twice_genus
}

fn pair_sum_oracle(d: &[u32]) -> i64 {
    let mut sum = 0;
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            sum += curve_euler_oracle(i64::from(d[i]), i64::from(d[j]));
        }
    }
    sum
}

fn triple_sum_oracle(d: &[u32]) -> i64 {
    let mut sum = 0;
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            for k in j + 1..d.len() {
                sum += i64::from(d[i] * d[j] * d[k]);
            }
        }
    }
    sum
}

/// Euler numbers of the catalogue rows, in row order.
const TABLE: [i64; 63] = [
    -296, -240, -200, -180, -176, -168, -140, -120, -116, -104, -92, -84, -80, -76, -72, -68,
    -64, -60, -56, -52, -48, -44, -40, -36, -32, -28, -24, -20, -16, -12, -8, -4, 0, 4, 8, 12,
    16, 20, 24, 28, 32, 36, 40, 44, 48, 52, 56, 60, 64, 68, 72, 76, 80, 84, 88, 92, 96, 104, 108,
    112, 116, 120, 136,
];

#[test]
fn catalogue_reproduces_table() {
    let rows = corpus::catalogue();
    assert_eq!(rows.len(), TABLE.len());
    for (i, (row, expected)) in rows.iter().zip(TABLE).enumerate() {
        let got = euler_main(row).unwrap();
        assert_eq!(got.value, expected, "row {} {row}", i + 1);
        assert_eq!(got.path, EulerPath::ClosedForm);
        assert_eq!(got.trace.iter().map(|t| t.value).sum::<i64>(), got.value);
    }
}

#[test]
fn catalogue_values_are_distinct_and_even() {
    let values: BTreeSet<i64> = corpus::catalogue().iter().map(|d| euler_main(d).unwrap().value).collect();
    assert_eq!(values.len(), 63);
    assert!(values.iter().all(|v| v % 2 == 0));
}

#[test]
fn upstairs_agrees_on_catalogue() {
    for row in corpus::catalogue() {
        let ext = derive_extended(&row).unwrap();
        assert_eq!(ext.e2 + 3 * ext.e3, pair_sum_oracle(&row.degrees), "{row}");
        assert_eq!(euler_upstairs(&ext).value, euler_main(&row).unwrap().value, "{row}");
    }
}

#[test]
fn elliptic_cases() {
    let values: Vec<i64> = corpus::elliptic().iter().map(|d| classify_elliptic(d).unwrap().value).collect();
    assert_eq!(values, vec![-16, 12, 24, 36]);
    for case in EllipticCase::ALL {
        assert!(euler_main(&case.descriptor()).is_err());
        assert!(validate(&case.descriptor()).is_valid());
    }
    let wrong = ArrangementDescriptor {
        elliptic_case: Some(EllipticCase::E1),
        ..ArrangementDescriptor::new([1, 1, 2, 2, 2])
    };
    assert!(classify_elliptic(&wrong).is_err());
    assert!(!validate(&wrong).is_valid());
}

#[test]
fn spec_examples() {
    assert_eq!(euler_star(&[1, 1, 6]), 114);
    assert_eq!(pair_curve_euler_sum(&[1; 8]), 56);
    assert_eq!(pair_curve_euler_sum(&[1, 1, 6]), -34);
    assert_eq!(pair_curve_euler_sum(&[8]), 0);
    assert_eq!(triple_sum(&[1, 1, 6]), 6);
    assert_eq!(triple_sum(&[2, 6]), 0);
    let octa = ArrangementDescriptor { p4_0: 12, ..ArrangementDescriptor::planes(8) };
    assert_eq!(solve_p3(&octa).unwrap(), 8);
    assert_eq!(solve_p3(&ArrangementDescriptor::planes(8)).unwrap(), 56);
    assert_eq!(solve_p3(&ArrangementDescriptor::new([8])).unwrap(), 0);
}

#[test]
fn validate_rejects_perturbed_rows() {
    for row in corpus::catalogue() {
        assert!(validate(&row).is_valid(), "{row}");
        for bump in 0..3 {
            let mut bad = row.clone();
            match bump {
                0 => bad.p4_1 += 1,
                1 => bad.p5_1 += 1,
                _ => bad.l3 += 1,
            }
            assert!(!validate(&bad).is_valid(), "{bad}");
        }
    }
    let lonely = ArrangementDescriptor { l3: 1, ..ArrangementDescriptor::planes(8) };
    assert!(!validate(&lonely).is_valid());
}

#[test]
fn term_coefficients() {
    let desc = ArrangementDescriptor {
        p4_0: 1,
        p4_1: 4,
        p5_0: 1,
        p5_1: 1,
        p5_2: 1,
        l3: 2,
        ..ArrangementDescriptor::planes(8)
    };
    let trace = euler_main(&desc).unwrap().trace;
    let counts = desc.counts();
    let coeffs: Vec<i64> = trace[4..]
        .iter()
        .zip(counts)
        .map(|(term, (_, n))| term.value / n)
        .collect();
    assert_eq!(coeffs, vec![4, 3, 16, 18, 20, 1]);
}

fn degrees() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1u32..=9, 0..10)
}

fn valid_descriptor() -> impl Strategy<Value = ArrangementDescriptor> {
    let parts = partitions(8);
    (
        prop::sample::select(parts),
        0i64..=12,
        0i64..=1,
        0i64..=2,
        0i64..=4,
        0i64..=4,
    )
        .prop_filter_map("5·l3 identity and p3 ≥ 0", |(degrees, p4_0, p5_0, p5_1, p5_2, l3)| {
            let p4_1 = 5 * l3 - 2 * p5_1 - 4 * p5_2;
            let desc = ArrangementDescriptor {
                degrees,
                p4_0,
                p4_1,
                p5_0,
                p5_1,
                p5_2,
                l3,
                elliptic_case: None,
            };
            validate(&desc).is_valid().then_some(desc)
        })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, max_global_rejects: 1_000_000, ..ProptestConfig::default() })]

    #[test]
    fn power_sum_forms_match_loops(d in degrees()) {
        prop_assert_eq!(pair_curve_euler_sum(&d), pair_sum_oracle(&d));
        prop_assert_eq!(triple_sum(&d), triple_sum_oracle(&d));
        let star: i64 = d.iter().map(|&x| surface_euler_oracle(i64::from(x))).sum();
        prop_assert_eq!(euler_star(&d), star);
    }

    #[test]
    fn parity_and_agreement(desc in valid_descriptor()) {
        let main = euler_main(&desc).unwrap().value;
        prop_assert_eq!(main % 2, 0);
        let up = euler_upstairs(&derive_extended(&desc).unwrap()).value;
        prop_assert_eq!(main, up);
    }

    #[test]
    fn monotone_deltas(desc in valid_descriptor()) {
        let base = euler_main(&desc).unwrap().value;
        let more_p4 = ArrangementDescriptor { p4_0: desc.p4_0 + 1, ..desc.clone() };
        if validate(&more_p4).is_valid() {
            prop_assert_eq!(euler_main(&more_p4).unwrap().value - base, 4);
        }
        let more_p5 = ArrangementDescriptor { p5_0: desc.p5_0 + 1, ..desc.clone() };
        if validate(&more_p5).is_valid() {
            prop_assert_eq!(euler_main(&more_p5).unwrap().value - base, 16);
        }
    }
}
