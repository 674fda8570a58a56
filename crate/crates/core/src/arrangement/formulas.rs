use serde::{Deserialize, Serialize};

use super::descriptor::{validate, ArrangementDescriptor};
use crate::error::ArrangementError;

/// Which computation produced an [`EulerResult`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EulerPath {
    /// Degrees and stratified point counts.
    ClosedForm,
    /// Euler numbers of components and curve strata.
    Upstairs,
    /// Terminal value of the blow-up ledger.
    Ledger,
}

/// One signed summand of an Euler-number formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub label: String,
    pub value: i64,
}

impl Term {
    fn new(label: impl Into<String>, value: i64) -> Self {
        Term {
            label: label.into(),
            value,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerResult {
    pub value: i64,
    pub path: EulerPath,
    /// Summands in evaluation order; they add up to `value`. Empty when the
    /// producing path has no term breakdown.
    pub trace: Vec<Term>,
}

impl EulerResult {
    fn from_terms(path: EulerPath, trace: Vec<Term>) -> Self {
        let value = trace.iter().map(|t| t.value).sum();
        EulerResult { value, path, trace }
    }

    pub fn ledger(value: i64) -> Self {
        EulerResult {
            value,
            path: EulerPath::Ledger,
            trace: Vec::new(),
        }
    }
}

/// Strata data in terms of Euler numbers rather than degrees.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendedDescriptor {
    /// Sum of Euler numbers of all components.
    pub e_star: i64,
    /// Sum of Euler numbers of double curves.
    pub e2: i64,
    /// Sum of Euler numbers of triple curves.
    pub e3: i64,
    /// Isolated triple points.
    pub p3: i64,
    pub p5_0: i64,
    pub p5_1: i64,
    pub p5_2: i64,
}

/// Euler number of a smooth surface of degree `d` in projective 3-space.
pub fn surface_euler(d: i64) -> i64 {
    d * d * d - 4 * d * d + 6 * d
}

fn power_sum(degrees: &[u32], k: u32) -> i64 {
    degrees.iter().map(|&d| i64::from(d).pow(k)).sum()
}

/// Sum of Euler numbers of the components.
pub fn euler_star(degrees: &[u32]) -> i64 {
    degrees.iter().map(|&d| surface_euler(i64::from(d))).sum()
}

/// `Σ_{i<j} (4 - d_i - d_j) d_i d_j`: the Euler numbers of all pairwise
/// complete-intersection curves. A triple curve is counted once per pair of
/// its surfaces, so this equals `E2 + 3·E3`.
pub fn pair_curve_euler_sum(degrees: &[u32]) -> i64 {
    let (p1, p2, p3) = (
        power_sum(degrees, 1),
        power_sum(degrees, 2),
        power_sum(degrees, 3),
    );
    // 4·e2 - Σ_{i≠j} d_i² d_j, with e2 = (p1² - p2)/2.
    2 * (p1 * p1 - p2) - (p1 * p2 - p3)
}

/// `Σ_{i<j<k} d_i d_j d_k`, the third elementary symmetric polynomial.
pub fn triple_sum(degrees: &[u32]) -> i64 {
    let (p1, p2, p3) = (
        power_sum(degrees, 1),
        power_sum(degrees, 2),
        power_sum(degrees, 3),
    );
    (p1 * p1 * p1 - 3 * p1 * p2 + 2 * p3) / 6
}

pub(super) fn raw_p3(desc: &ArrangementDescriptor) -> i64 {
    triple_sum(&desc.degrees)
        - 4 * (desc.p4_0 + desc.p4_1)
        - 10 * (desc.p5_0 + desc.p5_1 + desc.p5_2)
        + (desc.p4_1 + desc.p5_1 + 2 * desc.p5_2 - desc.l3)
}

/// Number of isolated triple points implied by the plane-triple count.
pub fn solve_p3(desc: &ArrangementDescriptor) -> Result<i64, ArrangementError> {
    if let Some(case) = desc.elliptic_case {
        return Err(ArrangementError::EllipticCase(case));
    }
    let p3 = raw_p3(desc);
    if p3 < 0 {
        return Err(ArrangementError::NegativeTriplePoints(p3));
    }
    Ok(p3)
}

fn check_closed_form(desc: &ArrangementDescriptor) -> Result<(), ArrangementError> {
    if let Some(case) = desc.elliptic_case {
        return Err(ArrangementError::EllipticCase(case));
    }
    let report = validate(desc);
    if !report.is_valid() {
        return Err(ArrangementError::Invalid(report));
    }
    Ok(())
}

/// Closed-form `e(Y)` of an octic arrangement without a triple elliptic curve.
pub fn euler_main(desc: &ArrangementDescriptor) -> Result<EulerResult, ArrangementError> {
    check_closed_form(desc)?;
    let d = &desc.degrees;
    let trace = vec![
        Term::new("8", 8),
        Term::new("-sum e(S_i)", -euler_star(d)),
        Term::new("+2*sum_pairs (4-d_i-d_j) d_i d_j", 2 * pair_curve_euler_sum(d)),
        Term::new("-sum_triples d_i d_j d_k", -triple_sum(d)),
        Term::new("+4*p4_0", 4 * desc.p4_0),
        Term::new("+3*p4_1", 3 * desc.p4_1),
        Term::new("+16*p5_0", 16 * desc.p5_0),
        Term::new("+18*p5_1", 18 * desc.p5_1),
        Term::new("+20*p5_2", 20 * desc.p5_2),
        Term::new("+l3", desc.l3),
    ];
    Ok(EulerResult::from_terms(EulerPath::ClosedForm, trace))
}

/// Splits a valid non-elliptic descriptor into Euler numbers of its strata,
/// assuming all triple curves are lines and every pair of surfaces meets in a
/// smooth complete intersection.
pub fn derive_extended(desc: &ArrangementDescriptor) -> Result<ExtendedDescriptor, ArrangementError> {
    check_closed_form(desc)?;
    let e3 = 2 * desc.l3;
    Ok(ExtendedDescriptor {
        e_star: euler_star(&desc.degrees),
        e2: pair_curve_euler_sum(&desc.degrees) - 3 * e3,
        e3,
        p3: solve_p3(desc)?,
        p5_0: desc.p5_0,
        p5_1: desc.p5_1,
        p5_2: desc.p5_2,
    })
}

/// `e(Y)` from the Euler numbers of the branch-locus strata.
pub fn euler_upstairs(ext: &ExtendedDescriptor) -> EulerResult {
    let trace = vec![
        Term::new("8", 8),
        Term::new("-e*", -ext.e_star),
        Term::new("+2*E2", 2 * ext.e2),
        Term::new("-p3", -ext.p3),
        Term::new("+6*E3", 6 * ext.e3),
        Term::new("+12*p5_2", 12 * ext.p5_2),
        Term::new("+9*p5_1", 9 * ext.p5_1),
        Term::new("+6*p5_0", 6 * ext.p5_0),
    ];
    EulerResult::from_terms(EulerPath::Upstairs, trace)
}
