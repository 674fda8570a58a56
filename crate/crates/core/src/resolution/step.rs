use std::fmt;
use std::ops::{Add, AddAssign, Sub};

use serde::Serialize;

use super::admissible::AdmissibilityQuery;

/// The eight integers tracked through the resolution.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct LedgerCounts {
    /// Euler number of the current ambient threefold.
    pub e_ambient: i64,
    /// Sum of Euler numbers of branch-locus components.
    pub e_star: i64,
    pub e2: i64,
    pub e3: i64,
    pub p3: i64,
    pub p5_0: i64,
    pub p5_1: i64,
    pub p5_2: i64,
}

impl LedgerCounts {
    fn to_array(self) -> [i64; 8] {
        [
            self.e_ambient,
            self.e_star,
            self.e2,
            self.e3,
            self.p3,
            self.p5_0,
            self.p5_1,
            self.p5_2,
        ]
    }

    fn from_array(a: [i64; 8]) -> Self {
        let [e_ambient, e_star, e2, e3, p3, p5_0, p5_1, p5_2] = a;
        LedgerCounts { e_ambient, e_star, e2, e3, p3, p5_0, p5_1, p5_2 }
    }

    /// No singular strata remain.
    pub fn is_smooth(&self) -> bool {
        self.e2 == 0 && self.e3 == 0 && self.p3 == 0 && self.p5_0 == 0 && self.p5_1 == 0 && self.p5_2 == 0
    }
}

impl Add for LedgerCounts {
    type Output = LedgerCounts;
    fn add(self, rhs: Self) -> Self {
        let (a, b) = (self.to_array(), rhs.to_array());
        Self::from_array(std::array::from_fn(|i| a[i] + b[i]))
    }
}

impl AddAssign for LedgerCounts {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for LedgerCounts {
    type Output = LedgerCounts;
    fn sub(self, rhs: Self) -> Self {
        let (a, b) = (self.to_array(), rhs.to_array());
        Self::from_array(std::array::from_fn(|i| a[i] - b[i]))
    }
}

/// Weights of the conserved combination, in [`LedgerCounts`] field order.
const INVARIANT_WEIGHTS: [i64; 8] = [2, -1, 2, 6, -1, 6, 9, 12];

/// `2e(V) - e* + 2E2 - p3 + 6E3 + 12p5_2 + 9p5_1 + 6p5_0`.
pub fn invariant_value(counts: &LedgerCounts) -> i64 {
    counts
        .to_array()
        .iter()
        .zip(INVARIANT_WEIGHTS)
        .map(|(x, w)| x * w)
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum StepKind {
    A1,
    A2,
    A3,
    B,
    C,
    D,
}

impl StepKind {
    pub const ALL: [StepKind; 6] = [Self::A1, Self::A2, Self::A3, Self::B, Self::C, Self::D];
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StepKind::A1 => "a-1",
            StepKind::A2 => "a-2",
            StepKind::A3 => "a-3",
            StepKind::B => "b",
            StepKind::C => "c",
            StepKind::D => "d",
        };
        f.pad(s)
    }
}

/// One admissible blow-up. Point centres carry no data; curve centres carry
/// their Euler number and `t`, the number of points on the curve where one
/// more component passes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind")]
pub enum BlowupStep {
    /// Fivefold point on no triple curve.
    A1,
    /// Fivefold point on one triple curve.
    A2,
    /// Fivefold point on two triple curves.
    A3,
    /// Triple curve.
    B { euler: i64, t: i64 },
    /// Fourfold point.
    C,
    /// Double curve.
    D { euler: i64, t: i64 },
}

impl BlowupStep {
    pub fn kind(&self) -> StepKind {
        match self {
            BlowupStep::A1 => StepKind::A1,
            BlowupStep::A2 => StepKind::A2,
            BlowupStep::A3 => StepKind::A3,
            BlowupStep::B { .. } => StepKind::B,
            BlowupStep::C => StepKind::C,
            BlowupStep::D { .. } => StepKind::D,
        }
    }

    /// Fivefold point step for a point on `triple_curves` triple curves.
    pub fn fivefold(triple_curves: u32) -> Option<Self> {
        [BlowupStep::A1, BlowupStep::A2, BlowupStep::A3]
            .get(triple_curves as usize)
            .copied()
    }

    /// `(euler, t)` for curve centres.
    pub fn curve_data(&self) -> Option<(i64, i64)> {
        match *self {
            BlowupStep::B { euler, t } | BlowupStep::D { euler, t } => Some((euler, t)),
            _ => None,
        }
    }

    pub fn admissibility_query(&self) -> AdmissibilityQuery {
        let (codim, multiplicity) = match self.kind() {
            StepKind::A1 | StepKind::A2 | StepKind::A3 => (3, 5),
            StepKind::B => (2, 3),
            StepKind::C => (3, 4),
            StepKind::D => (2, 2),
        };
        AdmissibilityQuery { codim, multiplicity }
    }

    /// Whether the exceptional divisor joins the branch locus.
    pub fn epsilon(&self) -> u32 {
        self.admissibility_query().multiplicity % 2
    }
}

/// `constant + e·e(Z) + t·t`, a table entry as a polynomial in the curve data.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Linear {
    pub constant: i64,
    pub e: i64,
    pub t: i64,
}

impl Linear {
    const fn new(constant: i64, e: i64, t: i64) -> Self {
        Linear { constant, e, t }
    }

    pub fn eval(&self, euler: i64, t: i64) -> i64 {
        self.constant + self.e * euler + self.t * t
    }

    fn scale(self, k: i64) -> Self {
        Linear::new(self.constant * k, self.e * k, self.t * k)
    }

    fn plus(self, other: Self) -> Self {
        Linear::new(self.constant + other.constant, self.e + other.e, self.t + other.t)
    }

    pub fn is_zero(&self) -> bool {
        *self == Linear::default()
    }
}

impl fmt::Display for Linear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (coef, sym) in [(self.constant, ""), (self.e, "e"), (self.t, "t")] {
            match (coef, sym) {
                (0, _) => {}
                (c, "") => parts.push(c.to_string()),
                (1, s) => parts.push(s.to_string()),
                (-1, s) => parts.push(format!("-{s}")),
                (c, s) => parts.push(format!("{c}{s}")),
            }
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join(" + ").replace("+ -", "- "))
    }
}

/// Table rows in [`LedgerCounts`] field order:
/// `Δe(V), Δe*, ΔE2, ΔE3, Δp3, Δp5_0, Δp5_1, Δp5_2`.
fn symbolic_row(kind: StepKind) -> [Linear; 8] {
    const Z: Linear = Linear::new(0, 0, 0);
    const fn c(k: i64) -> Linear {
        Linear::new(k, 0, 0)
    }
    match kind {
        StepKind::A1 => [c(2), c(8), c(10), Z, c(10), c(-1), Z, Z],
        StepKind::A2 => [c(2), c(8), c(10), Z, c(7), Z, c(-1), Z],
        StepKind::A3 => [c(2), c(8), c(10), Z, c(4), Z, Z, c(-1)],
        StepKind::B => [
            Linear::new(0, 1, 0),
            Linear::new(0, 2, 1),
            Linear::new(0, 3, 2),
            Linear::new(0, -1, 0),
            Linear::new(0, 0, 3),
            Z,
            Z,
            Z,
        ],
        StepKind::C => [c(2), c(4), Z, Z, Z, Z, Z, Z],
        StepKind::D => [
            Linear::new(0, 1, 0),
            Linear::new(0, 0, 1),
            Linear::new(0, -1, 0),
            Z,
            Linear::new(0, 0, -1),
            Z,
            Z,
            Z,
        ],
    }
}

/// Change of the tracked integers caused by one blow-up.
pub fn step_delta(step: &BlowupStep) -> LedgerCounts {
    let (euler, t) = step.curve_data().unwrap_or((0, 0));
    LedgerCounts::from_array(symbolic_row(step.kind()).map(|entry| entry.eval(euler, t)))
}

/// Expansion of the invariant's change under one table row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowCertificate {
    pub kind: StepKind,
    /// `(weight, entry)` pairs whose weighted sum is `residual`.
    pub terms: Vec<(i64, Linear)>,
    pub residual: Linear,
}

impl RowCertificate {
    pub fn is_zero(&self) -> bool {
        self.residual.is_zero()
    }
}

impl fmt::Display for RowCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .filter(|(_, entry)| !entry.is_zero())
            .map(|(w, entry)| format!("{w}*({entry})"))
            .collect();
        write!(f, "{:>3}: {} = {}", self.kind, parts.join(" + "), self.residual)
    }
}

/// Checks, as identities in `e(Z)` and `t`, that no table row changes the
/// invariant.
pub fn verify_table_rows() -> Vec<RowCertificate> {
    StepKind::ALL
        .iter()
        .map(|&kind| {
            let terms: Vec<(i64, Linear)> = INVARIANT_WEIGHTS
                .iter()
                .copied()
                .zip(symbolic_row(kind))
                .collect();
            let residual = terms
                .iter()
                .fold(Linear::default(), |acc, &(w, entry)| acc.plus(entry.scale(w)));
            RowCertificate {
                kind,
                terms,
                residual,
            }
        })
        .collect()
}
