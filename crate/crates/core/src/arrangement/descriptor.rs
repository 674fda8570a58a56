use std::fmt;

use serde::{Deserialize, Serialize};

use super::elliptic::EllipticCase;
use super::formulas::raw_p3;

/// Degrees of the arrangement surfaces together with the singularity counts
/// stratified by how many triple curves pass through each point.
///
/// The count of isolated triple points is never stored; it follows from the
/// other fields (see [`crate::solve_p3`]).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementDescriptor {
    pub degrees: Vec<u32>,
    #[serde(default)]
    pub p4_0: i64,
    #[serde(default)]
    pub p4_1: i64,
    #[serde(default)]
    pub p5_0: i64,
    #[serde(default)]
    pub p5_1: i64,
    #[serde(default)]
    pub p5_2: i64,
    #[serde(default)]
    pub l3: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elliptic_case: Option<EllipticCase>,
}

impl ArrangementDescriptor {
    /// Descriptor with the given degrees and no singular strata.
    pub fn new(degrees: impl Into<Vec<u32>>) -> Self {
        ArrangementDescriptor {
            degrees: degrees.into(),
            ..Default::default()
        }
    }

    /// `n` planes.
    pub fn planes(n: usize) -> Self {
        Self::new(vec![1; n])
    }

    pub fn degree_sum(&self) -> u64 {
        self.degrees.iter().map(|&d| u64::from(d)).sum()
    }

    /// The six stratified counts in table column order.
    pub fn counts(&self) -> [(&'static str, i64); 6] {
        [
            ("p4_0", self.p4_0),
            ("p4_1", self.p4_1),
            ("p5_0", self.p5_0),
            ("p5_1", self.p5_1),
            ("p5_2", self.p5_2),
            ("l3", self.l3),
        ]
    }

    /// Degrees sorted ascending, the form used for display and matching.
    pub fn sorted_degrees(&self) -> Vec<u32> {
        let mut d = self.degrees.clone();
        d.sort_unstable();
        d
    }
}

impl fmt::Display for ArrangementDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let degrees: Vec<String> = self.sorted_degrees().iter().map(u32::to_string).collect();
        write!(f, "({})", degrees.join(","))?;
        for (name, value) in self.counts() {
            if value != 0 {
                write!(f, " {name}={value}")?;
            }
        }
        if let Some(case) = self.elliptic_case {
            write!(f, " elliptic={case}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    EmptyDegrees,
    NonPositiveDegree { index: usize },
    DegreeSum { sum: u64 },
    NegativeCount { field: &'static str, value: i64 },
    /// `5·l3 = p4_1 + 2·p5_1 + 4·p5_2` fails.
    TripleLineIncidence { lhs: i64, rhs: i64 },
    NegativeTriplePoints { p3: i64 },
    EllipticMismatch { case: EllipticCase, reason: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyDegrees => write!(f, "no components"),
            Violation::NonPositiveDegree { index } => write!(f, "degree #{index} is zero"),
            Violation::DegreeSum { sum } => write!(f, "degree sum is {sum}, expected 8"),
            Violation::NegativeCount { field, value } => write!(f, "{field} = {value} is negative"),
            Violation::TripleLineIncidence { lhs, rhs } => {
                write!(f, "5*l3 = {lhs} but p4_1 + 2*p5_1 + 4*p5_2 = {rhs}")
            }
            Violation::NegativeTriplePoints { p3 } => {
                write!(f, "implied isolated triple-point count p3 = {p3} is negative")
            }
            Violation::EllipticMismatch { case, reason } => {
                write!(f, "does not match elliptic case {case}: {reason}")
            }
        }
    }
}

/// Every violated constraint of a descriptor; empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "ok");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Checks the octic condition, count signs and the incidence identities.
///
/// Never fails; the report lists every violated constraint.
pub fn validate(desc: &ArrangementDescriptor) -> ValidationReport {
    let mut violations = Vec::new();
    if desc.degrees.is_empty() {
        violations.push(Violation::EmptyDegrees);
    }
    for (index, &d) in desc.degrees.iter().enumerate() {
        if d == 0 {
            violations.push(Violation::NonPositiveDegree { index });
        }
    }
    let sum = desc.degree_sum();
    if sum != 8 {
        violations.push(Violation::DegreeSum { sum });
    }
    let mut negative = false;
    for (field, value) in desc.counts() {
        if value < 0 {
            negative = true;
            violations.push(Violation::NegativeCount { field, value });
        }
    }

    match desc.elliptic_case {
        Some(case) => {
            if let Err(reason) = case.check(desc) {
                violations.push(Violation::EllipticMismatch { case, reason });
            }
        }
        None => {
            let lhs = 5 * desc.l3;
            let rhs = desc.p4_1 + 2 * desc.p5_1 + 4 * desc.p5_2;
            if lhs != rhs {
                violations.push(Violation::TripleLineIncidence { lhs, rhs });
            }
            if !negative {
                let p3 = raw_p3(desc);
                if p3 < 0 {
                    violations.push(Violation::NegativeTriplePoints { p3 });
                }
            }
        }
    }
    ValidationReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_table_row_with_triple_line() {
        let desc = ArrangementDescriptor {
            p4_1: 1,
            p5_1: 2,
            l3: 1,
            ..ArrangementDescriptor::planes(8)
        };
        assert!(validate(&desc).is_valid());
    }

    #[test]
    fn accepts_generic_planes() {
        assert!(validate(&ArrangementDescriptor::planes(8)).is_valid());
    }

    #[test]
    fn rejects_unbalanced_triple_line() {
        let desc = ArrangementDescriptor {
            l3: 1,
            ..ArrangementDescriptor::planes(8)
        };
        let report = validate(&desc);
        assert_eq!(
            report.violations,
            vec![Violation::TripleLineIncidence { lhs: 5, rhs: 0 }]
        );
    }

    #[test]
    fn lists_every_violation() {
        let desc = ArrangementDescriptor {
            degrees: vec![1, 0, 1],
            p4_0: -1,
            l3: 1,
            ..Default::default()
        };
        let report = validate(&desc);
        assert!(report.violations.contains(&Violation::NonPositiveDegree { index: 1 }));
        assert!(report.violations.contains(&Violation::DegreeSum { sum: 2 }));
        assert!(report.violations.contains(&Violation::NegativeCount {
            field: "p4_0",
            value: -1
        }));
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::TripleLineIncidence { .. })));
    }

    #[test]
    fn rejects_too_many_fourfold_points() {
        // Eight planes have 56 plane triples; 15 fourfold points would need 60.
        let desc = ArrangementDescriptor {
            p4_0: 15,
            ..ArrangementDescriptor::planes(8)
        };
        assert_eq!(
            validate(&desc).violations,
            vec![Violation::NegativeTriplePoints { p3: -4 }]
        );
    }

    #[test]
    fn empty_degrees() {
        let report = validate(&ArrangementDescriptor::default());
        assert!(report.violations.contains(&Violation::EmptyDegrees));
    }
}
