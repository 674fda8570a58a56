use std::fmt;

use serde::{Deserialize, Serialize};

use super::descriptor::ArrangementDescriptor;
use super::formulas::{euler_star, euler_upstairs, pair_curve_euler_sum, EulerResult, ExtendedDescriptor};
use crate::error::ArrangementError;

/// The four octic arrangements containing a triple elliptic curve: three
/// quadrics through the curve plus either a fourth quadric or two planes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EllipticCase {
    E1,
    E2,
    E3,
    E4,
}

struct CaseData {
    degrees: &'static [u32],
    p3: i64,
    p5_1: i64,
    euler: i64,
}

impl EllipticCase {
    pub const ALL: [EllipticCase; 4] = [Self::E1, Self::E2, Self::E3, Self::E4];

    fn data(self) -> CaseData {
        match self {
            Self::E1 => CaseData { degrees: &[2, 2, 2, 2], p3: 8, p5_1: 0, euler: -16 },
            Self::E2 => CaseData { degrees: &[1, 1, 2, 2, 2], p3: 6, p5_1: 0, euler: 12 },
            Self::E3 => CaseData { degrees: &[1, 1, 2, 2, 2], p3: 3, p5_1: 1, euler: 24 },
            // Only p5_0 = p5_2 = 0 is listed; p5_1 = 2 is the value for which the
            // upstairs formula returns the listed Euler number.
            Self::E4 => CaseData { degrees: &[1, 1, 2, 2, 2], p3: 0, p5_1: 2, euler: 36 },
        }
    }

    /// Tabulated Euler number of the resolved double cover.
    pub fn euler(self) -> i64 {
        self.data().euler
    }

    /// Isolated triple points of the classified arrangement.
    pub fn p3(self) -> i64 {
        self.data().p3
    }

    /// Canonical tagged descriptor for this case.
    pub fn descriptor(self) -> ArrangementDescriptor {
        let data = self.data();
        ArrangementDescriptor {
            p5_1: data.p5_1,
            elliptic_case: Some(self),
            ..ArrangementDescriptor::new(data.degrees)
        }
    }

    /// Strata Euler numbers; the triple curve is elliptic, so `E3 = 0` and the
    /// pair sum is carried entirely by double curves.
    pub fn extended(self) -> ExtendedDescriptor {
        let data = self.data();
        ExtendedDescriptor {
            e_star: euler_star(data.degrees),
            e2: pair_curve_euler_sum(data.degrees),
            e3: 0,
            p3: data.p3,
            p5_0: 0,
            p5_1: data.p5_1,
            p5_2: 0,
        }
    }

    /// Checks degrees and the listed point counts. Fourfold points on the
    /// elliptic curve are not part of the classification and are not checked.
    pub(super) fn check(self, desc: &ArrangementDescriptor) -> Result<(), String> {
        let data = self.data();
        let degrees = desc.sorted_degrees();
        if degrees != data.degrees {
            return Err(format!("degrees {:?}, expected {:?}", degrees, data.degrees));
        }
        let expected = [("p5_0", 0), ("p5_1", data.p5_1), ("p5_2", 0), ("l3", 0)];
        let actual = [desc.p5_0, desc.p5_1, desc.p5_2, desc.l3];
        for ((field, want), got) in expected.into_iter().zip(actual) {
            if want != got {
                return Err(format!("{field} = {got}, expected {want}"));
            }
        }
        Ok(())
    }
}

impl fmt::Display for EllipticCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Euler number of a descriptor tagged with a triple-elliptic case.
pub fn classify_elliptic(desc: &ArrangementDescriptor) -> Result<EulerResult, ArrangementError> {
    let case = desc.elliptic_case.ok_or(ArrangementError::NotElliptic)?;
    case.check(desc)
        .map_err(|reason| ArrangementError::EllipticMismatch { case, reason })?;
    let result = euler_upstairs(&case.extended());
    debug_assert_eq!(result.value, case.euler());
    Ok(result)
}
