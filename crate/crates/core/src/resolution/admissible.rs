use serde::Serialize;

use crate::error::LedgerError;

/// Blow-up of a smooth centre of codimension `codim` along which the branch
/// divisor has generic multiplicity `multiplicity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissibilityQuery {
    pub codim: u32,
    pub multiplicity: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Admissibility {
    pub admissible: bool,
    /// 1 when the exceptional divisor joins the branch locus (odd multiplicity).
    pub epsilon: u32,
}

/// A blow-up preserves `K + B/2` exactly when `m = 2(r - 1) + ε` with
/// `ε = m mod 2`: curves of multiplicity 2 or 3, points of multiplicity 4 or 5.
pub fn is_admissible(query: AdmissibilityQuery) -> Result<Admissibility, LedgerError> {
    let AdmissibilityQuery { codim, multiplicity } = query;
    if !(2..=3).contains(&codim) {
        return Err(LedgerError::CodimensionOutOfRange(codim));
    }
    let epsilon = multiplicity % 2;
    Ok(Admissibility {
        admissible: multiplicity == 2 * (codim - 1) + epsilon,
        epsilon,
    })
}
