//! Exact verification: cofactor extraction, invariance certificates,
//! Darboux exponent relations, the four-curve hypergeometric set and the
//! audit of displayed family formulas against the derived systems.

mod audit;
mod cll;
mod combination;
mod special;
mod sweep;

pub use audit::{audit_family, audit_member, AuditReport, CoefficientDiff};
pub use cll::{cll_curve_set, CurveMode};
pub use combination::{darboux_combination, DarbouxMode, DarbouxSystemSet};
pub use special::{extract_special_cofactor, CurveFactor, HypFactor, SpecialCurve, SpecialTerm};
pub use sweep::{certify_member, standard_sweep, sweep, SweepCell};

use serde::{Deserialize, Serialize};

use crate::algebra::{lie_derivative, BiPoly};
use crate::error::{Error, Result};
use crate::factory::VectorField;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// Outcome of checking `Xg = Kg`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvarianceCertificate {
    pub field: VectorField,
    pub curve: BiPoly,
    pub cofactor: Option<BiPoly>,
    pub residual: BiPoly,
    pub status: Status,
}

impl InvarianceCertificate {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

fn field_degree(field: &VectorField) -> u32 {
    field
        .p
        .total_degree()
        .into_iter()
        .chain(field.q.total_degree())
        .max()
        .unwrap_or(0)
}

/// `K` with `Xg = K g`, if `g` divides `Xg`.
pub fn extract_cofactor(field: &VectorField, g: &BiPoly) -> Result<Option<BiPoly>> {
    if g.is_constant() {
        return Err(Error::Domain("cofactor of a constant curve is undefined".into()));
    }
    lie_derivative(&field.p, &field.q, g)?.exact_div(g)
}

/// Residual `Xg - K g` for the given cofactor, or for the extracted one when
/// none is given. If extraction fails the residual is the remainder of
/// dividing `Xg` by `g`. The status passes when the residual is zero and the
/// cofactor degree is at most `m - 1` for a field of degree `m`.
pub fn verify_invariance(
    field: &VectorField,
    g: &BiPoly,
    expected_cofactor: Option<&BiPoly>,
) -> Result<InvarianceCertificate> {
    if g.is_constant() {
        return Err(Error::Domain("invariance of a constant curve is undefined".into()));
    }
    let xg = lie_derivative(&field.p, &field.q, g)?;
    let (cofactor, residual) = match expected_cofactor {
        Some(k) => (Some(k.clone()), &xg - &(k * g)),
        None => {
            let (q, r) = xg.div_rem(g)?;
            if r.is_zero() {
                (Some(q), r)
            } else {
                (None, r)
            }
        }
    };
    let degree_ok = cofactor.as_ref().is_some_and(|k| {
        k.total_degree().unwrap_or(0) < field_degree(field).max(1)
    });
    let status = Status::from_bool(residual.is_zero() && degree_ok);
    Ok(InvarianceCertificate {
        field: field.clone(),
        curve: g.clone(),
        cofactor,
        residual,
        status,
    })
}
