use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use super::{verify_invariance, Status};
use crate::algebra::{BiPoly, Rational};
use crate::error::{Error, Result};
use crate::factory::{build_invariant_curve, derive_system, paper_literal_system, CofactorLine, QuadraticSystem};
use crate::operators::{polynomial_kernel, Family, FamilySpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientDiff {
    #[serde(with = "crate::formats::rational_str")]
    pub canonical: Rational,
    #[serde(with = "crate::formats::rational_str")]
    pub literal: Rational,
}

/// Derived versus displayed system for one family member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub family: FamilySpec,
    pub canonical: QuadraticSystem,
    pub literal: QuadraticSystem,
    pub coefficient_diffs: BTreeMap<String, CoefficientDiff>,
    pub literal_invariance: Status,
    /// `Xg - Kg` for the literal field on the canonical curve.
    pub literal_residual: BiPoly,
    pub notes: String,
}

fn notes_for(family: &Family) -> String {
    match family {
        Family::Hypergeometric { .. } => "literal: x' = x(1-x) hypergeometric display".into(),
        Family::Jacobi { .. } => "literal: x' = 1 - x^2 Jacobi display".into(),
        Family::Laguerre { .. } => "literal: x' = x Laguerre display".into(),
        Family::HermiteLike { .. } => "literal: x' = 1 Hermite display (q22 = beta^2 - 2 beta, \
             q21 = 2 gamma (beta - 1), q20 = gamma^2 - beta + 2(n + 1)); the accompanying \
             derivation text instead gives q22 = beta^2 - beta, q21 = gamma (2 beta - 1), \
             q20 = lambda - beta + 1 + gamma^2, which equals the derived system for lambda = n"
            .into(),
    }
}

/// Audits one family member against its displayed formula.
pub fn audit_member(spec: &FamilySpec) -> Result<AuditReport> {
    let op = spec.family.operator()?;
    let k = CofactorLine::new(spec.beta.clone(), spec.gamma.clone());
    let canonical = derive_system(&op, &k)?;
    let literal = paper_literal_system(spec)?;
    let n = spec
        .family
        .degree()
        .ok_or_else(|| Error::Parameter("family has no polynomial solution".into()))?;
    let a0 = polynomial_kernel(&op, n)?
        .into_iter()
        .find(|s| s.degree == n)
        .ok_or_else(|| Error::Domain(format!("no degree {n} solution")))?
        .poly;
    let curve = build_invariant_curve(&a0, &canonical, &k)?;
    let cert = verify_invariance(&literal.field(), &curve.g, Some(&k.poly()))?;

    let coefficient_diffs = canonical
        .coefficients()
        .into_iter()
        .zip(literal.coefficients())
        .filter(|((_, c), (_, l))| c != l)
        .map(|((name, c), (_, l))| (name.to_string(), CoefficientDiff { canonical: c, literal: l }))
        .collect();
    Ok(AuditReport {
        family: spec.clone(),
        canonical,
        literal,
        coefficient_diffs,
        literal_invariance: cert.status,
        literal_residual: cert.residual,
        notes: notes_for(&spec.family),
    })
}

/// One report per degree in `n_range` (for the hypergeometric family the
/// degree sets `a = -n`).
pub fn audit_family(spec: &FamilySpec, n_range: RangeInclusive<u32>) -> Result<Vec<AuditReport>> {
    n_range
        .map(|n| {
            let member = FamilySpec::new(spec.family.with_degree(n), spec.beta.clone(), spec.gamma.clone());
            audit_member(&member)
        })
        .collect()
}
