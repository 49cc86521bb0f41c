use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::special::CurveFactor;
use crate::algebra::linalg::{nullspace, solve};
use crate::algebra::{BiPoly, Monomial, Rational};
use crate::factory::VectorField;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DarbouxMode {
    /// `sum lambda_i K_i = 0`: `prod f_i^lambda_i` is a first integral.
    FirstIntegral,
    /// `sum lambda_i K_i = -div`: `prod f_i^lambda_i` is an integrating factor.
    IntegratingFactor,
}

/// Invariant curves with their cofactors and a verified exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DarbouxSystemSet {
    pub field: VectorField,
    pub labels: Vec<String>,
    pub curves: Vec<CurveFactor>,
    pub cofactors: Vec<BiPoly>,
    #[serde(with = "crate::formats::rational_vec")]
    pub exponents: Vec<Rational>,
    pub mode: DarbouxMode,
}

impl DarbouxSystemSet {
    /// Re-substitutes the exponents into the mode equation.
    pub fn relation_holds(&self) -> bool {
        relation_holds(&self.cofactors, &self.exponents, &self.field, self.mode)
    }
}

fn target(field: &VectorField, mode: DarbouxMode) -> BiPoly {
    match mode {
        DarbouxMode::FirstIntegral => BiPoly::zero(),
        DarbouxMode::IntegratingFactor => -field.divergence(),
    }
}

fn relation_holds(cofactors: &[BiPoly], exponents: &[Rational], field: &VectorField, mode: DarbouxMode) -> bool {
    if cofactors.len() != exponents.len() {
        return false;
    }
    let sum = cofactors
        .iter()
        .zip(exponents)
        .fold(BiPoly::zero(), |acc, (k, l)| acc + k.scale(l));
    sum == target(field, mode)
}

/// Exponents `lambda` with `sum lambda_i K_i = 0` (first integral) or
/// `= -(P_x + Q_y)` (integrating factor), solved exactly over the monomial
/// coefficients.
///
/// In first-integral mode a kernel vector is returned, scaled so its last
/// entry is `-1` when some basis vector has a nonzero last entry, otherwise
/// so its first nonzero entry is `1`. In integrating-factor mode the
/// particular solution with free exponents set to zero is returned.
pub fn darboux_combination(cofactors: &[BiPoly], field: &VectorField, mode: DarbouxMode) -> Option<Vec<Rational>> {
    if cofactors.is_empty() {
        return None;
    }
    let rhs_poly = target(field, mode);
    let monomials: BTreeSet<Monomial> = cofactors
        .iter()
        .chain(std::iter::once(&rhs_poly))
        .flat_map(|k| k.terms().map(|(m, _)| m))
        .collect();
    let rows: Vec<Vec<Rational>> = monomials
        .iter()
        .map(|m| cofactors.iter().map(|k| k.coeff(m.x, m.y)).collect())
        .collect();
    let n = cofactors.len();
    let exponents = match mode {
        DarbouxMode::FirstIntegral => {
            let basis = nullspace(&rows, n);
            let chosen = basis
                .iter()
                .find(|v| !v[n - 1].is_zero())
                .or_else(|| basis.first())?
                .clone();
            normalize(chosen)
        }
        DarbouxMode::IntegratingFactor => {
            let rhs: Vec<Rational> = monomials.iter().map(|m| rhs_poly.coeff(m.x, m.y)).collect();
            solve(&rows, &rhs, n)?
        }
    };
    relation_holds(cofactors, &exponents, field, mode).then_some(exponents)
}

fn normalize(v: Vec<Rational>) -> Vec<Rational> {
    let last = v.last().cloned().unwrap_or_else(Rational::zero);
    let scale = if !last.is_zero() {
        -Rational::one() / last
    } else {
        match v.iter().find(|c| !c.is_zero()) {
            Some(lead) => Rational::one() / lead,
            None => return v,
        }
    };
    v.into_iter().map(|c| c * &scale).collect()
}
