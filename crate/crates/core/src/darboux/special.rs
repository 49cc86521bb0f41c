//! Curves built from a non-terminating Gauss hypergeometric function.
//!
//! A curve `g = u F + v F'` with `F = 2F1(a, b; c; x)` is handled exactly
//! through the hypergeometric equation: `x(1-x) F'' = -(c - (a+b+1) x) F' + ab F`.
//! Writing `P = m x(1-x)`, the Lie derivative is again linear in `F, F'`,
//!
//! `Xg = (Xu + m ab v) F + (u P + Xv - m (c - (a+b+1) x) v) F'`,
//!
//! and `K` is a cofactor as soon as both brackets equal `K u` and `K v`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{lie_derivative, BiPoly, Rational, UniPoly};
use crate::error::Result;
use crate::factory::VectorField;
use crate::operators::Hyp2F1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "factor", rename_all = "kebab-case")]
pub enum HypFactor {
    One,
    Value(#[serde(with = "crate::formats::hyp_params")] Hyp2F1),
    Derivative(#[serde(with = "crate::formats::hyp_params")] Hyp2F1),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialTerm {
    pub coeff: BiPoly,
    #[serde(flatten)]
    pub factor: HypFactor,
}

/// `sum_i coeff_i(x, y) * factor_i(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialCurve {
    pub terms: Vec<SpecialTerm>,
}

impl SpecialCurve {
    /// `u F + v F'`
    pub fn holonomic(u: BiPoly, v: BiPoly, hyp: Hyp2F1) -> Self {
        SpecialCurve {
            terms: vec![
                SpecialTerm {
                    coeff: u,
                    factor: HypFactor::Value(hyp.clone()),
                },
                SpecialTerm {
                    coeff: v,
                    factor: HypFactor::Derivative(hyp),
                },
            ],
        }
    }

    /// `(u, v, F)` when the curve is `u F + v F'` for a single `F`.
    pub fn as_holonomic(&self) -> Option<(BiPoly, BiPoly, &Hyp2F1)> {
        let mut hyp: Option<&Hyp2F1> = None;
        let mut u = BiPoly::zero();
        let mut v = BiPoly::zero();
        for term in &self.terms {
            let (h, is_value) = match &term.factor {
                HypFactor::One => return None,
                HypFactor::Value(h) => (h, true),
                HypFactor::Derivative(h) => (h, false),
            };
            if hyp.is_some_and(|prev| prev != h) {
                return None;
            }
            hyp = Some(h);
            if is_value {
                u = u + &term.coeff;
            } else {
                v = v + &term.coeff;
            }
        }
        hyp.map(|h| (u, v, h))
    }

    /// Numerical value, with each hypergeometric factor summed to `tol`.
    pub fn eval_f64(&self, x: f64, y: f64, tol: f64) -> Result<f64> {
        let mut total = 0.0;
        for term in &self.terms {
            let factor = match &term.factor {
                HypFactor::One => 1.0,
                HypFactor::Value(h) => h.eval(x, tol)?,
                HypFactor::Derivative(h) => h.eval_with_derivative(x, tol)?.1,
            };
            total += term.coeff.eval_f64(x, y) * factor;
        }
        Ok(total)
    }
}

/// A Darboux factor: a polynomial curve or a hypergeometric one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", content = "curve", rename_all = "kebab-case")]
pub enum CurveFactor {
    Polynomial(BiPoly),
    Special(SpecialCurve),
}

/// Exact cofactor of `u F + v F'`; `None` when the curve is not of that
/// form, when `P` is not a polynomial multiple of `x(1-x)`, or when the two
/// identities fail.
pub fn extract_special_cofactor(field: &VectorField, curve: &SpecialCurve) -> Result<Option<BiPoly>> {
    let Some((u, v, hyp)) = curve.as_holonomic() else {
        return Ok(None);
    };
    let one = Rational::one();
    let p2h = BiPoly::from_x_poly(&UniPoly::quadratic(-one.clone(), one.clone(), Rational::zero()));
    let Some(m) = field.p.exact_div(&p2h)? else {
        return Ok(None);
    };
    let rh = BiPoly::from_x_poly(&UniPoly::linear(
        -(&hyp.a + &hyp.b + &one),
        hyp.c.clone(),
    ));
    let ab = BiPoly::constant(&hyp.a * &hyp.b);
    let value_part = lie_derivative(&field.p, &field.q, &u)? + &(&m * &ab) * &v;
    let slope_part = &u * &field.p + lie_derivative(&field.p, &field.q, &v)? - &(&m * &rh) * &v;
    let k = if !u.is_zero() {
        value_part.exact_div(&u)?
    } else if !v.is_zero() {
        slope_part.exact_div(&v)?
    } else {
        return Ok(None);
    };
    Ok(k.filter(|k| k * &u == value_part && k * &v == slope_part))
}
