use num_traits::{One, Zero};

use super::combination::{darboux_combination, DarbouxMode, DarbouxSystemSet};
use super::special::{extract_special_cofactor, CurveFactor, SpecialCurve};
use super::extract_cofactor;
use crate::algebra::rational::as_nonpositive_integer;
use crate::algebra::{BiPoly, Rational, UniPoly};
use crate::error::{Error, Result};
use crate::factory::cll_special_system;
use crate::operators::Hyp2F1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveMode {
    /// Every curve must be a polynomial.
    Exact,
    /// Non-terminating curves are kept as `u F + v F'` with exactly verified cofactors.
    Holonomic,
}

/// `F (y + s) + x(1-x) F'` for a polynomial `F`.
fn polynomial_curve(f: &UniPoly, u: &BiPoly, v: &BiPoly) -> BiPoly {
    u * &BiPoly::from_x_poly(f) + v * &BiPoly::from_x_poly(&f.derivative())
}

fn terminating_polynomial(h: &Hyp2F1) -> Option<UniPoly> {
    let n = h.terminating_degree()? as u32;
    Some(crate::operators::classical::hypergeometric_polynomial(&h.a, &h.b, &h.c, n))
}

/// The four invariant curves of the special hypergeometric system:
/// `x`, `x - 1`, the curve built on `F(a, b; c; x)` and the one built on
/// the second local solution `F(1+a-c, 1+b-c; 2-c; x)`, with cofactors
/// obtained by exact division and a first-integral exponent vector.
pub fn cll_curve_set(a: &Rational, b: &Rational, c: &Rational, mode: CurveMode) -> Result<DarbouxSystemSet> {
    if as_nonpositive_integer(a).is_none_or(|n| n == 0) {
        return Err(Error::Parameter(format!("a = {a} must be a negative integer")));
    }
    if c.is_integer() {
        return Err(Error::Parameter(format!("c = {c} must not be an integer")));
    }
    let one = Rational::one();
    let sys = cll_special_system(a, b, c)?;
    let field = sys.field();
    let ab_c = a * b / c;
    let logistic = BiPoly::from_x_poly(&UniPoly::quadratic(-one.clone(), one.clone(), Rational::zero()));

    let g1 = BiPoly::x();
    let g2 = BiPoly::x() - BiPoly::one();

    let f1 = Hyp2F1::new(a.clone(), b.clone(), c.clone())?;
    let u3 = BiPoly::y() - BiPoly::from_x_poly(&UniPoly::linear(ab_c.clone(), Rational::zero()));
    let g3 = polynomial_curve(&terminating_polynomial(&f1).expect("a is a negative integer"), &u3, &logistic);

    let f2 = Hyp2F1::new(&one + a - c, &one + b - c, Rational::from_integer(2.into()) - c)?;
    let u4 = BiPoly::y() - BiPoly::from_x_poly(&UniPoly::linear(&ab_c + &one - c, c - &one));
    let g4 = match (terminating_polynomial(&f2), mode) {
        (Some(f), _) => CurveFactor::Polynomial(polynomial_curve(&f, &u4, &logistic)),
        (None, CurveMode::Holonomic) => CurveFactor::Special(SpecialCurve::holonomic(u4, logistic, f2)),
        (None, CurveMode::Exact) => {
            return Err(Error::Mode(format!(
                "F({}, {}; {}; x) does not terminate, so g4 is not a polynomial; \
                 use the holonomic mode or the numeric drift harness",
                f2.a, f2.b, f2.c
            )))
        }
    };

    let curves = vec![
        CurveFactor::Polynomial(g1),
        CurveFactor::Polynomial(g2),
        CurveFactor::Polynomial(g3),
        g4,
    ];
    let mut cofactors = Vec::with_capacity(4);
    for (i, curve) in curves.iter().enumerate() {
        let k = match curve {
            CurveFactor::Polynomial(g) => extract_cofactor(&field, g)?,
            CurveFactor::Special(s) => extract_special_cofactor(&field, s)?,
        };
        let k = k.ok_or_else(|| Error::Domain(format!("curve g{} is not invariant", i + 1)))?;
        cofactors.push(k);
    }
    let exponents = darboux_combination(&cofactors, &field, DarbouxMode::FirstIntegral)
        .ok_or_else(|| Error::Domain("cofactors admit no first-integral relation".into()))?;
    Ok(DarbouxSystemSet {
        field,
        labels: (1..=4).map(|i| format!("g{i}")).collect(),
        curves,
        cofactors,
        exponents,
        mode: DarbouxMode::FirstIntegral,
    })
}
