//! Verbatim transcriptions of the displayed family systems. These are audit
//! targets: printed typos are reproduced, never corrected.

use num_traits::One;

use super::{CofactorLine, QuadraticSystem};
use crate::algebra::rational::int;
use crate::algebra::{Rational, UniPoly};
use crate::error::Result;
use crate::operators::{Family, FamilySpec, SturmOperator};

pub fn paper_literal_system(spec: &FamilySpec) -> Result<QuadraticSystem> {
    spec.family.validate()?;
    let (b, g) = (&spec.beta, &spec.gamma);
    let one = Rational::one();
    let two = int(2);
    let (p2, q11, q10, q22, q21, q20) = match &spec.family {
        Family::Hypergeometric { a, b: pb, c } => (
            UniPoly::quadratic(-one.clone(), one.clone(), int(0)),
            &two * b - a - pb + &one,
            c - &one + &two * g,
            b * b + (&two - a - pb) * b + (a - &one) * (pb - &one),
            c * b - a * pb + (&one - g) * (-(&two * b) - &one + a + pb),
            g * (g + c - &one),
        ),
        Family::Jacobi { a, b: pb, n } => {
            let n = int(*n as i64);
            let nn1 = &n * (&n + &one);
            (
                UniPoly::quadratic(-one.clone(), int(0), one.clone()),
                &two * b - a - pb,
                &two * g + a - pb,
                b * b + b - &nn1 - (&one + &n + b) * (a + pb),
                (b - g) * a - (g + b) * pb + &two * g * b,
                (&n + &one - g) * pb + (&n + &one + g) * a + &nn1 + g * g - b,
            )
        }
        Family::Laguerre { a, n } => {
            let n = int(*n as i64);
            (
                UniPoly::x(),
                &two * b - &one,
                &two * g + a,
                (b - &one) * b,
                b * (a + &two * g - &one) + &n + &one - g,
                a * g + g * g,
            )
        }
        Family::HermiteLike { n } => {
            let n = int(*n as i64);
            (
                UniPoly::one(),
                &two * b - &one,
                &two * g,
                b * b - &two * b,
                &two * g * (b - &one),
                g * g - b + &two * (&n + &one),
            )
        }
    };
    QuadraticSystem::new(p2, UniPoly::linear(q11, q10), UniPoly::quadratic(q22, q21, q20))
}

/// General system as printed, with `tau11 = r1`, `tau10 = r0`, `tau0 = kappa`.
/// The `x` coefficient of `q2` is read exactly as typeset,
/// `2 p22 - (2 beta - tau0 + tau11) p21 + ...`.
pub fn general_literal_system(op: &SturmOperator, k: &CofactorLine) -> Result<QuadraticSystem> {
    let (p22, p21, p20) = (op.p2().coeff(2), op.p2().coeff(1), op.p2().coeff(0));
    let (t11, t10, t0) = (op.r().coeff(1), op.r().coeff(0), op.kappa().clone());
    let (b, g) = (&k.beta, &k.gamma);
    let two = int(2);
    let three = int(3);
    let q11 = &two * b - &two * &p22 + &t11;
    let q10 = &two * g + &t10 - &p21;
    let q22 = &two * &p22 * &p22 - (&t11 - &t0 + &three * b) * &p22 + b * b + b * &t11;
    let q21 = &two * &p22 - (&two * b - &t0 + &t11) * &p21 + g * (&t11 - &two * &p22 + &two * b) + b * &t10;
    let q20 = &p20 * (&two * &p22 - &t11 + &t0 - b) + g * (g + &t10 - &p21);
    QuadraticSystem::new(op.p2().clone(), UniPoly::linear(q11, q10), UniPoly::quadratic(q22, q21, q20))
}

/// System obtained from the printed reduction `q2 = (kappa + r') p2 - ...`
/// together with the comparison relations for `q11`, `q10`.
pub fn reduction_literal_system(op: &SturmOperator, k: &CofactorLine) -> Result<QuadraticSystem> {
    let two = int(2);
    let p2 = op.p2();
    let q11 = op.r().coeff(1) - &two * p2.coeff(2) + &two * &k.beta;
    let q10 = op.r().coeff(0) - p2.coeff(1) + &two * &k.gamma;
    // -(beta x + gamma)((beta - q11) x + gamma - q10)
    let s = UniPoly::linear(&q11 - &k.beta, &q10 - &k.gamma);
    let q2 = p2.scale(&(op.kappa() + op.r().coeff(1))) + &k.x_part() * &s;
    QuadraticSystem::new(p2.clone(), UniPoly::linear(q11, q10), q2)
}
