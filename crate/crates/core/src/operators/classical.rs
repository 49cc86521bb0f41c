//! Closed-form coefficients of the classical polynomial families. These are
//! computed from explicit sums, independently of the kernel solver, so the
//! two routes can be checked against each other.

use num_traits::{One, Zero};

use super::{Family, FamilySpec};
use crate::algebra::rational::{binomial, factorial, int, Rational};
use crate::algebra::UniPoly;
use crate::error::{Error, Result};

/// Terminating Gauss series `sum_k (a)_k (b)_k / ((c)_k k!) x^k`, summed to
/// the degree at which `(a)_k (b)_k` first vanishes.
pub(crate) fn hypergeometric_polynomial(a: &Rational, b: &Rational, c: &Rational, degree: u32) -> UniPoly {
    let mut coeffs = Vec::with_capacity(degree as usize + 1);
    let mut term = Rational::one();
    for k in 0..=degree {
        coeffs.push(term.clone());
        let kk = int(k as i64);
        term = term * (a + &kk) * (b + &kk) / ((c + &kk) * (&kk + int(1)));
    }
    UniPoly::new(coeffs)
}

/// `P_n^{(alpha, beta)}` from the binomial sum in `(x-1)/2`, `(x+1)/2`.
fn jacobi_polynomial(alpha: &Rational, beta: &Rational, n: u32) -> UniPoly {
    let half = Rational::new(1.into(), 2.into());
    let xm = UniPoly::linear(half.clone(), -half.clone());
    let xp = UniPoly::linear(half.clone(), half);
    let na = int(n as i64) + alpha;
    let nb = int(n as i64) + beta;
    let mut pow_m = vec![UniPoly::one()];
    let mut pow_p = vec![UniPoly::one()];
    for _ in 0..n {
        pow_m.push(pow_m.last().unwrap() * &xm);
        pow_p.push(pow_p.last().unwrap() * &xp);
    }
    (0..=n).fold(UniPoly::zero(), |acc, s| {
        let coef = binomial(&na, n - s) * binomial(&nb, s);
        acc + (&pow_m[s as usize] * &pow_p[(n - s) as usize]).scale(&coef)
    })
}

/// `L_n^{(alpha)} = sum_k (-1)^k C(n+alpha, n-k) x^k / k!`
fn laguerre_polynomial(alpha: &Rational, n: u32) -> UniPoly {
    let na = int(n as i64) + alpha;
    UniPoly::new(
        (0..=n)
            .map(|k| {
                let sign = if k % 2 == 0 { int(1) } else { int(-1) };
                sign * binomial(&na, n - k) / factorial(k)
            })
            .collect(),
    )
}

/// Probabilists' Hermite `He_n`, the solution of `f'' - x f' + n f = 0`.
fn hermite_like_polynomial(n: u32) -> UniPoly {
    let mut coeffs = vec![Rational::zero(); n as usize + 1];
    for m in 0..=n / 2 {
        let sign = if m % 2 == 0 { int(1) } else { int(-1) };
        let denom = factorial(m) * factorial(n - 2 * m) * int(2).pow(m as i32);
        coeffs[(n - 2 * m) as usize] = sign * factorial(n) / denom;
    }
    UniPoly::new(coeffs)
}

/// The polynomial `a0` a family describes.
///
/// The hypergeometric family returns the terminating series itself (constant
/// term 1); the orthogonal families are scaled to leading coefficient 1.
/// The Jacobi-like operator carries `A - B` in its constant term, which is
/// the classical Jacobi equation with the roles of the two parameters
/// exchanged, so `Jacobi { a: A, b: B, n }` yields `P_n^{(B, A)}`.
pub fn classical_generator(spec: &FamilySpec) -> Result<UniPoly> {
    spec.family.validate()?;
    let poly = match &spec.family {
        Family::Hypergeometric { a, b, c } => {
            let n = spec.family.degree().expect("validated");
            return Ok(hypergeometric_polynomial(a, b, c, n));
        }
        Family::Jacobi { a, b, n } => jacobi_polynomial(b, a, *n),
        Family::Laguerre { a, n } => laguerre_polynomial(a, *n),
        Family::HermiteLike { n } => hermite_like_polynomial(*n),
    };
    let n = spec.family.degree().expect("orthogonal families carry n");
    if poly.degree() != Some(n as usize) {
        return Err(Error::Parameter(format!(
            "{} parameters are degenerate: closed form drops below degree {n}",
            spec.family.name()
        )));
    }
    Ok(poly.monic())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use crate::operators::polynomial_kernel;
    use proptest::prelude::*;

    fn spec(family: Family) -> FamilySpec {
        FamilySpec::new(family, int(0), int(0))
    }

    #[test]
    fn two_term_hypergeometric() {
        let (b, c) = (rat(5, 2), rat(1, 3));
        let p = classical_generator(&spec(Family::Hypergeometric { a: int(-1), b: b.clone(), c: c.clone() })).unwrap();
        assert_eq!(p, UniPoly::linear(-(b / c), int(1)));
    }

    #[test]
    fn small_orthogonal_cases() {
        assert_eq!(
            classical_generator(&spec(Family::HermiteLike { n: 2 })).unwrap(),
            UniPoly::from_ints(&[-1, 0, 1])
        );
        assert_eq!(
            classical_generator(&spec(Family::Laguerre { a: int(0), n: 1 })).unwrap(),
            UniPoly::from_ints(&[-1, 1])
        );
        // Legendre P_2 = (3x^2 - 1)/2
        assert_eq!(
            classical_generator(&spec(Family::Jacobi { a: int(0), b: int(0), n: 2 })).unwrap(),
            UniPoly::new(vec![rat(-1, 3), int(0), int(1)])
        );
        // He_4 = x^4 - 6x^2 + 3
        assert_eq!(
            classical_generator(&spec(Family::HermiteLike { n: 4 })).unwrap(),
            UniPoly::from_ints(&[3, 0, -6, 0, 1])
        );
    }

    #[test]
    fn asymmetric_jacobi_uses_swapped_parameters() {
        let f = Family::Jacobi { a: rat(1, 2), b: int(0), n: 3 };
        let op = f.operator().unwrap();
        let p = classical_generator(&spec(f)).unwrap();
        assert!(op.apply(&p).is_zero());
    }

    #[test]
    fn degenerate_jacobi_is_rejected() {
        // n + A + B + 1 = 0 kills the leading coefficient
        let f = Family::Jacobi { a: int(-2), b: int(-1), n: 2 };
        assert!(classical_generator(&spec(f)).is_err());
    }

    fn check_family(family: Family) {
        let op = family.operator().unwrap();
        let p = classical_generator(&spec(family.clone())).unwrap();
        assert!(op.apply(&p).is_zero(), "{family:?} closed form is not a solution");
        let n = family.degree().unwrap();
        let kernel = polynomial_kernel(&op, n).unwrap();
        let top = kernel.iter().find(|s| s.degree == n).expect("kernel has the degree-n solution");
        assert!(top.poly.ratio_to(&p).is_some(), "{family:?}: routes disagree");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(5))]
        #[test]
        fn closed_forms_solve_their_operators(
            an in 1i64..20, ad in 1i64..7,
            bn in 0i64..20, bd in 1i64..7,
            cn in 1i64..20, cd in 2i64..7,
        ) {
            let (pa, pb) = (rat(an, ad), rat(bn, bd));
            let c = rat(cn, cd);
            prop_assume!(!c.is_integer());
            for n in 1..=30u32 {
                check_family(Family::Jacobi { a: pa.clone(), b: pb.clone(), n });
                check_family(Family::Laguerre { a: pa.clone(), n });
                check_family(Family::HermiteLike { n });
                check_family(Family::Hypergeometric { a: int(-(n as i64)), b: pa.clone(), c: c.clone() });
            }
        }
    }
}
