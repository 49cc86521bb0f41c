//! Second-order operators `p2 w'' + r w' + kappa w` and their polynomial
//! solutions: kernel computation, the classical families, and numerical
//! Gauss hypergeometric evaluation.

pub(crate) mod classical;
mod hyp2f1;
mod kernel;

pub use classical::classical_generator;
pub use hyp2f1::{eval_2f1, eval_2f1_with_derivative, Hyp2F1, MAX_SERIES_TERMS};
pub use kernel::{admissible_kappa, matching_degrees, polynomial_kernel, KernelSolution, MAX_KERNEL_DEGREE};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::rational::{as_nonpositive_integer, int, Rational};
use crate::algebra::UniPoly;
use crate::error::{Error, Result};

/// The operator `p2(x) w'' + r(x) w' + kappa w` with `deg p2 <= 2`,
/// `deg r <= 1`, `p2 != 0` and `kappa != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmOperator {
    p2: UniPoly,
    r: UniPoly,
    kappa: Rational,
}

impl SturmOperator {
    pub fn new(p2: UniPoly, r: UniPoly, kappa: Rational) -> Result<Self> {
        if p2.is_zero() {
            return Err(Error::Parameter("leading coefficient p2 must be nonzero".into()));
        }
        if p2.degree() > Some(2) {
            return Err(Error::Parameter(format!("p2 = {p2} has degree above 2")));
        }
        if r.degree().is_some_and(|d| d > 1) {
            return Err(Error::Parameter(format!("r = {r} has degree above 1")));
        }
        if kappa.is_zero() {
            return Err(Error::Parameter("kappa must be nonzero".into()));
        }
        Ok(SturmOperator { p2, r, kappa })
    }

    /// `x(1-x) w'' + (c - (a+b+1) x) w' - ab w`
    pub fn hypergeometric(a: &Rational, b: &Rational, c: &Rational) -> Result<Self> {
        SturmOperator::new(
            UniPoly::quadratic(-Rational::one(), Rational::one(), Rational::zero()),
            UniPoly::linear(-(a + b + Rational::one()), c.clone()),
            -(a * b),
        )
    }

    /// `(1-x^2) f'' + (A - B - (A+B+2) x) f' + n(n+A+B+1) f`, with the
    /// `A - B` constant term exactly as the family is stated.
    pub fn jacobi(a: &Rational, b: &Rational, n: u32) -> Result<Self> {
        let n = int(n as i64);
        SturmOperator::new(
            UniPoly::quadratic(-Rational::one(), Rational::zero(), Rational::one()),
            UniPoly::linear(-(a + b + int(2)), a - b),
            &n * (&n + a + b + Rational::one()),
        )
    }

    /// `x f'' + (A + 1 - x) f' + n f`
    pub fn laguerre(a: &Rational, n: u32) -> Result<Self> {
        SturmOperator::new(
            UniPoly::x(),
            UniPoly::linear(-Rational::one(), a + Rational::one()),
            int(n as i64),
        )
    }

    /// `f'' - x f' + n f`
    pub fn hermite_like(n: u32) -> Result<Self> {
        SturmOperator::new(
            UniPoly::one(),
            UniPoly::linear(-Rational::one(), Rational::zero()),
            int(n as i64),
        )
    }

    pub fn p2(&self) -> &UniPoly {
        &self.p2
    }

    pub fn r(&self) -> &UniPoly {
        &self.r
    }

    pub fn kappa(&self) -> &Rational {
        &self.kappa
    }

    /// `p2 w'' + r w' + kappa w`; zero exactly when `w` solves the operator.
    pub fn apply(&self, w: &UniPoly) -> UniPoly {
        let d1 = w.derivative();
        let d2 = d1.derivative();
        &(&self.p2 * &d2 + &self.r * &d1) + &w.scale(&self.kappa)
    }
}

/// Which classical operator family, with its own parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    Hypergeometric {
        #[serde(with = "crate::formats::rational_str")]
        a: Rational,
        #[serde(with = "crate::formats::rational_str")]
        b: Rational,
        #[serde(with = "crate::formats::rational_str")]
        c: Rational,
    },
    /// Parameters `A`, `B` of the Jacobi-like operator.
    Jacobi {
        #[serde(with = "crate::formats::rational_str")]
        a: Rational,
        #[serde(with = "crate::formats::rational_str")]
        b: Rational,
        n: u32,
    },
    /// Parameter `A` of the Laguerre-like operator.
    Laguerre {
        #[serde(with = "crate::formats::rational_str")]
        a: Rational,
        n: u32,
    },
    HermiteLike {
        n: u32,
    },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Hypergeometric { .. } => "hypergeometric",
            Family::Jacobi { .. } => "jacobi",
            Family::Laguerre { .. } => "laguerre",
            Family::HermiteLike { .. } => "hermite-like",
        }
    }

    /// Degree of the polynomial solution the family describes. For the
    /// hypergeometric family this is the smallest `n` with `a = -n` or `b = -n`.
    pub fn degree(&self) -> Option<u32> {
        match self {
            Family::Hypergeometric { a, b, .. } => {
                let na = as_nonpositive_integer(a);
                let nb = as_nonpositive_integer(b);
                match (na, nb) {
                    (Some(x), Some(y)) => Some(x.min(y) as u32),
                    (x, y) => x.or(y).map(|v| v as u32),
                }
            }
            Family::Jacobi { n, .. } | Family::Laguerre { n, .. } | Family::HermiteLike { n } => Some(*n),
        }
    }

    /// Same family with degree `n`; for the hypergeometric family this sets `a = -n`.
    pub fn with_degree(&self, n: u32) -> Family {
        match self.clone() {
            Family::Hypergeometric { b, c, .. } => Family::Hypergeometric {
                a: int(-(n as i64)),
                b,
                c,
            },
            Family::Jacobi { a, b, .. } => Family::Jacobi { a, b, n },
            Family::Laguerre { a, .. } => Family::Laguerre { a, n },
            Family::HermiteLike { .. } => Family::HermiteLike { n },
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Family::Hypergeometric { a, b, c } => {
                if as_nonpositive_integer(c).is_some() {
                    return Err(Error::Parameter(format!("c = {c} is a non-positive integer")));
                }
                if self.degree().is_none() {
                    return Err(Error::Parameter(
                        "a polynomial solution needs a or b to be a non-positive integer".into(),
                    ));
                }
                if (a * b).is_zero() {
                    return Err(Error::Parameter("kappa = -ab vanishes".into()));
                }
                Ok(())
            }
            Family::Jacobi { n, .. } | Family::Laguerre { n, .. } | Family::HermiteLike { n } => {
                if *n == 0 {
                    return Err(Error::Parameter("n must be at least 1 (n = 0 forces kappa = 0)".into()));
                }
                self.operator().map(|_| ())
            }
        }
    }

    pub fn operator(&self) -> Result<SturmOperator> {
        match self {
            Family::Hypergeometric { a, b, c } => SturmOperator::hypergeometric(a, b, c),
            Family::Jacobi { a, b, n } => SturmOperator::jacobi(a, b, *n),
            Family::Laguerre { a, n } => SturmOperator::laguerre(a, *n),
            Family::HermiteLike { n } => SturmOperator::hermite_like(*n),
        }
    }
}

/// A family together with the cofactor parameters `beta`, `gamma` of
/// `K = y + beta x + gamma`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    #[serde(flatten)]
    pub family: Family,
    #[serde(with = "crate::formats::rational_str")]
    pub beta: Rational,
    #[serde(with = "crate::formats::rational_str")]
    pub gamma: Rational,
}

impl FamilySpec {
    pub fn new(family: Family, beta: Rational, gamma: Rational) -> Self {
        FamilySpec { family, beta, gamma }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn rejects_degenerate_operators() {
        assert!(SturmOperator::new(UniPoly::zero(), UniPoly::one(), int(1)).is_err());
        assert!(SturmOperator::new(UniPoly::one(), UniPoly::one(), int(0)).is_err());
        assert!(SturmOperator::new(UniPoly::from_ints(&[0, 0, 0, 1]), UniPoly::one(), int(1)).is_err());
        assert!(SturmOperator::new(UniPoly::one(), UniPoly::from_ints(&[0, 0, 1]), int(1)).is_err());
    }

    #[test]
    fn family_validation() {
        assert!(Family::HermiteLike { n: 0 }.validate().is_err());
        let bad_c = Family::Hypergeometric { a: int(-2), b: rat(1, 2), c: int(-1) };
        assert!(bad_c.validate().is_err());
        let no_poly = Family::Hypergeometric { a: rat(1, 2), b: rat(1, 3), c: rat(1, 5) };
        assert!(no_poly.validate().is_err());
        let ok = Family::Hypergeometric { a: int(-3), b: int(-1), c: rat(1, 3) };
        assert_eq!(ok.degree(), Some(1));
        assert!(ok.validate().is_ok());
    }
}
