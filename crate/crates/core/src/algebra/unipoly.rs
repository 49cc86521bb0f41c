use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{format_rational, int, Rational};

/// Dense univariate polynomial in `x` over the rationals.
///
/// `coeffs[k]` is the coefficient of `x^k`; trailing zeros are never stored,
/// so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        UniPoly::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// `c0 + c1 x + c2 x^2 + ...`
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// `c1 x + c0`
    pub fn linear(c1: Rational, c0: Rational) -> Self {
        UniPoly::new(vec![c0, c1])
    }

    /// `c2 x^2 + c1 x + c0`
    pub fn quadratic(c2: Rational, c1: Rational, c0: Rational) -> Self {
        UniPoly::new(vec![c0, c1, c2])
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        UniPoly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Leading coefficient scaled to one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&(Rational::one() / lc)),
            None => UniPoly::zero(),
        }
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + super::rational::to_f64(c))
    }

    /// `Some(c)` with `self = c * other` when the two are proportional.
    pub fn ratio_to(&self, other: &UniPoly) -> Option<Rational> {
        if self.degree() != other.degree() {
            return None;
        }
        let (lc_a, lc_b) = (self.leading()?, other.leading()?);
        let ratio = lc_a / lc_b;
        (other.scale(&ratio) == *self).then_some(ratio)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", format_rational(c))?,
                1 => write!(f, "({})*x", format_rational(c))?,
                _ => write!(f, "({})*x^{}", format_rational(c), k)?,
            }
        }
        Ok(())
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

super::forward_owned_ops!(UniPoly);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn difference_of_squares() {
        let p = UniPoly::from_ints(&[1, 1]) * UniPoly::from_ints(&[-1, 1]);
        assert_eq!(p, UniPoly::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn rational_product() {
        let a = UniPoly::monomial(rat(1, 2), 1);
        let b = UniPoly::monomial(rat(2, 3), 1);
        assert_eq!(a * b, UniPoly::monomial(rat(1, 3), 2));
    }

    #[test]
    fn derivative_and_eval() {
        let p = UniPoly::from_ints(&[-1, 0, 1]);
        assert_eq!(p.derivative(), UniPoly::from_ints(&[0, 2]));
        assert_eq!(p.eval(&rat(3, 2)), rat(5, 4));
        assert!(UniPoly::constant(int(7)).derivative().is_zero());
    }

    #[test]
    fn cancellation_normalizes() {
        let p = UniPoly::from_ints(&[1, 2, 3]);
        let q = UniPoly::from_ints(&[0, 0, 3]);
        assert_eq!((&p - &q).degree(), Some(1));
        assert!((&p - &p).is_zero());
        assert_eq!(p.ratio_to(&p.scale(&rat(-2, 5))), Some(rat(-5, 2)));
    }
}
