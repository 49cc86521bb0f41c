use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{format_rational, int, to_f64, Rational};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Largest number of stored terms an operand may carry before the fallible
/// operations refuse it.
pub const MAX_TERMS: usize = 1_000_000;

/// Exponent pair `x^x * y^y`, ordered graded-lexicographically with `x > y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub fn new(x: u32, y: u32) -> Self {
        Monomial { x, y }
    }

    pub fn degree(self) -> u32 {
        self.x + self.y
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.x <= other.x && self.y <= other.y
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.x).cmp(&(other.degree(), other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Monomial {
    type Output = Monomial;
    fn add(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.x + rhs.x, self.y + rhs.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// Sparse bivariate polynomial in `x, y` over the rationals. Zero
/// coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn x() -> Self {
        Self::term(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::term(Rational::one(), 0, 1)
    }

    /// `c x^i y^j`
    pub fn term(c: Rational, i: u32, j: u32) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(Monomial::new(i, j), c);
        p
    }

    /// Builds from `(i, j, coefficient)` triples; repeated exponents add up.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, Rational)>,
    {
        let mut p = BiPoly::zero();
        for (i, j, c) in terms {
            p.add_term(Monomial::new(i, j), c);
        }
        p
    }

    /// `a(x)` viewed as a bivariate polynomial.
    pub fn from_x_poly(a: &UniPoly) -> Self {
        BiPoly::from_terms(
            a.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (k as u32, 0, c.clone())),
        )
    }

    /// `a(x) * y^j`
    pub fn from_x_poly_times_y(a: &UniPoly, j: u32) -> Self {
        BiPoly::from_terms(
            a.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (k as u32, j, c.clone())),
        )
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Monomial, &Rational)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms
            .get(&Monomial::new(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(Monomial, &Rational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    /// Total degree; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn degree_in(&self, var: Var) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| match var {
                Var::X => m.x,
                Var::Y => m.y,
            })
            .max()
    }

    /// Coefficient of `y^j` as a polynomial in `x`.
    pub fn y_coefficient(&self, j: u32) -> UniPoly {
        let deg = self.degree_in(Var::X).unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (m, c) in self.terms() {
            if m.y == j {
                coeffs[m.x as usize] = c.clone();
            }
        }
        UniPoly::new(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    fn mul_term(&self, m: Monomial, c: &Rational) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|(k, a)| (*k + m, a * c)).collect(),
        }
    }

    /// Formal partial derivative.
    pub fn derivative(&self, var: Var) -> Self {
        let mut out = BiPoly::zero();
        for (m, c) in self.terms() {
            match var {
                Var::X if m.x > 0 => out.add_term(Monomial::new(m.x - 1, m.y), c * int(m.x as i64)),
                Var::Y if m.y > 0 => out.add_term(Monomial::new(m.x, m.y - 1), c * int(m.y as i64)),
                _ => {}
            }
        }
        out
    }

    /// Exact evaluation, Horner in `x` within each power of `y`, then in `y`.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        let max_y = self.degree_in(Var::Y).unwrap_or(0);
        for j in (0..=max_y).rev() {
            acc = acc * y + self.y_coefficient(j).eval(x);
        }
        acc
    }

    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        FloatBiPoly::new(self).eval(x, y)
    }

    pub(crate) fn check_size(&self, what: &str) -> Result<()> {
        if self.terms.len() > MAX_TERMS {
            return Err(Error::Resource(format!(
                "{what} has {} terms, cap is {MAX_TERMS}",
                self.terms.len()
            )));
        }
        Ok(())
    }

    /// Multivariate division by a single divisor in graded-lex order.
    /// Returns `(quotient, remainder)` with `self = quotient * g + remainder`
    /// and no term of the remainder divisible by the leading term of `g`.
    pub fn div_rem(&self, g: &BiPoly) -> Result<(BiPoly, BiPoly)> {
        self.check_size("dividend")?;
        g.check_size("divisor")?;
        let (lead_m, lead_c) = g
            .leading_term()
            .ok_or_else(|| Error::Domain("division by the zero polynomial".into()))?;
        let lead_c = lead_c.clone();
        let mut work = self.clone();
        let mut quotient = BiPoly::zero();
        let mut remainder = BiPoly::zero();
        while let Some((m, c)) = work.leading_term() {
            let c = c.clone();
            if lead_m.divides(m) {
                let qm = Monomial::new(m.x - lead_m.x, m.y - lead_m.y);
                let qc = &c / &lead_c;
                work = &work - &g.mul_term(qm, &qc);
                quotient.add_term(qm, qc);
            } else {
                work.terms.remove(&m);
                remainder.add_term(m, c);
            }
        }
        Ok((quotient, remainder))
    }

    /// `Some(q)` with `self = q * g` exactly, `None` when `g` does not divide.
    /// The quotient is checked by multiplying back.
    pub fn exact_div(&self, g: &BiPoly) -> Result<Option<BiPoly>> {
        let (q, r) = self.div_rem(g)?;
        if !r.is_zero() || &q * g != *self {
            return Ok(None);
        }
        Ok(Some(q))
    }
}

/// `P * dg/dx + Q * dg/dy`.
pub fn lie_derivative(p: &BiPoly, q: &BiPoly, g: &BiPoly) -> Result<BiPoly> {
    for (what, poly) in [("P", p), ("Q", q), ("g", g)] {
        poly.check_size(what)?;
    }
    Ok(p * &g.derivative(Var::X) + q * &g.derivative(Var::Y))
}

/// Dense `f64` image of a `BiPoly` for repeated evaluation.
#[derive(Clone, Debug)]
pub struct FloatBiPoly {
    // rows[j][i] is the coefficient of x^i y^j
    rows: Vec<Vec<f64>>,
}

impl FloatBiPoly {
    pub fn new(p: &BiPoly) -> Self {
        let ny = p.degree_in(Var::Y).map_or(0, |d| d as usize + 1);
        let nx = p.degree_in(Var::X).map_or(0, |d| d as usize + 1);
        let mut rows = vec![vec![0.0; nx]; ny];
        for (m, c) in p.terms() {
            rows[m.y as usize][m.x as usize] = to_f64(c);
        }
        FloatBiPoly { rows }
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.rows.iter().rev().fold(0.0, |acc, row| {
            acc * y + row.iter().rev().fold(0.0, |a, c| a * x + c)
        })
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})", format_rational(c))?;
            match m.x {
                0 => {}
                1 => write!(f, "*x")?,
                e => write!(f, "*x^{e}")?,
            }
            match m.y {
                0 => {}
                1 => write!(f, "*y")?,
                e => write!(f, "*y^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m, c.clone());
        }
        out
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m, -c);
        }
        out
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (ma, a) in self.terms() {
            for (mb, b) in rhs.terms() {
                out.add_term(ma + mb, a * b);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

super::forward_owned_ops!(BiPoly);
