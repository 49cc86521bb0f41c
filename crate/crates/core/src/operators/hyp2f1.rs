//! Floating-point Gauss hypergeometric series on `|x| < 1`.

use num_traits::One;

use crate::algebra::rational::{as_nonpositive_integer, to_f64, Rational};
use crate::error::{Error, Result};

/// Iteration cap for non-terminating series.
pub const MAX_SERIES_TERMS: usize = 1_000_000;

/// Parameters of `2F1(a, b; c; x)` with `c` not a non-positive integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyp2F1 {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl Hyp2F1 {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        if as_nonpositive_integer(&c).is_some() {
            return Err(Error::Parameter(format!(
                "2F1 lower parameter c = {c} is a non-positive integer"
            )));
        }
        Ok(Hyp2F1 { a, b, c })
    }

    /// Number of the last nonzero term when `a` or `b` is a non-positive integer.
    pub fn terminating_degree(&self) -> Option<u64> {
        match (as_nonpositive_integer(&self.a), as_nonpositive_integer(&self.b)) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, y) => x.or(y),
        }
    }

    /// Parameters of the derivative, `F' = (ab/c) 2F1(a+1, b+1; c+1; x)`.
    pub fn shifted(&self) -> Hyp2F1 {
        let one = Rational::one();
        Hyp2F1 {
            a: &self.a + &one,
            b: &self.b + &one,
            c: &self.c + &one,
        }
    }

    pub fn derivative_factor(&self) -> Rational {
        &self.a * &self.b / &self.c
    }

    /// Sums the series until three consecutive terms fall below
    /// `tol * |partial sum|`, or exactly when the series terminates.
    pub fn eval(&self, x: f64, tol: f64) -> Result<f64> {
        if !(x.abs() < 1.0) {
            return Err(Error::Domain(format!("2F1 series needs |x| < 1, got {x}")));
        }
        if !(tol > 0.0) {
            return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
        }
        let (a, b, c) = (to_f64(&self.a), to_f64(&self.b), to_f64(&self.c));
        let mut sum = 1.0;
        let mut term = 1.0;
        if let Some(n) = self.terminating_degree() {
            for k in 0..n {
                let k = k as f64;
                term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
                sum += term;
            }
            return Ok(sum);
        }
        let mut small_run = 0;
        for k in 0..MAX_SERIES_TERMS {
            let kf = k as f64;
            term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * x;
            sum += term;
            if term.abs() <= tol * sum.abs() {
                small_run += 1;
                if small_run == 3 {
                    return Ok(sum);
                }
            } else {
                small_run = 0;
            }
        }
        Err(Error::Resource(format!(
            "2F1({}, {}; {}; {x}) did not converge in {MAX_SERIES_TERMS} terms",
            self.a, self.b, self.c
        )))
    }

    /// `(F(x), F'(x))`, the derivative via the contiguous shift.
    pub fn eval_with_derivative(&self, x: f64, tol: f64) -> Result<(f64, f64)> {
        let value = self.eval(x, tol)?;
        let factor = to_f64(&self.derivative_factor());
        let slope = if factor == 0.0 {
            0.0
        } else {
            factor * self.shifted().eval(x, tol)?
        };
        Ok((value, slope))
    }
}

pub fn eval_2f1(a: &Rational, b: &Rational, c: &Rational, x: f64, tol: f64) -> Result<f64> {
    Hyp2F1::new(a.clone(), b.clone(), c.clone())?.eval(x, tol)
}

pub fn eval_2f1_with_derivative(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    x: f64,
    tol: f64,
) -> Result<(f64, f64)> {
    Hyp2F1::new(a.clone(), b.clone(), c.clone())?.eval_with_derivative(x, tol)
}
