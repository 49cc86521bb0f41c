//! Exact kernels and solves via fraction-free (Bareiss) elimination.
//!
//! Each rational row is first scaled to integers; elimination then stays in
//! `BigInt` with exact divisions by the previous pivot, and rationals only
//! reappear during back substitution.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::Rational;

/// Integer row echelon form of a matrix.
#[derive(Clone, Debug)]
pub struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    ncols: usize,
}

fn integer_row(row: &[Rational], ncols: usize) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut out: Vec<BigInt> = row
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    out.resize(ncols, BigInt::zero());
    out
}

impl Echelon {
    pub fn new(rows: &[Vec<Rational>], ncols: usize) -> Self {
        let mut a: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r, ncols)).collect();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for col in 0..ncols {
            if r == a.len() {
                break;
            }
            let Some(p) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let (head, tail) = a.split_at_mut(r + 1);
            let pivot_row = &head[r];
            for row in tail.iter_mut() {
                let factor = row[col].clone();
                for j in col + 1..ncols {
                    let num = &pivot_row[col] * &row[j] - &factor * &pivot_row[j];
                    debug_assert!((&num % &prev).is_zero(), "Bareiss division not exact");
                    row[j] = num / &prev;
                }
                row[col] = BigInt::zero();
            }
            // rows above the pivot keep their scale; only new pivots divide by prev
            prev = a[r][col].clone();
            pivots.push(col);
            r += 1;
        }
        a.truncate(r);
        Echelon {
            rows: a,
            pivots,
            ncols,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Solution with the given values on the free columns.
    fn back_substitute(&self, free_values: &[(usize, Rational)]) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.ncols];
        for (col, v) in free_values {
            x[*col] = v.clone();
        }
        for (row, &pc) in self.rows.iter().zip(&self.pivots).rev() {
            let mut acc = Rational::zero();
            for j in pc + 1..self.ncols {
                if !row[j].is_zero() && !x[j].is_zero() {
                    acc += Rational::from_integer(row[j].clone()) * &x[j];
                }
            }
            x[pc] = -acc / Rational::from_integer(row[pc].clone());
        }
        x
    }

    fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Kernel basis: one vector per free column, that column set to 1 and the
    /// other free columns to 0. Vectors are ordered by free column.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        self.free_columns()
            .into_iter()
            .map(|f| self.back_substitute(&[(f, Rational::one())]))
            .collect()
    }
}

/// Basis of `{ v : A v = 0 }` for the matrix with the given rows.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    Echelon::new(rows, ncols).kernel()
}

/// A particular solution of `A v = b` (free variables set to zero), or `None`
/// when the system is inconsistent.
pub fn solve(rows: &[Vec<Rational>], rhs: &[Rational], ncols: usize) -> Option<Vec<Rational>> {
    let augmented: Vec<Vec<Rational>> = rows
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.resize(ncols, Rational::zero());
            r.push(-b.clone());
            r
        })
        .collect();
    let ech = Echelon::new(&augmented, ncols + 1);
    if ech.pivots.contains(&ncols) {
        return None;
    }
    let mut v = ech.back_substitute(&[(ncols, Rational::one())]);
    v.pop();
    Some(v)
}

/// `A v` for a rational matrix.
pub fn apply(rows: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    rows.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}
