use num_traits::Zero;

use super::SturmOperator;
use crate::algebra::linalg::Echelon;
use crate::algebra::rational::{int, Rational};
use crate::algebra::UniPoly;
use crate::error::{Error, Result};

pub const MAX_KERNEL_DEGREE: u32 = 512;

/// The only `kappa` for which a solution of degree `n` can exist: the `x^n`
/// coefficient of the operator applied to `x^n` must vanish.
pub fn admissible_kappa(p2: &UniPoly, r: &UniPoly, n: u32) -> Rational {
    let n = int(n as i64);
    -(&n * (&n - int(1)) * p2.coeff(2) + &n * r.coeff(1))
}

/// Degrees `1..=nmax` whose admissible kappa equals the operator's.
pub fn matching_degrees(op: &SturmOperator, nmax: u32) -> Vec<u32> {
    (1..=nmax)
        .filter(|&n| admissible_kappa(op.p2(), op.r(), n) == *op.kappa())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelSolution {
    pub degree: u32,
    pub poly: UniPoly,
}

/// Coefficient system of `p2 w'' + r w' + kappa w = 0` for `deg w <= n`:
/// row `k` is the `x^k` coefficient, column `j` multiplies `w_j`.
fn coefficient_matrix(op: &SturmOperator, n: usize) -> Vec<Vec<Rational>> {
    let p2 = op.p2();
    let r = op.r();
    let mut rows = vec![vec![Rational::zero(); n + 1]; n + 1];
    for (k, row) in rows.iter_mut().enumerate() {
        let kk = int(k as i64);
        row[k] = &kk * (&kk - int(1)) * p2.coeff(2) + &kk * r.coeff(1) + op.kappa();
        if k < n {
            row[k + 1] = (&kk + int(1)) * (&kk * p2.coeff(1) + r.coeff(0));
        }
        if k + 1 < n {
            row[k + 2] = (&kk + int(2)) * (&kk + int(1)) * p2.coeff(0);
        }
    }
    rows
}

/// Polynomial solutions of the operator up to degree `nmax`.
///
/// For every degree `n` whose admissible kappa matches, the degree-`n`
/// coefficient system is solved exactly; if its kernel contains an element
/// of exact degree `n`, that element (free coefficients of lower matching
/// degrees set to zero, leading coefficient 1) is reported for `n`. Lower
/// degree kernel elements are reported under their own degree, so the union
/// of the list is a basis of all polynomial solutions of degree `<= nmax`.
pub fn polynomial_kernel(op: &SturmOperator, nmax: u32) -> Result<Vec<KernelSolution>> {
    if nmax > MAX_KERNEL_DEGREE {
        return Err(Error::Parameter(format!(
            "nmax = {nmax} exceeds {MAX_KERNEL_DEGREE}"
        )));
    }
    let mut out = Vec::new();
    for n in matching_degrees(op, nmax) {
        let matrix = coefficient_matrix(op, n as usize);
        let kernel = Echelon::new(&matrix, n as usize + 1).kernel();
        let Some(top) = kernel.into_iter().find(|v| !v[n as usize].is_zero()) else {
            continue;
        };
        let poly = UniPoly::new(top).monic();
        let residual = op.apply(&poly);
        if !residual.is_zero() {
            return Err(Error::Domain(format!(
                "kernel element of degree {n} leaves residual {residual}"
            )));
        }
        out.push(KernelSolution { degree: n, poly });
    }
    Ok(out)
}
