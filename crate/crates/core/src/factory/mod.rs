//! Quadratic systems `x' = p2(x)`, `y' = y^2 + q1(x) y + q2(x)` and their
//! invariant curves `g = a0 y + a1`.

mod literal;
mod pencil;

pub use literal::{general_literal_system, paper_literal_system, reduction_literal_system};
pub use pencil::{pencil_system, PencilSpec};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{BiPoly, Rational, UniPoly};
use crate::error::{Error, Result};
use crate::operators::{polynomial_kernel, SturmOperator};

/// Polynomial vector field `(P, Q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorField {
    pub p: BiPoly,
    pub q: BiPoly,
}

impl VectorField {
    /// `dP/dx + dQ/dy`
    pub fn divergence(&self) -> BiPoly {
        self.p.derivative(crate::algebra::Var::X) + self.q.derivative(crate::algebra::Var::Y)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticSystem {
    pub p2: UniPoly,
    pub q1: UniPoly,
    pub q2: UniPoly,
}

impl QuadraticSystem {
    pub fn new(p2: UniPoly, q1: UniPoly, q2: UniPoly) -> Result<Self> {
        if p2.degree() > Some(2) || q1.degree() > Some(1) || q2.degree() > Some(2) {
            return Err(Error::Parameter(format!(
                "not a quadratic system: p2 = {p2}, q1 = {q1}, q2 = {q2}"
            )));
        }
        Ok(QuadraticSystem { p2, q1, q2 })
    }

    pub fn p(&self) -> BiPoly {
        BiPoly::from_x_poly(&self.p2)
    }

    /// `y^2 + q1(x) y + q2(x)`
    pub fn q(&self) -> BiPoly {
        BiPoly::y() * BiPoly::y()
            + BiPoly::from_x_poly_times_y(&self.q1, 1)
            + BiPoly::from_x_poly(&self.q2)
    }

    pub fn field(&self) -> VectorField {
        VectorField {
            p: self.p(),
            q: self.q(),
        }
    }

    /// Named coefficients `p22 .. q20`, in a fixed order.
    pub fn coefficients(&self) -> [(&'static str, Rational); 8] {
        [
            ("p22", self.p2.coeff(2)),
            ("p21", self.p2.coeff(1)),
            ("p20", self.p2.coeff(0)),
            ("q11", self.q1.coeff(1)),
            ("q10", self.q1.coeff(0)),
            ("q22", self.q2.coeff(2)),
            ("q21", self.q2.coeff(1)),
            ("q20", self.q2.coeff(0)),
        ]
    }
}

/// Cofactor `K = y + beta x + gamma`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CofactorLine {
    #[serde(with = "crate::formats::rational_str")]
    pub beta: Rational,
    #[serde(with = "crate::formats::rational_str")]
    pub gamma: Rational,
}

impl CofactorLine {
    pub fn new(beta: Rational, gamma: Rational) -> Self {
        CofactorLine { beta, gamma }
    }

    /// `beta x + gamma`
    pub fn x_part(&self) -> UniPoly {
        UniPoly::linear(self.beta.clone(), self.gamma.clone())
    }

    pub fn poly(&self) -> BiPoly {
        BiPoly::y() + BiPoly::from_x_poly(&self.x_part())
    }
}

/// `s(x) = (q11 - beta) x + (q10 - gamma)`, so that `a1 = p2 a0' + s a0`.
pub fn shift_term(sys: &QuadraticSystem, k: &CofactorLine) -> UniPoly {
    UniPoly::linear(sys.q1.coeff(1) - &k.beta, sys.q1.coeff(0) - &k.gamma)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveBundle {
    pub a0: UniPoly,
    pub g: BiPoly,
    pub n: u32,
    pub system: QuadraticSystem,
    pub cofactor: CofactorLine,
}

/// Canonical system for an operator and cofactor, by matching the `y^1` and
/// `y^0` coefficients of `Xg - Kg` with `g = a0 y + a1`:
///
/// - `q11 = r1 - 2 p22 + 2 beta`, `q10 = r0 - p21 + 2 gamma`
/// - `q2 = (kappa + beta - q11) p2 + (beta x + gamma) s`
///
/// Before returning, every polynomial solution of the operator is turned
/// into a curve and checked to be invariant with cofactor `K`.
pub fn derive_system(op: &SturmOperator, k: &CofactorLine) -> Result<QuadraticSystem> {
    let p2 = op.p2();
    let r = op.r();
    let two = Rational::from_integer(2.into());
    let q11 = r.coeff(1) - &two * p2.coeff(2) + &two * &k.beta;
    let q10 = r.coeff(0) - p2.coeff(1) + &two * &k.gamma;
    let s = UniPoly::linear(&q11 - &k.beta, &q10 - &k.gamma);
    let q2 = p2.scale(&(op.kappa() + &k.beta - &q11)) + &k.x_part() * &s;
    let sys = QuadraticSystem::new(p2.clone(), UniPoly::linear(q11, q10), q2)?;

    let nmax = crate::operators::matching_degrees(op, crate::operators::MAX_KERNEL_DEGREE)
        .last()
        .copied()
        .unwrap_or(0);
    for sol in polynomial_kernel(op, nmax)? {
        let curve = build_invariant_curve(&sol.poly, &sys, k)?;
        let cert = crate::darboux::verify_invariance(&sys.field(), &curve.g, Some(&k.poly()))?;
        if !cert.passed() {
            return Err(Error::Domain(format!(
                "derived system fails invariance for the degree {} solution: residual {}",
                sol.degree, cert.residual
            )));
        }
    }
    Ok(sys)
}

/// `g = a0 y + p2 a0' + ((q11 - beta) x + (q10 - gamma)) a0`
pub fn build_invariant_curve(a0: &UniPoly, sys: &QuadraticSystem, k: &CofactorLine) -> Result<CurveBundle> {
    let n = a0
        .degree()
        .ok_or_else(|| Error::Parameter("a0 must be nonzero".into()))? as u32;
    let a1 = &sys.p2 * &a0.derivative() + &shift_term(sys, k) * a0;
    let g = BiPoly::from_x_poly_times_y(a0, 1) + BiPoly::from_x_poly(&a1);
    Ok(CurveBundle {
        a0: a0.clone(),
        g,
        n,
        system: sys.clone(),
        cofactor: k.clone(),
    })
}

/// Literal `Rf2` coefficients, kept for comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuchsCertificate {
    pub t1_literal: UniPoly,
    pub m_literal: UniPoly,
    pub t1_agrees: bool,
    pub m_agrees: bool,
    /// `Some(kappa)` when `M = kappa p2` for a constant `kappa`.
    pub implied_kappa: Option<Rational>,
}

/// `p2^2 w'' + p2 T1 w' + M w = 0`, the equation `a0` must satisfy for
/// `a0 y + a1` to be invariant with cofactor `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuchsReduction {
    pub t1: UniPoly,
    pub m: UniPoly,
    pub certificate: FuchsCertificate,
}

impl FuchsReduction {
    /// True when the equation is `p2` times the operator.
    pub fn matches_operator(&self, op: &SturmOperator) -> bool {
        self.t1 == *op.r() && self.m == op.p2().scale(op.kappa())
    }

    /// `p2^2 w'' + p2 T1 w' + M w`
    pub fn apply(&self, p2: &UniPoly, w: &UniPoly) -> UniPoly {
        let d1 = w.derivative();
        let d2 = d1.derivative();
        &(&(p2 * p2) * &d2 + &(p2 * &self.t1) * &d1) + &(&self.m * w)
    }
}

pub fn fuchs_reduction(sys: &QuadraticSystem, k: &CofactorLine) -> Result<FuchsReduction> {
    if sys.p2.is_zero() {
        return Err(Error::Parameter("p2 must be nonzero".into()));
    }
    let s = shift_term(sys, k);
    let lin = k.x_part();
    let q11 = sys.q1.coeff(1);
    let q10 = sys.q1.coeff(0);
    let t1 = sys.p2.derivative() + &s - &lin;
    let m = sys.p2.scale(&(&q11 - &k.beta)) + &sys.q2 - &(&lin * &s);

    // As printed: w' numerator ((2p22 + q11 - 2beta) x + 2p21 + q10 - 2gamma),
    // w coefficient -(q11 - beta)/p2 - [(beta^2 + q22 - beta q11) x^2
    // + (q21 + 2 gamma beta - q10 beta - gamma q11) x + gamma^2 - gamma q10 + q20]/p2^2.
    let two = Rational::from_integer(2.into());
    let (b, g) = (&k.beta, &k.gamma);
    let t1_literal = UniPoly::linear(
        &two * sys.p2.coeff(2) + &q11 - &two * b,
        &two * sys.p2.coeff(1) + &q10 - &two * g,
    );
    let bracket = UniPoly::quadratic(
        b * b + sys.q2.coeff(2) - b * &q11,
        sys.q2.coeff(1) + &two * g * b - &q10 * b - g * &q11,
        g * g - g * &q10 + sys.q2.coeff(0),
    );
    let m_literal = -(sys.p2.scale(&(&q11 - b)) + bracket);
    let implied_kappa = implied_kappa(&m, &sys.p2);
    Ok(FuchsReduction {
        certificate: FuchsCertificate {
            t1_agrees: t1_literal == t1,
            m_agrees: m_literal == m,
            t1_literal,
            m_literal,
            implied_kappa,
        },
        t1,
        m,
    })
}

fn implied_kappa(m: &UniPoly, p2: &UniPoly) -> Option<Rational> {
    if m.is_zero() {
        return Some(Rational::zero());
    }
    m.ratio_to(p2)
}

/// The hypergeometric-family system at `beta = a + b - ab/c - 1`,
/// `gamma = 1 - c`.
pub fn cll_special_system(a: &Rational, b: &Rational, c: &Rational) -> Result<QuadraticSystem> {
    let k = cll_cofactor(a, b, c)?;
    let op = SturmOperator::hypergeometric(a, b, c)?;
    derive_system(&op, &k)
}

pub fn cll_cofactor(a: &Rational, b: &Rational, c: &Rational) -> Result<CofactorLine> {
    if c.is_zero() {
        return Err(Error::Parameter("c must be nonzero".into()));
    }
    let one = Rational::one();
    Ok(CofactorLine::new(a + b - a * b / c - &one, &one - c))
}
