use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{verify_invariance, Status};
use crate::algebra::rational::{int, rat};
use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::factory::{build_invariant_curve, derive_system, CofactorLine};
use crate::operators::{classical_generator, polynomial_kernel, Family, FamilySpec};

/// Outcome of certifying the canonical curve of one family member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepCell {
    pub family: FamilySpec,
    pub degree: u32,
    pub curve_degree: Option<u32>,
    pub invariance: Status,
    /// The certified cofactor is exactly `y + beta x + gamma`.
    pub cofactor_matches: bool,
    /// The kernel element is annihilated by the operator.
    pub kernel_solves: bool,
    /// The kernel element is a scalar multiple of the closed-form polynomial.
    pub matches_generator: bool,
}

impl SweepCell {
    pub fn passed(&self) -> bool {
        self.invariance == Status::Pass
            && self.cofactor_matches
            && self.kernel_solves
            && self.matches_generator
            && self.curve_degree == Some(self.degree + 1)
    }
}

pub fn certify_member(spec: &FamilySpec) -> Result<SweepCell> {
    let op = spec.family.operator()?;
    let n = spec
        .family
        .degree()
        .ok_or_else(|| Error::Parameter("family has no polynomial solution".into()))?;
    let k = CofactorLine::new(spec.beta.clone(), spec.gamma.clone());
    let sys = derive_system(&op, &k)?;
    let a0 = polynomial_kernel(&op, n)?
        .into_iter()
        .find(|s| s.degree == n)
        .ok_or_else(|| Error::Domain(format!("no degree {n} solution")))?
        .poly;
    let generator = classical_generator(spec)?;
    let g = build_invariant_curve(&a0, &sys, &k)?.g;
    let cert = verify_invariance(&sys.field(), &g, None)?;
    Ok(SweepCell {
        family: spec.clone(),
        degree: n,
        curve_degree: g.total_degree(),
        invariance: cert.status,
        cofactor_matches: cert.cofactor == Some(k.poly()),
        kernel_solves: op.apply(&a0).is_zero(),
        matches_generator: a0.ratio_to(&generator).is_some(),
    })
}

/// Families `hypergeometric(a = -n, 5/2, 1/3)`, `jacobi(1/2, 0)`,
/// `laguerre(2)`, `hermite-like`, for `n = 1..=n_max` and
/// `(beta, gamma)` in `(0, 0), (1, 0), (-1/2, 1/3)`.
pub fn standard_sweep(n_max: u32) -> Vec<FamilySpec> {
    let lines: [(Rational, Rational); 3] = [(int(0), int(0)), (int(1), int(0)), (rat(-1, 2), rat(1, 3))];
    let mut specs = Vec::new();
    for base in [
        Family::Hypergeometric {
            a: int(-1),
            b: rat(5, 2),
            c: rat(1, 3),
        },
        Family::Jacobi {
            a: rat(1, 2),
            b: int(0),
            n: 1,
        },
        Family::Laguerre { a: int(2), n: 1 },
        Family::HermiteLike { n: 1 },
    ] {
        for n in 1..=n_max {
            for (beta, gamma) in &lines {
                specs.push(FamilySpec::new(base.with_degree(n), beta.clone(), gamma.clone()));
            }
        }
    }
    specs
}

/// Certifies every member in parallel; results keep the input order.
pub fn sweep(specs: &[FamilySpec]) -> Result<Vec<SweepCell>> {
    specs.par_iter().map(certify_member).collect()
}
