//! The general first integral `x^(1-c) g1 / g2` for the hypergeometric
//! family, with
//!
//! `g1 = L F(p1, 1+b-c; 2-c) + (1+a-c)(1-x) F(1+a, b; c) + (1+a-c)`,
//! `g2 = L F(a, b; c) + a(1-x) F(p2, 1+b-c; 2-c) + (1+a-c)`,
//! `L = y + (1-b+beta) x + gamma + c - 1 - a`.
//!
//! The first parameters `p1, p2` have two readings: `1+a+c, 2+a+c` as
//! printed (`v1`) and `1+a-c, 2+a-c` (`v2`).

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::drift::{drift_report, standard_seeds, DriftConfig, DriftReport, FirstIntegralSpec};
use crate::algebra::{BiPoly, Rational, UniPoly};
use crate::darboux::{cll_curve_set, CurveFactor, CurveMode, HypFactor, SpecialCurve, SpecialTerm, Status};
use crate::error::{Error, Result};
use crate::factory::cll_cofactor;
use crate::operators::Hyp2F1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IntegralReading {
    /// `1+a+c`, `2+a+c`
    V1,
    /// `1+a-c`, `2+a-c`
    V2,
}

impl IntegralReading {
    pub const ALL: [IntegralReading; 2] = [IntegralReading::V1, IntegralReading::V2];

    pub fn name(self) -> &'static str {
        match self {
            IntegralReading::V1 => "v1",
            IntegralReading::V2 => "v2",
        }
    }

    fn first_parameters(self, a: &Rational, c: &Rational) -> (Rational, Rational) {
        let one = Rational::one();
        let two = &one + &one;
        match self {
            IntegralReading::V1 => (&one + a + c, &two + a + c),
            IntegralReading::V2 => (&one + a - c, &two + a - c),
        }
    }
}

impl std::str::FromStr for IntegralReading {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "v1" => Ok(IntegralReading::V1),
            "v2" => Ok(IntegralReading::V2),
            _ => Err(Error::Parameter(format!("unknown reading {s:?}, expected v1 or v2"))),
        }
    }
}

fn value(coeff: BiPoly, h: Hyp2F1) -> SpecialTerm {
    SpecialTerm {
        coeff,
        factor: HypFactor::Value(h),
    }
}

/// `x^(1-c) g1 / g2` under the given reading.
pub fn general_integral_spec(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    beta: &Rational,
    gamma: &Rational,
    reading: IntegralReading,
) -> Result<FirstIntegralSpec> {
    let one = Rational::one();
    let two = &one + &one;
    let (p1, p2) = reading.first_parameters(a, c);
    let l = BiPoly::y()
        + BiPoly::from_x_poly(&UniPoly::linear(&one - b + beta, gamma + c - &one - a));
    let one_minus_x = BiPoly::from_x_poly(&UniPoly::linear(-one.clone(), one.clone()));
    let k = &one + a - c;
    let constant = SpecialTerm {
        coeff: BiPoly::constant(k.clone()),
        factor: HypFactor::One,
    };
    let second = |p: Rational| Hyp2F1::new(p, &one + b - c, &two - c);
    let g1 = SpecialCurve {
        terms: vec![
            value(l.clone(), second(p1)?),
            value(one_minus_x.scale(&k), Hyp2F1::new(&one + a, b.clone(), c.clone())?),
            constant.clone(),
        ],
    };
    let g2 = SpecialCurve {
        terms: vec![
            value(l, Hyp2F1::new(a.clone(), b.clone(), c.clone())?),
            value(one_minus_x.scale(a), second(p2)?),
            constant,
        ],
    };
    Ok(FirstIntegralSpec {
        label: reading.name().into(),
        factors: vec![
            ("x".into(), CurveFactor::Polynomial(BiPoly::x()), &one - c),
            ("g1".into(), CurveFactor::Special(g1), one.clone()),
            ("g2".into(), CurveFactor::Special(g2), -one),
        ],
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReadingOutcome {
    pub reading: IntegralReading,
    pub report: DriftReport,
}

/// Drift of both readings next to the exact Darboux integral of the same system.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AmbiguityReport {
    #[serde(with = "crate::formats::rational_str")]
    pub a: Rational,
    #[serde(with = "crate::formats::rational_str")]
    pub b: Rational,
    #[serde(with = "crate::formats::rational_str")]
    pub c: Rational,
    #[serde(with = "crate::formats::rational_str")]
    pub beta: Rational,
    #[serde(with = "crate::formats::rational_str")]
    pub gamma: Rational,
    pub readings: Vec<ReadingOutcome>,
    pub control: DriftReport,
    pub passing: Vec<IntegralReading>,
}

impl AmbiguityReport {
    pub fn summary(&self) -> String {
        match self.passing.as_slice() {
            [] => "neither reading passes".into(),
            [r] => format!("{} passes", r.name()),
            _ => "both readings pass".into(),
        }
    }
}

/// Runs both readings on the hypergeometric system with `beta, gamma` set
/// to the special values, where the Darboux integral built from the
/// four invariant curves serves as the control.
pub fn ambiguity_report(a: &Rational, b: &Rational, c: &Rational, config: &DriftConfig) -> Result<AmbiguityReport> {
    let set = cll_curve_set(a, b, c, CurveMode::Holonomic)?;
    let line = cll_cofactor(a, b, c)?;
    let field = set.field.clone();
    let seeds = standard_seeds();
    let control = drift_report(&field, &FirstIntegralSpec::from_darboux("darboux", &set)?, &seeds, config)?;
    let mut readings = Vec::new();
    for reading in IntegralReading::ALL {
        let spec = general_integral_spec(a, b, c, &line.beta, &line.gamma, reading)?;
        readings.push(ReadingOutcome {
            reading,
            report: drift_report(&field, &spec, &seeds, config)?,
        });
    }
    let passing = readings
        .iter()
        .filter(|r| r.report.verdict == Status::Pass)
        .map(|r| r.reading)
        .collect();
    Ok(AmbiguityReport {
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
        beta: line.beta,
        gamma: line.gamma,
        readings,
        control,
        passing,
    })
}
