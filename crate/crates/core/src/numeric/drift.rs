use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::integrate::{integrate_trajectory, IntegratorConfig, Termination, Trajectory};
use crate::algebra::rational::to_f64;
use crate::algebra::Rational;
use crate::darboux::{CurveFactor, DarbouxMode, DarbouxSystemSet, Status};
use crate::error::{Error, Result};
use crate::factory::VectorField;

/// Tolerance used when summing hypergeometric factors along a trajectory.
pub const SERIES_TOL: f64 = 1e-16;
/// Default bound on `|y|` for samples that enter the drift measurement.
pub const DEFAULT_DRIFT_WINDOW: f64 = 100.0;

/// A candidate first integral `prod f_i^lambda_i`.
///
/// Integer exponents keep the sign of the factor; other exponents use `|f|`.
#[derive(Clone, Debug, PartialEq)]
pub struct FirstIntegralSpec {
    pub label: String,
    pub factors: Vec<(String, CurveFactor, Rational)>,
}

impl FirstIntegralSpec {
    /// `F = 1`.
    pub fn constant() -> Self {
        FirstIntegralSpec {
            label: "constant".into(),
            factors: Vec::new(),
        }
    }

    /// Product of the curves of a first-integral Darboux set; zero exponents are dropped.
    pub fn from_darboux(label: &str, set: &DarbouxSystemSet) -> Result<Self> {
        if set.mode != DarbouxMode::FirstIntegral {
            return Err(Error::Mode("exponents describe an integrating factor".into()));
        }
        let factors = set
            .labels
            .iter()
            .zip(&set.curves)
            .zip(&set.exponents)
            .filter(|(_, e)| !num_traits::Zero::is_zero(*e))
            .map(|((l, c), e)| (l.clone(), c.clone(), e.clone()))
            .collect();
        Ok(FirstIntegralSpec {
            label: label.into(),
            factors,
        })
    }

    /// Values of the individual factors.
    pub fn factor_values(&self, x: f64, y: f64) -> Result<Vec<f64>> {
        self.factors
            .iter()
            .map(|(_, curve, _)| match curve {
                CurveFactor::Polynomial(g) => Ok(g.eval_f64(x, y)),
                CurveFactor::Special(s) => s.eval_f64(x, y, SERIES_TOL),
            })
            .collect()
    }

    fn combine(&self, values: &[f64]) -> f64 {
        self.factors.iter().zip(values).fold(1.0, |acc, ((_, _, e), v)| {
            let term = match e.is_integer().then(|| e.to_integer().to_i32()).flatten() {
                Some(k) => v.powi(k),
                None => v.abs().powf(to_f64(e)),
            };
            acc * term
        })
    }

    pub fn eval(&self, x: f64, y: f64) -> Result<f64> {
        Ok(self.combine(&self.factor_values(x, y)?))
    }
}

/// `x0 in {0.2, 0.5, 0.8}` times `y0 in {-1, 0, 1, 2}`.
pub fn standard_seeds() -> Vec<(f64, f64)> {
    let mut seeds = Vec::with_capacity(12);
    for x0 in [0.2, 0.5, 0.8] {
        for y0 in [-1.0, 0.0, 1.0, 2.0] {
            seeds.push((x0, y0));
        }
    }
    seeds
}

#[derive(Clone, Debug, PartialEq)]
pub struct DriftConfig {
    pub h: f64,
    pub horizon: f64,
    pub tol: f64,
    /// Only samples with `|y|` at most this enter the drift; `None` uses the whole run.
    pub window: Option<f64>,
    /// Stop trajectories that leave `0 < x < 1`.
    pub unit_strip: bool,
}

impl Default for DriftConfig {
    fn default() -> Self {
        DriftConfig {
            h: 1e-3,
            horizon: 2.0,
            tol: 1e-6,
            window: Some(DEFAULT_DRIFT_WINDOW),
            unit_strip: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeedDrift {
    pub x0: f64,
    pub y0: f64,
    /// `max |F(t) - F(0)| / |F(0)|` over the measured samples.
    pub drift: Option<f64>,
    pub samples_used: usize,
    /// Time of the last measured sample.
    pub t_measured: f64,
    pub termination: Termination,
    pub skipped: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DriftReport {
    pub label: String,
    pub h: f64,
    pub horizon: f64,
    pub window: Option<f64>,
    pub tolerance: f64,
    pub seeds: Vec<SeedDrift>,
    pub evaluated: usize,
    pub verdict: Status,
}

impl DriftReport {
    pub fn max_drift(&self) -> Option<f64> {
        self.seeds.iter().filter_map(|s| s.drift).reduce(f64::max)
    }
}

/// `F` along a trajectory; `None` where it cannot be evaluated.
pub fn evaluate_along(spec: &FirstIntegralSpec, traj: &Trajectory) -> Vec<Option<f64>> {
    traj.samples
        .iter()
        .map(|&[_, x, y]| spec.eval(x, y).ok().filter(|v| v.is_finite()))
        .collect()
}

fn measure(spec: &FirstIntegralSpec, traj: &Trajectory, window: Option<f64>) -> std::result::Result<(f64, usize, f64), String> {
    let [_, x0, y0] = traj.samples[0];
    let start = spec.factor_values(x0, y0).map_err(|e| format!("F(0) not evaluable: {e}"))?;
    if let Some(i) = start.iter().position(|v| *v == 0.0 || !v.is_finite()) {
        return Err(format!("factor {} vanishes at the seed", spec.factors[i].0));
    }
    let f0 = spec.combine(&start);
    if f0 == 0.0 || !f0.is_finite() {
        return Err("F(0) is zero or nonfinite".into());
    }
    let mut drift = 0.0_f64;
    let mut used = 0;
    let mut t_last = 0.0;
    for &[t, x, y] in &traj.samples {
        if window.is_some_and(|w| y.abs() > w) {
            break;
        }
        let values = spec.factor_values(x, y).map_err(|e| format!("F not evaluable at t = {t}: {e}"))?;
        for (i, (v, s)) in values.iter().zip(&start).enumerate() {
            if v.signum() != s.signum() || *v == 0.0 {
                return Err(format!("factor {} crossed zero at t = {t}", spec.factors[i].0));
            }
        }
        let f = spec.combine(&values);
        if !f.is_finite() {
            return Err(format!("F nonfinite at t = {t}"));
        }
        drift = drift.max((f - f0).abs() / f0.abs());
        used += 1;
        t_last = t;
    }
    Ok((drift, used, t_last))
}

/// Integrates every seed and records the maximum relative change of `F`.
///
/// Seeds run in parallel; the report keeps the input order. The verdict
/// passes when at least one seed was measured and every measured drift is
/// within `config.tol`.
pub fn drift_report(
    field: &VectorField,
    spec: &FirstIntegralSpec,
    seeds: &[(f64, f64)],
    config: &DriftConfig,
) -> Result<DriftReport> {
    let mut icfg = IntegratorConfig::new(config.h, config.horizon);
    if config.unit_strip {
        icfg = icfg.unit_strip();
    }
    let rows: Vec<SeedDrift> = seeds
        .par_iter()
        .map(|&(x0, y0)| -> Result<SeedDrift> {
            let traj = integrate_trajectory(field, x0, y0, &icfg)?;
            let row = match measure(spec, &traj, config.window) {
                Ok((drift, used, t)) => SeedDrift {
                    x0,
                    y0,
                    drift: Some(drift),
                    samples_used: used,
                    t_measured: t,
                    termination: traj.termination,
                    skipped: None,
                },
                Err(reason) => SeedDrift {
                    x0,
                    y0,
                    drift: None,
                    samples_used: 0,
                    t_measured: 0.0,
                    termination: traj.termination,
                    skipped: Some(reason),
                },
            };
            Ok(row)
        })
        .collect::<Result<_>>()?;
    let evaluated = rows.iter().filter(|r| r.drift.is_some()).count();
    let ok = evaluated > 0 && rows.iter().filter_map(|r| r.drift).all(|d| d <= config.tol);
    Ok(DriftReport {
        label: spec.label.clone(),
        h: config.h,
        horizon: config.horizon,
        window: config.window,
        tolerance: config.tol,
        seeds: rows,
        evaluated,
        verdict: Status::from_bool(ok),
    })
}
