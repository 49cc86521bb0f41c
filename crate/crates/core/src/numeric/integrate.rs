use serde::{Deserialize, Serialize};

use crate::algebra::FloatBiPoly;
use crate::error::{Error, Result};
use crate::factory::VectorField;

/// Integration stops once `|y|` exceeds this.
pub const BLOWUP_THRESHOLD: f64 = 1e6;
/// Margin kept from the edges of `0 < x < 1` when a domain is enforced.
pub const DOMAIN_MARGIN: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Termination {
    Completed,
    Blowup,
    LeftDomain,
}

/// Samples `(t, x, y)` with strictly increasing `t`, starting at `t = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Trajectory {
    pub samples: Vec<[f64; 3]>,
    pub termination: Termination,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IntegratorConfig {
    pub h: f64,
    pub horizon: f64,
    pub blowup: f64,
    /// Open interval `x` must stay in, if any.
    pub x_domain: Option<(f64, f64)>,
}

impl IntegratorConfig {
    pub fn new(h: f64, horizon: f64) -> Self {
        IntegratorConfig {
            h,
            horizon,
            blowup: BLOWUP_THRESHOLD,
            x_domain: None,
        }
    }

    /// Restricts `x` to `(DOMAIN_MARGIN, 1 - DOMAIN_MARGIN)`.
    pub fn unit_strip(mut self) -> Self {
        self.x_domain = Some((DOMAIN_MARGIN, 1.0 - DOMAIN_MARGIN));
        self
    }
}

/// `f64` image of a vector field.
#[derive(Clone, Debug)]
pub struct FloatField {
    p: FloatBiPoly,
    q: FloatBiPoly,
}

impl FloatField {
    pub fn new(field: &VectorField) -> Self {
        FloatField {
            p: FloatBiPoly::new(&field.p),
            q: FloatBiPoly::new(&field.q),
        }
    }

    #[inline]
    pub fn eval(&self, x: f64, y: f64) -> (f64, f64) {
        (self.p.eval(x, y), self.q.eval(x, y))
    }

    fn rk4_step(&self, x: f64, y: f64, h: f64) -> (f64, f64) {
        let (k1x, k1y) = self.eval(x, y);
        let (k2x, k2y) = self.eval(x + 0.5 * h * k1x, y + 0.5 * h * k1y);
        let (k3x, k3y) = self.eval(x + 0.5 * h * k2x, y + 0.5 * h * k2y);
        let (k4x, k4y) = self.eval(x + h * k3x, y + h * k3y);
        (
            x + h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x),
            y + h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y),
        )
    }
}

/// Classical fixed-step RK4 from `(x0, y0)` over `[0, horizon]`.
///
/// A state that is nonfinite or has `|y| > blowup` ends the run as
/// `Blowup`; leaving the `x` domain ends it as `LeftDomain`. The offending
/// state is not kept.
pub fn integrate_trajectory(field: &VectorField, x0: f64, y0: f64, config: &IntegratorConfig) -> Result<Trajectory> {
    if !(config.h > 0.0) || !(config.horizon > 0.0) {
        return Err(Error::Domain(format!(
            "step {} and horizon {} must be positive",
            config.h, config.horizon
        )));
    }
    let ff = FloatField::new(field);
    let steps = (config.horizon / config.h).round() as usize;
    let mut samples = Vec::with_capacity(steps + 1);
    samples.push([0.0, x0, y0]);
    let (mut x, mut y) = (x0, y0);
    for k in 1..=steps {
        (x, y) = ff.rk4_step(x, y, config.h);
        if !x.is_finite() || !y.is_finite() || y.abs() > config.blowup {
            return Ok(Trajectory {
                samples,
                termination: Termination::Blowup,
            });
        }
        if let Some((lo, hi)) = config.x_domain {
            if !(x > lo && x < hi) {
                return Ok(Trajectory {
                    samples,
                    termination: Termination::LeftDomain,
                });
            }
        }
        samples.push([k as f64 * config.h, x, y]);
    }
    Ok(Trajectory {
        samples,
        termination: Termination::Completed,
    })
}
