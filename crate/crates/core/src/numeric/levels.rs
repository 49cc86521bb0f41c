use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Region {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LevelSample {
    pub x: f64,
    pub y: f64,
    /// `None` where `f` is undefined or nonfinite.
    pub value: Option<f64>,
}

fn grid_point(lo: f64, hi: f64, i: usize, n: usize) -> f64 {
    let t = i as f64 / (n - 1) as f64;
    lo * (1.0 - t) + hi * t
}

/// Samples `f` on an `nx` by `ny` grid, row-major with `x` varying fastest.
pub fn level_samples<F>(f: F, region: &Region, nx: usize, ny: usize) -> Result<Vec<LevelSample>>
where
    F: Fn(f64, f64) -> Option<f64>,
{
    if nx < 2 || ny < 2 {
        return Err(Error::Parameter(format!("grid {nx}x{ny} is smaller than 2x2")));
    }
    let mut out = Vec::with_capacity(nx * ny);
    for j in 0..ny {
        let y = grid_point(region.y_min, region.y_max, j, ny);
        for i in 0..nx {
            let x = grid_point(region.x_min, region.x_max, i, nx);
            out.push(LevelSample {
                x,
                y,
                value: f(x, y).filter(|v| v.is_finite()),
            });
        }
    }
    Ok(out)
}
