use std::io::Write;

use crate::error::{Error, Result};
use crate::numeric::{LevelSample, Trajectory};

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

fn cell(v: Option<f64>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

/// `t,x,y`, or `t,x,y,F` when values are given (empty where undefined).
pub fn write_trajectory_csv<W: Write>(out: W, traj: &Trajectory, values: Option<&[Option<f64>]>) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if values.is_some() {
        w.write_record(["t", "x", "y", "F"]).map_err(csv_err)?;
    } else {
        w.write_record(["t", "x", "y"]).map_err(csv_err)?;
    }
    for (i, [t, x, y]) in traj.samples.iter().enumerate() {
        let mut row = vec![t.to_string(), x.to_string(), y.to_string()];
        if let Some(vals) = values {
            row.push(cell(vals.get(i).copied().flatten()));
        }
        w.write_record(&row).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

/// `x,y,f` with empty cells where `f` is undefined.
pub fn write_levels_csv<W: Write>(out: W, samples: &[LevelSample]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["x", "y", "f"]).map_err(csv_err)?;
    for s in samples {
        w.write_record([s.x.to_string(), s.y.to_string(), cell(s.value)])
            .map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}
