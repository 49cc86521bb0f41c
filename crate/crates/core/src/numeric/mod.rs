//! Floating-point side: fixed-step RK4 trajectories, first-integral drift,
//! and sampled tables for export.

mod drift;
mod integrate;
mod levels;
mod variants;

pub use drift::{
    drift_report, evaluate_along, standard_seeds, DriftConfig, DriftReport, FirstIntegralSpec, SeedDrift,
    DEFAULT_DRIFT_WINDOW, SERIES_TOL,
};
pub use integrate::{integrate_trajectory, FloatField, IntegratorConfig, Termination, Trajectory, BLOWUP_THRESHOLD, DOMAIN_MARGIN};
pub use levels::{level_samples, LevelSample, Region};
pub use variants::{ambiguity_report, general_integral_spec, AmbiguityReport, IntegralReading, ReadingOutcome};
