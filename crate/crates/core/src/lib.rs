//! Exact construction and verification of quadratic planar systems
//! `x' = p2(x)`, `y' = y^2 + q1(x) y + q2(x)` carrying invariant curves
//! `a0(x) y + a1(x)` of arbitrary degree, built from polynomial solutions of
//! second-order operators `p2 w'' + r w' + kappa w = 0`.
//!
//! - [`algebra`]: rationals, dense univariate and sparse bivariate polynomials, exact linear algebra.
//! - [`operators`]: classical operators, their polynomial kernels, and `2F1` evaluation.
//! - [`factory`]: systems derived from an operator and a cofactor line, plus the displayed variants.
//! - [`darboux`]: invariance certificates, Darboux exponent relations, literal-formula audits.
//! - [`numeric`]: RK4 trajectories, first-integral drift, sampled tables.
//! - [`formats`]: JSON documents and CSV export.

pub mod algebra;
pub mod darboux;
pub mod error;
pub mod factory;
pub mod formats;
pub mod numeric;
pub mod operators;

pub use error::{Error, Result};
