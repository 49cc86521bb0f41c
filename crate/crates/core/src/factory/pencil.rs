use serde::{Deserialize, Serialize};

use crate::algebra::{BiPoly, Var};
use crate::error::{Error, Result};

/// Data of the field `P = -nu g_y + lambda1 g`, `Q = nu g_x + lambda2 g`,
/// which leaves `g = 0` invariant for any `nu`, `lambda1`, `lambda2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilSpec {
    pub g: BiPoly,
    pub nu: BiPoly,
    pub lambda1: BiPoly,
    pub lambda2: BiPoly,
}

impl PencilSpec {
    pub fn new(g: BiPoly, nu: BiPoly, lambda1: BiPoly, lambda2: BiPoly) -> Result<Self> {
        if g.is_constant() {
            return Err(Error::Parameter("pencil curve g must be nonconstant".into()));
        }
        Ok(PencilSpec { g, nu, lambda1, lambda2 })
    }

    /// The cofactor the construction guarantees, `lambda1 g_x + lambda2 g_y`.
    pub fn expected_cofactor(&self) -> BiPoly {
        &self.lambda1 * &self.g.derivative(Var::X) + &self.lambda2 * &self.g.derivative(Var::Y)
    }
}

pub fn pencil_system(spec: &PencilSpec) -> (BiPoly, BiPoly) {
    let gx = spec.g.derivative(Var::X);
    let gy = spec.g.derivative(Var::Y);
    let p = -(&spec.nu * &gy) + &spec.lambda1 * &spec.g;
    let q = &spec.nu * &gx + &spec.lambda2 * &spec.g;
    (p, q)
}
