//! Numerical tolerances shared by the pipeline; each can be overridden from the CLI.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Absolute target for adaptive quadrature.
    pub quad: f64,
    /// Local error target for the Jost ODE integrator.
    pub ode: f64,
    /// Gate on the residue conditions of the soliton solve.
    pub residue: f64,
    /// Λ threshold factor: ε₀ = eps0_factor · min |Im θ(η_n)|, floored at `eps0_floor`.
    pub eps0_factor: f64,
    pub eps0_floor: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { quad: 1e-10, ode: 1e-10, residue: 1e-10, eps0_factor: 0.1, eps0_floor: 1e-3 }
    }
}

impl Tolerances {
    pub fn validate(&self) -> Result<()> {
        let floor = 100.0 * f64::EPSILON;
        for (name, v) in [("quad", self.quad), ("ode", self.ode), ("residue", self.residue)] {
            if !(v >= floor) || !v.is_finite() {
                return Err(Error::Config(format!("tolerance {name} = {v} must be at least {floor:e}")));
            }
        }
        if !(self.eps0_factor > 0.0 && self.eps0_floor > 0.0) {
            return Err(Error::Config("eps0 rule parameters must be positive".into()));
        }
        Ok(())
    }
}
