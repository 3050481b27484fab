//! Discrete operator layer: the vacuum potential of the solute charges, the
//! sparse interior coupling operators `A` and `B`, the dense single-layer
//! coupling operators `C1` and `C2`, and the right-hand sides `G0` and `F0`.
//!
//! Unknowns are stored ball by ball as packed harmonic blocks of length
//! `(ℓmax+1)²`.

mod coeffs;
mod dense;
mod discrete;
mod potential;

pub use coeffs::{CoeffRole, HarmonicCoeffs};
pub use dense::{DenseOperators, DEFAULT_DENSE_CAP};
pub use discrete::{DiscreteOperatorSet, OperatorOptions};
pub use potential::{dpsi0_dn_at, psi0_at, psi0_at_point, SINGULAR_DISTANCE};

use crate::error::{Error, Result};
use crate::radial::RadialKernel;

/// Dielectric constants of solute (`eps1`) and solvent (`eps2`) and the
/// Debye–Hückel screening constant `kappa` in Å⁻¹.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolventParams {
    pub eps1: f64,
    pub eps2: f64,
    pub kappa: f64,
}

impl SolventParams {
    pub fn new(eps1: f64, eps2: f64, kappa: f64) -> Result<Self> {
        if !(eps1 > 0.0 && eps1.is_finite()) {
            return Err(Error::InvalidConfig(format!("eps1 must be positive, got {eps1}")));
        }
        if !(eps2 > 0.0 && eps2.is_finite()) {
            return Err(Error::InvalidConfig(format!("eps2 must be positive, got {eps2}")));
        }
        if !(kappa >= 0.0 && kappa.is_finite()) {
            return Err(Error::NonPositiveKappa(kappa));
        }
        Ok(Self { eps1, eps2, kappa })
    }

    /// Kernel of the extended potential; Laplace when `kappa == 0`.
    pub fn kernel(&self) -> RadialKernel {
        RadialKernel::for_kappa(self.kappa)
    }
}

impl Default for SolventParams {
    /// Vacuum solute in water at 0.1 M ionic strength.
    fn default() -> Self {
        Self { eps1: 1.0, eps2: 78.54, kappa: 0.104 }
    }
}
