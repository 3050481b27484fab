//! Solute geometry: van der Waals balls, point charges, PQR input and the
//! per-node exposure cache.

mod exposure;
mod pqr;

pub use exposure::{build_exposure, ExposureCache, NeighborEntry, INTERIOR_TOLERANCE};
pub use pqr::{parse_pqr, parse_pqr_str, read_pqr_file};

use crate::error::{Error, Result};
use crate::geometry::Vec3;

/// One atom: a ball with the partial charge carried by its center.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ball {
    pub center: Vec3,
    pub radius: f64,
    pub charge: f64,
}

impl Ball {
    pub const fn new(center: Vec3, radius: f64, charge: f64) -> Self {
        Self { center, radius, charge }
    }
}

/// A point source of the solute charge density, in units of `e`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointCharge {
    pub position: Vec3,
    pub charge: f64,
}

impl PointCharge {
    pub const fn new(position: Vec3, charge: f64) -> Self {
        Self { position, charge }
    }
}

/// The solute cavity as a union of balls.
///
/// Stored radii already include `radius_scale`.
#[derive(Debug, Clone, PartialEq)]
pub struct Cavity {
    balls: Vec<Ball>,
    radius_scale: f64,
}

impl Cavity {
    pub fn new(balls: Vec<Ball>) -> Result<Self> {
        Self::with_radius_scale(balls, 1.0)
    }

    /// Builds a cavity whose radii are the given ones multiplied by `scale`.
    pub fn with_radius_scale(mut balls: Vec<Ball>, scale: f64) -> Result<Self> {
        if !(scale > 0.0 && scale.is_finite()) {
            return Err(Error::InvalidConfig(format!("radius scale must be positive, got {scale}")));
        }
        if balls.is_empty() {
            return Err(Error::EmptyStructure);
        }
        for (k, b) in balls.iter_mut().enumerate() {
            if !(b.radius > 0.0 && b.radius.is_finite()) || !b.center.is_finite() || !b.charge.is_finite() {
                return Err(Error::InvalidConfig(format!("ball {k} has a non-finite value or non-positive radius")));
            }
            b.radius *= scale;
        }
        Ok(Self { balls, radius_scale: scale })
    }

    /// Same structure with radii rescaled to `scale` times the unscaled ones.
    pub fn rescaled(&self, scale: f64) -> Result<Self> {
        let base = self
            .balls
            .iter()
            .map(|b| Ball { radius: b.radius / self.radius_scale, ..*b })
            .collect();
        Self::with_radius_scale(base, scale)
    }

    pub fn balls(&self) -> &[Ball] {
        &self.balls
    }

    pub fn len(&self) -> usize {
        self.balls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.balls.is_empty()
    }

    pub fn radius_scale(&self) -> f64 {
        self.radius_scale
    }

    /// One point charge per ball, at its center.
    pub fn center_charges(&self) -> Vec<PointCharge> {
        self.balls.iter().map(|b| PointCharge::new(b.center, b.charge)).collect()
    }

    /// Applies `x ↦ f(x)` to every center.
    pub fn map_centers(&self, f: impl Fn(Vec3) -> Vec3) -> Self {
        let balls = self.balls.iter().map(|b| Ball { center: f(b.center), ..*b }).collect();
        Self { balls, radius_scale: self.radius_scale }
    }
}
