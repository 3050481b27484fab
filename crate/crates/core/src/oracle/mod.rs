//! Closed-form reference energies: the Kirkwood multipole series for point
//! charges inside one dielectric sphere, and the Born ion with screening.

use crate::cavity::PointCharge;
use crate::error::{Error, Result};
use crate::units::COULOMB_KCAL_MOL;

/// Point charges inside a sphere of radius `radius` centered at the origin.
#[derive(Debug, Clone, PartialEq)]
pub struct KirkwoodProblem {
    pub radius: f64,
    pub charges: Vec<PointCharge>,
    pub eps1: f64,
    pub eps2: f64,
    /// Highest multipole degree kept.
    pub series_terms: usize,
}

impl KirkwoodProblem {
    pub fn new(radius: f64, charges: Vec<PointCharge>, eps1: f64, eps2: f64) -> Self {
        Self { radius, charges, eps1, eps2, series_terms: 100 }
    }
}

/// Energy and truncation estimate of a Kirkwood series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KirkwoodEnergy {
    /// kcal/mol.
    pub energy: f64,
    /// `|last term| / |sum|`.
    pub last_term_relative: f64,
}

/// Relative size of the last series term above which the sum is rejected.
pub const SERIES_TOLERANCE: f64 = 1e-12;

/// Reaction-field energy of charges in a dielectric sphere without salt.
pub fn kirkwood_energy(p: &KirkwoodProblem) -> Result<f64> {
    kirkwood_energy_detailed(p, COULOMB_KCAL_MOL).map(|k| k.energy)
}

pub fn kirkwood_energy_detailed(p: &KirkwoodProblem, coulomb_constant: f64) -> Result<KirkwoodEnergy> {
    if !(p.radius > 0.0) {
        return Err(Error::NonPositiveArgument(p.radius));
    }
    for c in &p.charges {
        if !(c.position.norm() < p.radius) {
            return Err(Error::ChargeOutsideCavity { point: c.position.to_array() });
        }
    }
    let (e1, e2, r) = (p.eps1, p.eps2, p.radius);
    let mut terms = vec![0.0; p.series_terms + 1];
    let mut legendre = vec![0.0; p.series_terms + 1];
    for a in &p.charges {
        for b in &p.charges {
            let (ra, rb) = (a.position.norm(), b.position.norm());
            let cos = if ra > 0.0 && rb > 0.0 { (a.position.dot(b.position) / (ra * rb)).clamp(-1.0, 1.0) } else { 1.0 };
            legendre_into(cos, &mut legendre);
            let t = ra * rb / (r * r);
            let mut pow = 1.0 / r;
            for (l, term) in terms.iter_mut().enumerate() {
                let lf = l as f64;
                let f = (e1 - e2) * (lf + 1.0) / (e1 * (lf * e1 + (lf + 1.0) * e2));
                *term += a.charge * b.charge * f * pow * legendre[l];
                pow *= t;
            }
        }
    }
    let sum: f64 = terms.iter().sum();
    let last = terms[p.series_terms].abs();
    let rel = if sum != 0.0 { last / sum.abs() } else { last };
    if rel > SERIES_TOLERANCE {
        return Err(Error::SeriesNotConverged { terms: p.series_terms, last_term: rel });
    }
    Ok(KirkwoodEnergy { energy: 0.5 * coulomb_constant * sum, last_term_relative: rel })
}

fn legendre_into(x: f64, out: &mut [f64]) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for (l, o) in out.iter_mut().enumerate() {
        match l {
            0 => *o = 1.0,
            1 => *o = x,
            _ => {
                let lf = l as f64;
                let p2 = ((2.0 * lf - 1.0) * x * p1 - (lf - 1.0) * p0) / lf;
                p0 = p1;
                p1 = p2;
                *o = p2;
            }
        }
    }
}

/// Solvation energy of a charge `q` at the center of a ball of radius `radius`
/// in a screened solvent: `C q²/(2R) (1/(ε2(1+κR)) − 1/ε1)`, kcal/mol.
pub fn born_energy_screened(q: f64, radius: f64, eps1: f64, eps2: f64, kappa: f64) -> Result<f64> {
    if !(radius > 0.0) {
        return Err(Error::NonPositiveArgument(radius));
    }
    Ok(COULOMB_KCAL_MOL * q * q / (2.0 * radius) * (1.0 / (eps2 * (1.0 + kappa * radius)) - 1.0 / eps1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Vec3;

    #[test]
    fn born_matches_kirkwood_without_salt() {
        let p = KirkwoodProblem::new(2.0, vec![PointCharge::new(Vec3::ZERO, 1.0)], 1.0, 78.54);
        let k = kirkwood_energy(&p).unwrap();
        let b = born_energy_screened(1.0, 2.0, 1.0, 78.54, 0.0).unwrap();
        assert!((k - b).abs() < 1e-12 * b.abs());
        assert_eq!(format!("{k:.4}"), "-81.9589");
    }

    #[test]
    fn conductor_limit() {
        let b = born_energy_screened(1.0, 2.0, 1.0, 78.54, 1e12).unwrap();
        assert!((b + COULOMB_KCAL_MOL / 4.0).abs() < 1e-8);
    }

    #[test]
    fn no_contrast_gives_zero() {
        let p = KirkwoodProblem::new(2.0, vec![PointCharge::new(Vec3::new(0.5, 0.1, 0.0), 1.0)], 4.0, 4.0);
        assert_eq!(kirkwood_energy(&p).unwrap(), 0.0);
    }

    #[test]
    fn truncation_is_reported() {
        let mut p = KirkwoodProblem::new(2.0, vec![PointCharge::new(Vec3::new(1.9, 0.0, 0.0), 1.0)], 1.0, 80.0);
        p.series_terms = 10;
        assert!(matches!(kirkwood_energy(&p), Err(Error::SeriesNotConverged { terms: 10, .. })));
    }

    #[test]
    fn legendre_values() {
        let mut out = [0.0; 4];
        legendre_into(0.5, &mut out);
        assert_eq!(out, [1.0, 0.5, -0.125, -0.4375]);
    }
}
