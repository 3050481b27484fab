use crate::cavity::PointCharge;
use crate::error::{Error, Result};
use crate::geometry::Vec3;

/// Distance below which a point is taken to coincide with a charge.
pub const SINGULAR_DISTANCE: f64 = 1e-10;

/// Coulomb potential of the solute charges in a medium of permittivity `eps1`, in e/Å.
pub fn psi0_at_point(x: Vec3, charges: &[PointCharge], eps1: f64) -> Result<f64> {
    let mut acc = 0.0;
    for c in charges {
        let d = (x - c.position).norm();
        if d < SINGULAR_DISTANCE {
            return Err(Error::SingularEvaluation { point: x.to_array() });
        }
        acc += c.charge / d;
    }
    Ok(acc / eps1)
}

pub fn psi0_at(points: &[Vec3], charges: &[PointCharge], eps1: f64) -> Result<Vec<f64>> {
    points.iter().map(|x| psi0_at_point(*x, charges, eps1)).collect()
}

/// Derivative of the solute Coulomb potential at `x` along `normal`.
pub fn dpsi0_dn_at(x: Vec3, normal: Vec3, charges: &[PointCharge], eps1: f64) -> Result<f64> {
    let mut acc = 0.0;
    for c in charges {
        let d = x - c.position;
        let r = d.norm();
        if r < SINGULAR_DISTANCE {
            return Err(Error::SingularEvaluation { point: x.to_array() });
        }
        acc -= c.charge * d.dot(normal) / (r * r * r);
    }
    Ok(acc / eps1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coulomb_law_and_eps_scaling() {
        let q = [PointCharge::new(Vec3::ZERO, 1.0)];
        let x = Vec3::new(0.0, 2.0, 0.0);
        assert_eq!(psi0_at_point(x, &q, 1.0).unwrap(), 0.5);
        assert_eq!(psi0_at_point(x, &q, 2.0).unwrap(), 0.25);
    }

    #[test]
    fn radial_field_of_centered_charge() {
        let q = [PointCharge::new(Vec3::ZERO, 1.3)];
        let s = Vec3::new(0.6, 0.0, 0.8);
        let v = dpsi0_dn_at(s * 2.0, s, &q, 1.0).unwrap();
        assert!((v + 1.3 / 4.0).abs() < 1e-15);
    }

    #[test]
    fn normal_derivative_matches_finite_difference() {
        let q = [
            PointCharge::new(Vec3::new(0.3, -0.2, 0.1), 0.7),
            PointCharge::new(Vec3::new(-0.5, 0.4, 0.0), -1.1),
        ];
        let n = Vec3::new(1.0, 2.0, -2.0) * (1.0 / 3.0);
        let x = n * 1.8;
        let h = 1e-5;
        let fd = (psi0_at_point(x + n * h, &q, 2.0).unwrap() - psi0_at_point(x - n * h, &q, 2.0).unwrap()) / (2.0 * h);
        let an = dpsi0_dn_at(x, n, &q, 2.0).unwrap();
        assert!((fd - an).abs() < 1e-8 * an.abs());
    }

    #[test]
    fn mirror_symmetry() {
        let q = [PointCharge::new(Vec3::new(0.5, 0.0, 0.0), 1.0), PointCharge::new(Vec3::new(-0.5, 0.0, 0.0), 1.0)];
        let n1 = Vec3::new(0.6, 0.8, 0.0);
        let n2 = Vec3::new(-0.6, 0.8, 0.0);
        let a = dpsi0_dn_at(n1 * 2.0, n1, &q, 1.0).unwrap();
        let b = dpsi0_dn_at(n2 * 2.0, n2, &q, 1.0).unwrap();
        assert!((a - b).abs() < 1e-15);
    }

    #[test]
    fn coincident_point_is_singular() {
        let q = [PointCharge::new(Vec3::new(1.0, 0.0, 0.0), 1.0)];
        assert!(matches!(psi0_at_point(Vec3::new(1.0, 0.0, 0.0), &q, 1.0), Err(Error::SingularEvaluation { .. })));
    }
}
