use crate::angular::eval_harmonics_into;
use crate::cavity::PointCharge;
use crate::error::{Error, Result};
use crate::geometry::Vec3;
use crate::operators::{DiscreteOperatorSet, HarmonicCoeffs, SINGULAR_DISTANCE};
use crate::radial::RadialKernel;

/// Reaction potential at an interior point, from the expansion of the ball
/// centered on `x` if there is one, otherwise of the ball containing `x` most deeply.
pub fn reaction_potential_at(ops: &DiscreteOperatorSet, xr: &HarmonicCoeffs, x: Vec3) -> Result<f64> {
    let balls = ops.cavity().balls();
    let mut best: Option<(usize, f64)> = None;
    for (j, b) in balls.iter().enumerate() {
        let d = (x - b.center).norm();
        if d < SINGULAR_DISTANCE {
            best = Some((j, f64::INFINITY));
            break;
        }
        let depth = b.radius - d;
        if depth > 0.0 && best.map_or(true, |(_, bd)| depth > bd) {
            best = Some((j, depth));
        }
    }
    let (j, _) = best.ok_or(Error::ChargeOutsideCavity { point: x.to_array() })?;
    let lmax = ops.lmax();
    let block = xr.block(j);
    let d = x - balls[j].center;
    let r = d.norm();
    if r < SINGULAR_DISTANCE {
        return Ok(block[0] * crate::angular::eval_harmonics(0, Vec3::new(0.0, 0.0, 1.0))?[0]);
    }
    let mut y = vec![0.0; block.len()];
    eval_harmonics_into(lmax, d * (1.0 / r), &mut y);
    let mut radial = vec![0.0; lmax + 1];
    RadialKernel::Laplace.interior_ratios(lmax, r, balls[j].radius, &mut radial);
    let mut acc = 0.0;
    let mut p = 0;
    for (l, f) in radial.iter().enumerate() {
        let mut s = 0.0;
        for _ in 0..2 * l + 1 {
            s += block[p] * y[p];
            p += 1;
        }
        acc += f * s;
    }
    Ok(acc)
}

/// `E = ½ C Σ_i q_i ψ_r(x_i)` in kcal/mol with the default constant.
pub fn solvation_energy(ops: &DiscreteOperatorSet, xr: &HarmonicCoeffs, charges: &[PointCharge]) -> Result<f64> {
    solvation_energy_with(ops, xr, charges, crate::units::COULOMB_KCAL_MOL)
}

pub fn solvation_energy_with(
    ops: &DiscreteOperatorSet,
    xr: &HarmonicCoeffs,
    charges: &[PointCharge],
    coulomb_constant: f64,
) -> Result<f64> {
    if xr.n_balls() != ops.cavity().len() || xr.lmax() != ops.lmax() {
        return Err(Error::ShapeMismatch { expected: ops.dim(), got: xr.len() });
    }
    let mut acc = 0.0;
    for c in charges {
        acc += c.charge * reaction_potential_at(ops, xr, c.position)?;
    }
    Ok(0.5 * coulomb_constant * acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angular::lebedev_grid;
    use crate::cavity::{Ball, Cavity};
    use crate::operators::{CoeffRole, SolventParams};
    use crate::units::COULOMB_KCAL_MOL;

    fn ops() -> DiscreteOperatorSet {
        let cav = Cavity::new(vec![Ball::new(Vec3::ZERO, 2.0, 1.0), Ball::new(Vec3::new(2.5, 0.0, 0.0), 1.5, 0.0)]).unwrap();
        DiscreteOperatorSet::new(&cav, &lebedev_grid(26).unwrap(), SolventParams::default(), 3).unwrap()
    }

    #[test]
    fn centered_monopole() {
        let ops = ops();
        let mut xr = HarmonicCoeffs::zeros(2, 3, CoeffRole::Reaction);
        xr.block_mut(0)[0] = (4.0 * std::f64::consts::PI).sqrt();
        let e = solvation_energy(&ops, &xr, &[PointCharge::new(Vec3::ZERO, 1.0)]).unwrap();
        assert!((e - 0.5 * COULOMB_KCAL_MOL).abs() < 1e-12);
    }

    #[test]
    fn zero_charges_zero_energy() {
        let ops = ops();
        let xr = HarmonicCoeffs::from_vec(2, 3, CoeffRole::Reaction, vec![0.3; 32]).unwrap();
        assert_eq!(solvation_energy(&ops, &xr, &[]).unwrap(), 0.0);
        assert_eq!(solvation_energy(&ops, &xr, &[PointCharge::new(Vec3::new(0.3, 0.2, 0.1), 0.0)]).unwrap(), 0.0);
    }

    #[test]
    fn off_center_matches_direct_sum() {
        let ops = ops();
        let data: Vec<f64> = (0..32).map(|k| ((k * 13) as f64).sin()).collect();
        let xr = HarmonicCoeffs::from_vec(2, 3, CoeffRole::Reaction, data).unwrap();
        let x = Vec3::new(0.4, -0.7, 0.5);
        let got = reaction_potential_at(&ops, &xr, x).unwrap();
        let r = x.norm();
        let y = crate::angular::eval_harmonics(3, x * (1.0 / r)).unwrap();
        let want: f64 = (0..16).map(|p| xr.block(0)[p] * (r / 2.0).powi(crate::angular::degree_of(p) as i32) * y[p]).sum();
        assert!((got - want).abs() < 1e-14);
    }

    #[test]
    fn outside_charge_rejected() {
        let ops = ops();
        let xr = HarmonicCoeffs::zeros(2, 3, CoeffRole::Reaction);
        let r = solvation_energy(&ops, &xr, &[PointCharge::new(Vec3::new(0.0, 5.0, 0.0), 1.0)]);
        assert!(matches!(r, Err(Error::ChargeOutsideCavity { .. })));
    }
}
