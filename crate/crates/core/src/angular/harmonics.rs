use std::f64::consts::PI;

use super::{basis_len, AngularGrid};
use crate::error::{Error, Result};
use crate::geometry::Vec3;

const UNIT_TOL: f64 = 1e-12;

/// Degree/order pair of a real spherical harmonic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HarmonicIndex {
    pub ell: usize,
    pub m: i64,
}

impl HarmonicIndex {
    pub fn new(ell: usize, m: i64) -> Option<Self> {
        (m.unsigned_abs() as usize <= ell).then_some(Self { ell, m })
    }

    pub fn packed(self) -> usize {
        ((self.ell * (self.ell + 1)) as i64 + self.m) as usize
    }

    pub fn from_packed(p: usize) -> Self {
        let ell = super::degree_of(p);
        Self {
            ell,
            m: p as i64 - (ell * (ell + 1)) as i64,
        }
    }

    /// All indices up to `lmax` in packed order.
    pub fn iter(lmax: usize) -> impl Iterator<Item = HarmonicIndex> {
        (0..basis_len(lmax)).map(Self::from_packed)
    }
}

/// Evaluates all real harmonics up to `lmax` at the unit direction `s`.
pub fn eval_harmonics(lmax: usize, s: Vec3) -> Result<Vec<f64>> {
    let norm = s.norm();
    if (norm - 1.0).abs() > UNIT_TOL {
        return Err(Error::NonUnitDirection { norm });
    }
    let mut out = vec![0.0; basis_len(lmax)];
    eval_harmonics_into(lmax, s, &mut out);
    Ok(out)
}

/// Unchecked variant writing into `out[..(lmax+1)²]`; `s` must be unit length.
///
/// The azimuthal factor is carried by `(x + iy)^m`, so the recurrence runs on
/// `P̄_ℓ^m / sin^m θ` and stays finite at the poles.
pub fn eval_harmonics_into(lmax: usize, s: Vec3, out: &mut [f64]) {
    let z = s.z;
    let nb = basis_len(lmax);
    debug_assert!(out.len() >= nb);

    // (x + iy)^m, m = 0..=lmax
    let mut cos_m = 1.0;
    let mut sin_m = 0.0;

    // reduced diagonal term P̄_m^m / sin^m θ
    let mut pmm = 0.5 / PI.sqrt();
    for m in 0..=lmax {
        if m > 0 {
            pmm *= ((2 * m + 1) as f64 / (2 * m) as f64).sqrt();
            let c = cos_m * s.x - sin_m * s.y;
            let si = cos_m * s.y + sin_m * s.x;
            cos_m = c;
            sin_m = si;
        }
        let (fc, fs) = if m == 0 {
            (1.0, 0.0)
        } else {
            (std::f64::consts::SQRT_2 * cos_m, std::f64::consts::SQRT_2 * sin_m)
        };

        let mut p_prev = pmm;
        store(out, m, m, p_prev, fc, fs);
        if m == lmax {
            break;
        }
        let mut p_cur = ((2 * m + 3) as f64).sqrt() * z * pmm;
        store(out, m + 1, m, p_cur, fc, fs);
        for l in (m + 2)..=lmax {
            let p_prev2 = p_prev;
            p_prev = p_cur;
            let lf = l as f64;
            let mf = m as f64;
            let a = ((4.0 * lf * lf - 1.0) / (lf * lf - mf * mf)).sqrt();
            let b = (((lf - 1.0) * (lf - 1.0) - mf * mf) / (4.0 * (lf - 1.0) * (lf - 1.0) - 1.0)).sqrt();
            p_cur = a * (z * p_prev - b * p_prev2);
            store(out, l, m, p_cur, fc, fs);
        }
    }
}

#[inline]
fn store(out: &mut [f64], l: usize, m: usize, p: f64, fc: f64, fs: f64) {
    let center = l * (l + 1);
    if m == 0 {
        out[center] = p;
    } else {
        out[center + m] = p * fc;
        out[center - m] = p * fs;
    }
}

/// Discrete projection `[φ]_ℓ^m = Σ_n w_n φ(s_n) Y_ℓ^m(s_n)`.
pub fn project_onto_basis(values_at_nodes: &[f64], grid: &AngularGrid, lmax: usize) -> Result<Vec<f64>> {
    if values_at_nodes.len() != grid.len() {
        return Err(Error::LengthMismatch {
            expected: grid.len(),
            got: values_at_nodes.len(),
        });
    }
    let nb = basis_len(lmax);
    let mut coeffs = vec![0.0; nb];
    let mut y = vec![0.0; nb];
    for ((s, w), v) in grid.points().iter().zip(grid.weights()).zip(values_at_nodes) {
        eval_harmonics_into(lmax, *s, &mut y);
        let wv = w * v;
        for (c, yp) in coeffs.iter_mut().zip(&y) {
            *c += wv * yp;
        }
    }
    Ok(coeffs)
}

/// Harmonic values at every node of a grid, row per node.
#[derive(Debug, Clone)]
pub struct HarmonicTable {
    lmax: usize,
    values: Vec<f64>,
}

impl HarmonicTable {
    pub fn new(grid: &AngularGrid, lmax: usize) -> Self {
        let nb = basis_len(lmax);
        let mut values = vec![0.0; nb * grid.len()];
        for (row, s) in values.chunks_exact_mut(nb).zip(grid.points()) {
            eval_harmonics_into(lmax, *s, row);
        }
        Self { lmax, values }
    }

    pub fn lmax(&self) -> usize {
        self.lmax
    }

    pub fn row(&self, node: usize) -> &[f64] {
        let nb = basis_len(self.lmax);
        &self.values[node * nb..(node + 1) * nb]
    }
}
