use crate::angular::basis_len;
use crate::error::{Error, Result};

/// Which potential a coefficient array expands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffRole {
    Reaction,
    Extended,
}

/// Per-ball packed spherical-harmonic coefficients, ball-major.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicCoeffs {
    n_balls: usize,
    lmax: usize,
    role: CoeffRole,
    data: Vec<f64>,
}

impl HarmonicCoeffs {
    pub fn zeros(n_balls: usize, lmax: usize, role: CoeffRole) -> Self {
        Self { n_balls, lmax, role, data: vec![0.0; n_balls * basis_len(lmax)] }
    }

    pub fn from_vec(n_balls: usize, lmax: usize, role: CoeffRole, data: Vec<f64>) -> Result<Self> {
        let expected = n_balls * basis_len(lmax);
        if data.len() != expected {
            return Err(Error::ShapeMismatch { expected, got: data.len() });
        }
        Ok(Self { n_balls, lmax, role, data })
    }

    pub fn n_balls(&self) -> usize {
        self.n_balls
    }

    pub fn lmax(&self) -> usize {
        self.lmax
    }

    pub fn role(&self) -> CoeffRole {
        self.role
    }

    pub fn block(&self, j: usize) -> &[f64] {
        let nb = basis_len(self.lmax);
        &self.data[j * nb..(j + 1) * nb]
    }

    pub fn block_mut(&mut self, j: usize) -> &mut [f64] {
        let nb = basis_len(self.lmax);
        &mut self.data[j * nb..(j + 1) * nb]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.data
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }
}
