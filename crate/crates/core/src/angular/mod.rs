//! Angular discretization: Lebedev quadrature on the unit sphere and the real
//! orthonormal spherical-harmonic basis.
//!
//! Harmonics use the fully normalized real convention without the
//! Condon–Shortley phase:
//!
//! - `m > 0`: `√2 N_ℓ^m P_ℓ^m(cos θ) cos(mφ)`
//! - `m = 0`: `N_ℓ^0 P_ℓ(cos θ)`
//! - `m < 0`: `√2 N_ℓ^|m| P_ℓ^|m|(cos θ) sin(|m|φ)`
//!
//! Coefficients are stored packed at `p = ℓ(ℓ+1) + m`.

mod harmonics;
mod lebedev;
mod lebedev_data;

pub use harmonics::{eval_harmonics, eval_harmonics_into, project_onto_basis, HarmonicIndex, HarmonicTable};
pub use lebedev::{lebedev_grid, supported_grid_sizes, AngularGrid, Orbit};

/// Number of packed coefficients for a basis truncated at degree `lmax`.
pub const fn basis_len(lmax: usize) -> usize {
    (lmax + 1) * (lmax + 1)
}

/// Degree of the coefficient at packed position `p`.
pub fn degree_of(p: usize) -> usize {
    let mut l = (p as f64).sqrt() as usize;
    while (l + 1) * (l + 1) <= p {
        l += 1;
    }
    while l * l > p {
        l -= 1;
    }
    l
}

/// `(ℓmax, N_leb)` pairs used for the Kirkwood benchmark rows.
pub const TABLE_PRESETS: [(usize, usize); 5] = [(3, 26), (5, 50), (7, 86), (9, 146), (11, 194)];
