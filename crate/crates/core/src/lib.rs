//! Domain-decomposition solver for the linearized Poisson–Boltzmann (LPB)
//! solvation model.
//!
//! The solute cavity is a union of van der Waals balls. Inside the cavity the
//! reaction potential (harmonic) and the extended potential (screened Poisson)
//! are expanded ball by ball in real spherical harmonics; the two are coupled
//! on the solvent-exposed part of each sphere through the screened single-layer
//! operator. Lebedev quadrature evaluates every surface integral.
//!
//! Layers, bottom up:
//!
//! - [`angular`]: Lebedev grids and the real orthonormal harmonic basis.
//! - [`radial`]: modified spherical Bessel functions and their ratios.
//! - [`cavity`]: balls, charges, PQR input and the exposure cache.
//! - [`operators`]: the discrete coupling operators and right-hand sides.
//! - [`solver`]: Krylov and outer-iteration drivers plus the solvation energy.
//! - [`oracle`]: Kirkwood and screened-Born reference energies.
//! - [`cli`]: the `ddlpb` command-line front end.
//!
//! ```
//! use ddlpb::cavity::{Ball, Cavity};
//! use ddlpb::geometry::Vec3;
//! use ddlpb::operators::SolventParams;
//! use ddlpb::solver::{solve, SolveConfig};
//!
//! let cavity = Cavity::new(vec![Ball::new(Vec3::ZERO, 2.0, 1.0)]).unwrap();
//! let params = SolventParams::new(1.0, 78.54, 0.0).unwrap();
//! let config = SolveConfig { lmax: 3, n_leb: 26, ..SolveConfig::default() };
//! let report = solve(&cavity, &cavity.center_charges(), &params, &config).unwrap();
//! assert!((report.energy + 81.9589).abs() < 1e-4);
//! ```

pub mod angular;
pub mod cavity;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod operators;
pub mod oracle;
pub mod radial;
pub mod solver;
pub mod units;

pub use error::{Error, Result};
