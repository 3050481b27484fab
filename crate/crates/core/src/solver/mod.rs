//! Linear-system drivers and the solvation energy.
//!
//! With `A`, `B` the interior coupling operators and `C1`, `C2` the
//! single-layer couplings, the unknowns `(X_r, X_e)` satisfy
//!
//! ```text
//! [ A + C1   C2   ] [X_r]   [G0 + F0]
//! [ C1     B + C2 ] [X_e] = [  F0   ]
//! ```
//!
//! [`SolveMode::Outer`] lags the `C` terms and solves the two sparse blocks
//! separately at each sweep; [`SolveMode::Global`] hands the whole system to
//! GMRES.

mod energy;
mod gmres;
mod sweep;

pub use energy::{reaction_potential_at, solvation_energy, solvation_energy_with};
pub use gmres::{gmres, GmresOutcome};
pub use sweep::{convergence_sweep, SweepRow};

use std::str::FromStr;
use std::time::Instant;

use crate::angular::{basis_len, lebedev_grid};
use crate::cavity::{Cavity, PointCharge};
use crate::error::{Error, Result};
use crate::geometry::Vec3;
use crate::operators::{CoeffRole, DiscreteOperatorSet, HarmonicCoeffs, OperatorOptions, SolventParams, SINGULAR_DISTANCE};
use crate::units::COULOMB_KCAL_MOL;

/// How the coupled system is solved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMode {
    Outer,
    Global,
}

impl FromStr for SolveMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "outer" => Ok(SolveMode::Outer),
            "global" => Ok(SolveMode::Global),
            other => Err(Error::InvalidConfig(format!("unknown mode '{other}' (expected outer or global)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveConfig {
    pub lmax: usize,
    pub n_leb: usize,
    /// Relative energy increment that ends the outer iteration.
    pub tol: f64,
    /// Relative residual target of every GMRES solve.
    pub gmres_tol: f64,
    pub gmres_restart: usize,
    /// Cap on Krylov steps per GMRES solve.
    pub gmres_max_iter: usize,
    pub max_outer: usize,
    pub mode: SolveMode,
    pub deterministic: bool,
    pub cache_limit_bytes: usize,
    /// kcal·Å/(mol·e²).
    pub coulomb_constant: f64,
}

impl Default for SolveConfig {
    fn default() -> Self {
        Self {
            lmax: 7,
            n_leb: 86,
            tol: 1e-4,
            gmres_tol: 1e-8,
            gmres_restart: 30,
            gmres_max_iter: 3000,
            max_outer: 200,
            mode: SolveMode::Outer,
            deterministic: false,
            cache_limit_bytes: OperatorOptions::default().cache_limit_bytes,
            coulomb_constant: COULOMB_KCAL_MOL,
        }
    }
}

impl SolveConfig {
    pub fn validate(&self) -> Result<()> {
        let unit = |name: &str, v: f64| {
            if v > 0.0 && v < 1.0 {
                Ok(())
            } else {
                Err(Error::InvalidConfig(format!("{name} must lie in (0, 1), got {v}")))
            }
        };
        unit("tol", self.tol)?;
        unit("gmres_tol", self.gmres_tol)?;
        if self.gmres_restart == 0 || self.max_outer == 0 || self.gmres_max_iter == 0 {
            return Err(Error::InvalidConfig("restart and iteration caps must be positive".into()));
        }
        if !(self.coulomb_constant > 0.0) {
            return Err(Error::InvalidConfig("coulomb constant must be positive".into()));
        }
        Ok(())
    }

    pub fn operator_options(&self) -> OperatorOptions {
        OperatorOptions { deterministic: self.deterministic, cache_limit_bytes: self.cache_limit_bytes }
    }
}

/// Reaction potential at one exposed surface node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceSample {
    pub ball: usize,
    pub position: Vec3,
    /// e/Å.
    pub psi_r: f64,
}

#[derive(Debug, Clone)]
pub struct SolveReport {
    /// kcal/mol.
    pub energy: f64,
    /// Energy after each outer sweep (a single entry in global mode).
    pub energy_history: Vec<f64>,
    /// Relative energy increments from the second sweep on.
    pub increments: Vec<f64>,
    pub outer_iterations: usize,
    pub gmres_iterations: usize,
    /// Relative residual of the last GMRES solve.
    pub final_residual: f64,
    pub xr: HarmonicCoeffs,
    pub xe: HarmonicCoeffs,
    pub surface: Vec<SurfaceSample>,
    pub setup_seconds: f64,
    pub solve_seconds: f64,
    /// Bytes held by the coefficient vectors and operator caches, approximately.
    pub memory_bytes: usize,
}

/// Screened Coulomb potential of the charges in the solvent,
/// `Σ q e^{−κd}/(ε2 d)`, at every exposed node in ball-major order.
pub fn initial_guess_g0(ops: &DiscreteOperatorSet, charges: &[PointCharge]) -> Result<Vec<f64>> {
    let params = ops.params();
    ops.exposed_nodes().iter().map(|&(j, n)| screened_coulomb(ops.node_position(j, n), charges, params)).collect()
}

fn screened_coulomb(x: Vec3, charges: &[PointCharge], params: SolventParams) -> Result<f64> {
    let mut acc = 0.0;
    for c in charges {
        let d = (x - c.position).norm();
        if d < SINGULAR_DISTANCE {
            return Err(Error::SingularEvaluation { point: x.to_array() });
        }
        acc += c.charge * (-params.kappa * d).exp() / d;
    }
    Ok(acc / params.eps2)
}

/// Builds the operators for `config` and solves.
pub fn solve(cavity: &Cavity, charges: &[PointCharge], params: &SolventParams, config: &SolveConfig) -> Result<SolveReport> {
    config.validate()?;
    let t0 = Instant::now();
    let grid = lebedev_grid(config.n_leb)?;
    let ops = DiscreteOperatorSet::with_options(cavity, &grid, *params, config.lmax, config.operator_options())?;
    let setup = t0.elapsed().as_secs_f64();
    let mut report = solve_with_operators(&ops, charges, config)?;
    report.setup_seconds = setup;
    Ok(report)
}

/// Solves with prebuilt operators; `config.lmax` and `config.n_leb` are ignored.
pub fn solve_with_operators(ops: &DiscreteOperatorSet, charges: &[PointCharge], config: &SolveConfig) -> Result<SolveReport> {
    config.validate()?;
    if ops.n_exposed() == 0 {
        return Err(Error::NoExposedSurface);
    }
    let t0 = Instant::now();
    let g0 = ops.rhs_g0(charges)?;
    let f0 = ops.rhs_f0(charges)?;
    let guess = initial_guess_g0(ops, charges)?;
    let gx0 = ops.project_exposed_samples(&guess)?;

    let mut state = match config.mode {
        SolveMode::Outer => outer(ops, charges, config, &g0, &f0, &gx0)?,
        SolveMode::Global => global(ops, charges, config, &g0, &f0, &gx0)?,
    };
    state.surface = surface_samples(ops, &state.xr);
    state.solve_seconds = t0.elapsed().as_secs_f64();
    let cached = if ops.is_fully_cached() {
        let m = ops.cavity().len();
        (ops.n_exposed() * m + 2 * m * ops.grid().len()) * ops.n_basis() * 8
    } else {
        0
    };
    state.memory_bytes = cached + 8 * ops.dim() * (4 + config.gmres_restart);
    Ok(state)
}

fn empty_report(ops: &DiscreteOperatorSet) -> SolveReport {
    let m = ops.cavity().len();
    SolveReport {
        energy: 0.0,
        energy_history: Vec::new(),
        increments: Vec::new(),
        outer_iterations: 0,
        gmres_iterations: 0,
        final_residual: 0.0,
        xr: HarmonicCoeffs::zeros(m, ops.lmax(), CoeffRole::Reaction),
        xe: HarmonicCoeffs::zeros(m, ops.lmax(), CoeffRole::Extended),
        surface: Vec::new(),
        setup_seconds: 0.0,
        solve_seconds: 0.0,
        memory_bytes: 0,
    }
}

fn outer(
    ops: &DiscreteOperatorSet,
    charges: &[PointCharge],
    config: &SolveConfig,
    g0: &HarmonicCoeffs,
    f0: &HarmonicCoeffs,
    gx0: &HarmonicCoeffs,
) -> Result<SolveReport> {
    let dim = ops.dim();
    let mut rep = empty_report(ops);
    let mut xr = vec![0.0; dim];
    let mut xe = vec![0.0; dim];
    let mut gx = gx0.as_slice().to_vec();
    let mut c1 = vec![0.0; dim];
    let mut c2 = vec![0.0; dim];
    let mut rhs = vec![0.0; dim];
    let mut prev = f64::NAN;

    for k in 1..=config.max_outer {
        for ((r, g), x) in rhs.iter_mut().zip(g0.as_slice()).zip(&gx) {
            *r = g + x;
        }
        let oa = gmres(|v, w| ops.apply_a_into(v, w), &rhs, &mut xr, config.gmres_tol, config.gmres_restart, config.gmres_max_iter)?;
        let ob = gmres(|v, w| ops.apply_b_into(v, w), &gx, &mut xe, config.gmres_tol, config.gmres_restart, config.gmres_max_iter)?;
        rep.gmres_iterations += oa.iterations + ob.iterations;
        rep.final_residual = oa.relative_residual.max(ob.relative_residual);
        if !(oa.converged && ob.converged) {
            return Err(Error::NoConvergence {
                iterations: k,
                last_increment: rep.increments.last().copied().unwrap_or(f64::NAN),
                energy_history: rep.energy_history,
            });
        }
        let xr_c = HarmonicCoeffs::from_vec(ops.cavity().len(), ops.lmax(), CoeffRole::Reaction, xr.clone())?;
        let e = solvation_energy_with(ops, &xr_c, charges, config.coulomb_constant)?;
        rep.energy_history.push(e);
        rep.outer_iterations = k;
        rep.energy = e;
        if k > 1 {
            let inc = if e.abs() < 1e-12 { (e - prev).abs() } else { (e - prev).abs() / e.abs() };
            rep.increments.push(inc);
            if inc < config.tol {
                rep.xr = xr_c;
                rep.xe = HarmonicCoeffs::from_vec(ops.cavity().len(), ops.lmax(), CoeffRole::Extended, xe)?;
                return Ok(rep);
            }
        }
        prev = e;
        ops.apply_c_into(&xr, &xe, &mut c1, &mut c2)?;
        for ((g, f), (a, b)) in gx.iter_mut().zip(f0.as_slice()).zip(c1.iter().zip(&c2)) {
            *g = f - a - b;
        }
    }
    Err(Error::NoConvergence {
        iterations: config.max_outer,
        last_increment: rep.increments.last().copied().unwrap_or(f64::NAN),
        energy_history: rep.energy_history,
    })
}

fn global(
    ops: &DiscreteOperatorSet,
    charges: &[PointCharge],
    config: &SolveConfig,
    g0: &HarmonicCoeffs,
    f0: &HarmonicCoeffs,
    gx0: &HarmonicCoeffs,
) -> Result<SolveReport> {
    let dim = ops.dim();
    let mut rep = empty_report(ops);
    let mut b = vec![0.0; 2 * dim];
    for k in 0..dim {
        b[k] = g0.as_slice()[k] + f0.as_slice()[k];
        b[dim + k] = f0.as_slice()[k];
    }
    // start from the first outer sweep's Dirichlet data, applied as if A = B = I
    let mut x = vec![0.0; 2 * dim];
    for k in 0..dim {
        x[k] = g0.as_slice()[k] + gx0.as_slice()[k];
        x[dim + k] = gx0.as_slice()[k];
    }
    let mut c1 = vec![0.0; dim];
    let mut c2 = vec![0.0; dim];
    let op = |v: &[f64], w: &mut [f64]| -> Result<()> {
        let (vr, ve) = v.split_at(dim);
        let (wr, we) = w.split_at_mut(dim);
        ops.apply_a_into(vr, wr)?;
        ops.apply_b_into(ve, we)?;
        ops.apply_c_into(vr, ve, &mut c1, &mut c2)?;
        for k in 0..dim {
            let s = c1[k] + c2[k];
            wr[k] += s;
            we[k] += s;
        }
        Ok(())
    };
    let out = gmres(op, &b, &mut x, config.gmres_tol, config.gmres_restart, config.gmres_max_iter)?;
    rep.gmres_iterations = out.iterations;
    rep.final_residual = out.relative_residual;
    if !out.converged {
        return Err(Error::NoConvergence {
            iterations: out.iterations,
            last_increment: out.relative_residual,
            energy_history: Vec::new(),
        });
    }
    let xe = x.split_off(dim);
    let m = ops.cavity().len();
    rep.xr = HarmonicCoeffs::from_vec(m, ops.lmax(), CoeffRole::Reaction, x)?;
    rep.xe = HarmonicCoeffs::from_vec(m, ops.lmax(), CoeffRole::Extended, xe)?;
    rep.energy = solvation_energy_with(ops, &rep.xr, charges, config.coulomb_constant)?;
    rep.energy_history.push(rep.energy);
    rep.outer_iterations = 1;
    Ok(rep)
}

fn surface_samples(ops: &DiscreteOperatorSet, xr: &HarmonicCoeffs) -> Vec<SurfaceSample> {
    let nb = basis_len(ops.lmax());
    ops.exposed_nodes()
        .iter()
        .map(|&(j, n)| {
            let y = ops.harmonics().row(n);
            let psi_r = xr.block(j).iter().zip(y).map(|(a, b)| a * b).sum();
            debug_assert_eq!(y.len(), nb);
            SurfaceSample { ball: j, position: ops.node_position(j, n), psi_r }
        })
        .collect()
}
