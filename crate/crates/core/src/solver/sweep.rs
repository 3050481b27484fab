use std::time::Instant;

use super::{solve, SolveConfig};
use crate::cavity::{Cavity, PointCharge};
use crate::error::{Error, Result};
use crate::operators::SolventParams;

/// One `(ℓmax, N_leb)` entry of a convergence sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub lmax: usize,
    pub n_leb: usize,
    /// kcal/mol; `None` when the solve failed.
    pub energy: Option<f64>,
    pub outer_iterations: usize,
    pub seconds: f64,
    pub error: Option<String>,
}

/// Runs one solve per `(lmax_list[k], nleb_list[k])`, keeping input order.
///
/// A failing row records its error and the sweep continues.
pub fn convergence_sweep(
    cavity: &Cavity,
    charges: &[PointCharge],
    params: &SolventParams,
    lmax_list: &[usize],
    nleb_list: &[usize],
    base: &SolveConfig,
) -> Result<Vec<SweepRow>> {
    if lmax_list.len() != nleb_list.len() {
        return Err(Error::LengthMismatch { expected: lmax_list.len(), got: nleb_list.len() });
    }
    Ok(lmax_list
        .iter()
        .zip(nleb_list)
        .map(|(&lmax, &n_leb)| {
            let cfg = SolveConfig { lmax, n_leb, ..base.clone() };
            let t0 = Instant::now();
            let res = solve(cavity, charges, params, &cfg);
            let seconds = t0.elapsed().as_secs_f64();
            match res {
                Ok(r) => SweepRow { lmax, n_leb, energy: Some(r.energy), outer_iterations: r.outer_iterations, seconds, error: None },
                Err(e) => SweepRow { lmax, n_leb, energy: None, outer_iterations: 0, seconds, error: Some(e.to_string()) },
            }
        })
        .collect())
}
