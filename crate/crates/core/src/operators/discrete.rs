use rayon::prelude::*;

use super::coeffs::{CoeffRole, HarmonicCoeffs};
use super::potential::{dpsi0_dn_at, psi0_at_point};
use super::SolventParams;
use crate::angular::{basis_len, degree_of, eval_harmonics_into, AngularGrid, HarmonicTable};
use crate::cavity::{build_exposure, Cavity, ExposureCache, PointCharge};
use crate::error::{Error, Result};
use crate::geometry::Vec3;
use crate::radial::RadialKernel;

/// Execution knobs for the operator applications.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatorOptions {
    /// Run every application on the calling thread.
    ///
    /// Parallel runs already sum in a fixed order, so this only matters when
    /// the thread pool itself must be avoided.
    pub deterministic: bool,
    /// Upper bound on the bytes spent caching trace rows and single-layer
    /// rows; rows that do not fit are recomputed on every application.
    pub cache_limit_bytes: usize,
}

impl Default for OperatorOptions {
    fn default() -> Self {
        Self { deterministic: false, cache_limit_bytes: 1 << 30 }
    }
}

/// All discrete operators of one (cavity, grid, solvent, ℓmax) setup.
#[derive(Debug, Clone)]
pub struct DiscreteOperatorSet {
    cavity: Cavity,
    grid: AngularGrid,
    exposure: ExposureCache,
    params: SolventParams,
    kernel: RadialKernel,
    lmax: usize,
    options: OperatorOptions,
    ytab: HarmonicTable,
    // per ball, ℓ-indexed
    sl_eigen: Vec<Vec<f64>>,
    ip_over_i: Vec<Vec<f64>>,
    // per ball, nb × nb row-major
    p_mats: Vec<Vec<f64>>,
    // per neighbor entry, nb values each; None when over the cache limit
    trace_a: Option<Vec<f64>>,
    trace_b: Option<Vec<f64>>,
    // position of (j, n) among the exposed nodes, usize::MAX when buried
    exposed_index: Vec<usize>,
    exposed_list: Vec<(usize, usize)>,
    // per exposed node, M × nb values
    q_rows: Option<Vec<f64>>,
}

impl DiscreteOperatorSet {
    pub fn new(cavity: &Cavity, grid: &AngularGrid, params: SolventParams, lmax: usize) -> Result<Self> {
        Self::with_options(cavity, grid, params, lmax, OperatorOptions::default())
    }

    pub fn with_options(
        cavity: &Cavity,
        grid: &AngularGrid,
        params: SolventParams,
        lmax: usize,
        options: OperatorOptions,
    ) -> Result<Self> {
        let params = SolventParams::new(params.eps1, params.eps2, params.kappa)?;
        let exposure = build_exposure(cavity, grid);
        let kernel = params.kernel();
        let nb = basis_len(lmax);
        let ytab = HarmonicTable::new(grid, lmax);
        let m = cavity.len();
        let n_nodes = grid.len();

        let sl_eigen = cavity.balls().iter().map(|b| kernel.single_layer_eigenvalues(lmax, b.radius)).collect();
        let ip_over_i = cavity.balls().iter().map(|b| kernel.interior_log_derivs(lmax, b.radius)).collect();

        let p_mats = (0..m)
            .map(|i| {
                let mut p = vec![0.0; nb * nb];
                for n in exposure.exposed_nodes(i) {
                    let y = ytab.row(n);
                    let w = grid.weights()[n];
                    for a in 0..nb {
                        let wa = w * y[a];
                        for b in 0..nb {
                            p[a * nb + b] += wa * y[b];
                        }
                    }
                }
                p
            })
            .collect();

        let mut exposed_index = vec![usize::MAX; m * n_nodes];
        let mut exposed_list = Vec::new();
        for j in 0..m {
            for n in exposure.exposed_nodes(j) {
                exposed_index[j * n_nodes + n] = exposed_list.len();
                exposed_list.push((j, n));
            }
        }

        let mut set = Self {
            cavity: cavity.clone(),
            grid: grid.clone(),
            exposure,
            params,
            kernel,
            lmax,
            options,
            ytab,
            sl_eigen,
            ip_over_i,
            p_mats,
            trace_a: None,
            trace_b: None,
            exposed_index,
            exposed_list,
            q_rows: None,
        };

        let n_entries: usize = (0..m).map(|j| (0..n_nodes).map(|n| set.exposure.neighbors(j, n).len()).sum::<usize>()).sum();
        let trace_bytes = 2 * n_entries * nb * std::mem::size_of::<f64>();
        let q_bytes = set.exposed_list.len() * m * nb * std::mem::size_of::<f64>();
        let mut budget = options.cache_limit_bytes;
        if trace_bytes <= budget {
            budget -= trace_bytes;
            set.trace_a = Some(set.build_trace_cache(false));
            set.trace_b = Some(set.build_trace_cache(true));
        }
        if q_bytes <= budget {
            set.q_rows = Some(set.build_q_cache());
        }
        Ok(set)
    }

    pub fn cavity(&self) -> &Cavity {
        &self.cavity
    }

    pub fn grid(&self) -> &AngularGrid {
        &self.grid
    }

    pub fn exposure(&self) -> &ExposureCache {
        &self.exposure
    }

    pub fn params(&self) -> SolventParams {
        self.params
    }

    pub fn kernel(&self) -> RadialKernel {
        self.kernel
    }

    pub fn lmax(&self) -> usize {
        self.lmax
    }

    pub fn options(&self) -> OperatorOptions {
        self.options
    }

    pub fn harmonics(&self) -> &HarmonicTable {
        &self.ytab
    }

    /// Basis functions per ball.
    pub fn n_basis(&self) -> usize {
        basis_len(self.lmax)
    }

    /// Length of one coefficient vector, `M (ℓmax+1)²`.
    pub fn dim(&self) -> usize {
        self.cavity.len() * self.n_basis()
    }

    pub fn n_exposed(&self) -> usize {
        self.exposed_list.len()
    }

    /// Whether the trace and single-layer rows fit in the cache budget.
    pub fn is_fully_cached(&self) -> bool {
        self.trace_a.is_some() && self.q_rows.is_some()
    }

    /// `(i'_ℓ/i_ℓ − k'_ℓ/k_ℓ)^{−1}` at the radius of ball `i`, per degree.
    pub fn single_layer_eigenvalues(&self, i: usize) -> &[f64] {
        &self.sl_eigen[i]
    }

    /// Interior log-derivatives of the extended potential at the radius of ball `i`.
    pub fn interior_log_derivs(&self, i: usize) -> &[f64] {
        &self.ip_over_i[i]
    }

    /// Gram matrix of the basis restricted to the exposed part of sphere `i`, row-major.
    pub fn p_matrix(&self, i: usize) -> &[f64] {
        &self.p_mats[i]
    }

    /// Interior radial factors on ball `i` at local radius `r`, Laplace (`hsp == false`) or screened.
    fn interior_factors(&self, hsp: bool, i: usize, r: f64, out: &mut [f64]) {
        let radius = self.cavity.balls()[i].radius;
        if hsp {
            self.kernel.interior_ratios(self.lmax, r, radius, out);
        } else {
            RadialKernel::Laplace.interior_ratios(self.lmax, r, radius, out);
        }
    }

    fn trace_row_into(&self, hsp: bool, entry_ball: usize, r: f64, s: Vec3, out: &mut [f64], radial: &mut [f64]) {
        eval_harmonics_into(self.lmax, s, out);
        self.interior_factors(hsp, entry_ball, r, radial);
        let mut p = 0;
        for (l, f) in radial.iter().enumerate() {
            for _ in 0..2 * l + 1 {
                out[p] *= f;
                p += 1;
            }
        }
    }

    fn build_trace_cache(&self, hsp: bool) -> Vec<f64> {
        let nb = self.n_basis();
        let mut rows = Vec::new();
        let mut row = vec![0.0; nb];
        let mut radial = vec![0.0; self.lmax + 1];
        for j in 0..self.cavity.len() {
            for n in 0..self.grid.len() {
                for e in self.exposure.neighbors(j, n) {
                    self.trace_row_into(hsp, e.ball, e.r, e.s, &mut row, &mut radial);
                    rows.extend_from_slice(&row);
                }
            }
        }
        rows
    }

    /// Surface point `x_jn`.
    pub fn node_position(&self, j: usize, n: usize) -> Vec3 {
        let b = self.cavity.balls()[j];
        b.center + self.grid.points()[n] * b.radius
    }

    /// Single-layer row for source ball `i` at the exposed node `x_jn`: the value
    /// there of the field produced by the density `Y_ℓ^m` on sphere `i`.
    pub fn q_row(&self, i: usize, j: usize, n: usize) -> Vec<f64> {
        let mut out = vec![0.0; self.n_basis()];
        let mut radial = vec![0.0; self.lmax + 1];
        self.q_row_into(i, j, n, &mut out, &mut radial);
        out
    }

    fn q_row_into(&self, i: usize, j: usize, n: usize, out: &mut [f64], radial: &mut [f64]) {
        let bi = self.cavity.balls()[i];
        let (r, s) = if i == j {
            (bi.radius, self.grid.points()[n])
        } else {
            let d = self.node_position(j, n) - bi.center;
            let r = d.norm();
            (r, d * (1.0 / r))
        };
        if i == j {
            out.copy_from_slice(self.ytab.row(n));
            radial.fill(1.0);
        } else {
            eval_harmonics_into(self.lmax, s, out);
            self.kernel.exterior_ratios(self.lmax, r, bi.radius, radial);
        }
        let d = &self.sl_eigen[i];
        let mut p = 0;
        for l in 0..=self.lmax {
            let f = d[l] * radial[l];
            for _ in 0..2 * l + 1 {
                out[p] *= f;
                p += 1;
            }
        }
    }

    fn build_q_cache(&self) -> Vec<f64> {
        let nb = self.n_basis();
        let m = self.cavity.len();
        let stride = m * nb;
        let mut rows = vec![0.0; self.exposed_list.len() * stride];
        let fill = |(k, chunk): (usize, &mut [f64])| {
            let (j, n) = self.exposed_list[k];
            let mut radial = vec![0.0; self.lmax + 1];
            for i in 0..m {
                self.q_row_into(i, j, n, &mut chunk[i * nb..(i + 1) * nb], &mut radial);
            }
        };
        if self.options.deterministic {
            rows.chunks_mut(stride.max(1)).enumerate().for_each(fill);
        } else {
            rows.par_chunks_mut(stride.max(1)).enumerate().for_each(fill);
        }
        rows
    }

    fn for_blocks<F>(&self, out: &mut [f64], f: F)
    where
        F: Fn(usize, &mut [f64]) + Sync + Send,
    {
        let nb = self.n_basis();
        if self.options.deterministic {
            out.chunks_mut(nb).enumerate().for_each(|(j, b)| f(j, b));
        } else {
            out.par_chunks_mut(nb).enumerate().for_each(|(j, b)| f(j, b));
        }
    }

    fn check_len(&self, got: usize) -> Result<()> {
        if got != self.dim() {
            return Err(Error::ShapeMismatch { expected: self.dim(), got });
        }
        Ok(())
    }

    fn check_coeffs(&self, x: &HarmonicCoeffs) -> Result<()> {
        if x.n_balls() != self.cavity.len() || x.lmax() != self.lmax {
            return Err(Error::ShapeMismatch { expected: self.dim(), got: x.len() });
        }
        Ok(())
    }

    fn entry_offsets(&self) -> Vec<usize> {
        // first neighbor-entry index of each (j, n), in cache order
        let mut offs = Vec::with_capacity(self.cavity.len() * self.grid.len() + 1);
        let mut acc = 0;
        for j in 0..self.cavity.len() {
            for n in 0..self.grid.len() {
                offs.push(acc);
                acc += self.exposure.neighbors(j, n).len();
            }
        }
        offs.push(acc);
        offs
    }

    fn apply_interior(&self, hsp: bool, x: &[f64], out: &mut [f64]) -> Result<()> {
        self.check_len(x.len())?;
        self.check_len(out.len())?;
        let nb = self.n_basis();
        let n_nodes = self.grid.len();
        let cache = if hsp { self.trace_b.as_deref() } else { self.trace_a.as_deref() };
        let offs = if cache.is_some() { self.entry_offsets() } else { Vec::new() };
        self.for_blocks(out, |j, block| {
            block.copy_from_slice(&x[j * nb..(j + 1) * nb]);
            let mut row = vec![0.0; nb];
            let mut radial = vec![0.0; self.lmax + 1];
            for n in 0..n_nodes {
                let nbrs = self.exposure.neighbors(j, n);
                if nbrs.is_empty() {
                    continue;
                }
                let mut val = 0.0;
                for (k, e) in nbrs.iter().enumerate() {
                    let xi = &x[e.ball * nb..(e.ball + 1) * nb];
                    let t = match cache {
                        Some(c) => {
                            let at = (offs[j * n_nodes + n] + k) * nb;
                            &c[at..at + nb]
                        }
                        None => {
                            self.trace_row_into(hsp, e.ball, e.r, e.s, &mut row, &mut radial);
                            &row[..]
                        }
                    };
                    val += e.weight * dot(t, xi);
                }
                let wv = self.grid.weights()[n] * val;
                for (o, y) in block.iter_mut().zip(self.ytab.row(n)) {
                    *o -= wv * y;
                }
            }
        });
        Ok(())
    }

    /// `out = A x` on flat ball-major slices.
    pub fn apply_a_into(&self, x: &[f64], out: &mut [f64]) -> Result<()> {
        self.apply_interior(false, x, out)
    }

    /// `out = B x` on flat ball-major slices.
    pub fn apply_b_into(&self, x: &[f64], out: &mut [f64]) -> Result<()> {
        self.apply_interior(true, x, out)
    }

    pub fn apply_a(&self, x: &HarmonicCoeffs) -> Result<HarmonicCoeffs> {
        self.check_coeffs(x)?;
        let mut out = HarmonicCoeffs::zeros(self.cavity.len(), self.lmax, x.role());
        self.apply_a_into(x.as_slice(), out.as_mut_slice())?;
        Ok(out)
    }

    pub fn apply_b(&self, x: &HarmonicCoeffs) -> Result<HarmonicCoeffs> {
        self.check_coeffs(x)?;
        let mut out = HarmonicCoeffs::zeros(self.cavity.len(), self.lmax, x.role());
        self.apply_b_into(x.as_slice(), out.as_mut_slice())?;
        Ok(out)
    }

    /// `c_i = P_i (f_i ⊙ x_i)` with `f_i` a per-degree factor.
    fn exposed_density<'a>(&self, x: &[f64], factors: impl Fn(usize) -> &'a [f64]) -> Vec<f64> {
        let nb = self.n_basis();
        let mut c = vec![0.0; x.len()];
        let mut scaled = vec![0.0; nb];
        for (i, ci) in c.chunks_mut(nb).enumerate() {
            let f = factors(i);
            for (p, s) in scaled.iter_mut().enumerate() {
                *s = f[degree_of(p)] * x[i * nb + p];
            }
            let pm = &self.p_mats[i];
            for (a, ca) in ci.iter_mut().enumerate() {
                *ca = dot(&pm[a * nb..(a + 1) * nb], &scaled);
            }
        }
        c
    }

    /// Adds `scale · S(c)` for each density set to the matching output, where
    /// `S(c)_j = Σ_{n exposed} w_n Y(s_n) Σ_i ⟨q_{i,jn}, c_i⟩`.
    fn single_layer_multi(&self, densities: &[(&[f64], f64)], outs: &mut [&mut [f64]]) {
        let nb = self.n_basis();
        let m = self.cavity.len();
        let n_nodes = self.grid.len();
        let k_dens = densities.len();
        // Work per target block, then scatter, so that every output block has
        // a fixed summation order regardless of scheduling.
        let compute = |j: usize| -> Vec<f64> {
            let mut acc = vec![0.0; k_dens * nb];
            let mut row = vec![0.0; nb];
            let mut radial = vec![0.0; self.lmax + 1];
            let mut vals = vec![0.0; k_dens];
            for n in 0..n_nodes {
                let idx = self.exposed_index[j * n_nodes + n];
                if idx == usize::MAX {
                    continue;
                }
                vals.fill(0.0);
                for i in 0..m {
                    let q = match &self.q_rows {
                        Some(c) => &c[(idx * m + i) * nb..(idx * m + i + 1) * nb],
                        None => {
                            self.q_row_into(i, j, n, &mut row, &mut radial);
                            &row[..]
                        }
                    };
                    for (v, (c, _)) in vals.iter_mut().zip(densities) {
                        *v += dot(q, &c[i * nb..(i + 1) * nb]);
                    }
                }
                let w = self.grid.weights()[n];
                let y = self.ytab.row(n);
                for (d, (v, (_, scale))) in vals.iter().zip(densities).enumerate() {
                    let f = scale * w * v;
                    for (a, yv) in acc[d * nb..(d + 1) * nb].iter_mut().zip(y) {
                        *a += f * yv;
                    }
                }
            }
            acc
        };
        let blocks: Vec<Vec<f64>> = if self.options.deterministic {
            (0..m).map(compute).collect()
        } else {
            (0..m).into_par_iter().map(compute).collect()
        };
        for (j, b) in blocks.iter().enumerate() {
            for (d, out) in outs.iter_mut().enumerate() {
                for (o, v) in out[j * nb..(j + 1) * nb].iter_mut().zip(&b[d * nb..(d + 1) * nb]) {
                    *o += v;
                }
            }
        }
    }

    /// Neumann data factors `ℓ/r_i` of the reaction potential on ball `i`.
    fn laplace_log_derivs(&self, i: usize) -> Vec<f64> {
        let r = self.cavity.balls()[i].radius;
        (0..=self.lmax).map(|l| l as f64 / r).collect()
    }

    /// `(C1 x_r, C2 x_e)` on flat slices.
    pub fn apply_c_into(&self, xr: &[f64], xe: &[f64], out1: &mut [f64], out2: &mut [f64]) -> Result<()> {
        for len in [xr.len(), xe.len(), out1.len(), out2.len()] {
            self.check_len(len)?;
        }
        let lap: Vec<Vec<f64>> = (0..self.cavity.len()).map(|i| self.laplace_log_derivs(i)).collect();
        let c1 = self.exposed_density(xr, |i| &lap[i]);
        let c2 = self.exposed_density(xe, |i| &self.ip_over_i[i]);
        out1.fill(0.0);
        out2.fill(0.0);
        let ratio = self.params.eps1 / self.params.eps2;
        self.single_layer_multi(&[(&c1, ratio), (&c2, -1.0)], &mut [out1, out2]);
        Ok(())
    }

    pub fn apply_c(&self, xr: &HarmonicCoeffs, xe: &HarmonicCoeffs) -> Result<(HarmonicCoeffs, HarmonicCoeffs)> {
        self.check_coeffs(xr)?;
        self.check_coeffs(xe)?;
        let m = self.cavity.len();
        let mut o1 = HarmonicCoeffs::zeros(m, self.lmax, CoeffRole::Reaction);
        let mut o2 = HarmonicCoeffs::zeros(m, self.lmax, CoeffRole::Extended);
        self.apply_c_into(xr.as_slice(), xe.as_slice(), o1.as_mut_slice(), o2.as_mut_slice())?;
        Ok((o1, o2))
    }

    /// `c_i = Σ_n w_n χ_i^e f(x_in) Y(s_n)` for a function evaluated at exposed nodes.
    fn project_exposed(&self, f: impl Fn(usize, usize) -> Result<f64>) -> Result<Vec<f64>> {
        let nb = self.n_basis();
        let mut out = vec![0.0; self.dim()];
        for &(j, n) in &self.exposed_list {
            let v = self.grid.weights()[n] * f(j, n)?;
            for (o, y) in out[j * nb..(j + 1) * nb].iter_mut().zip(self.ytab.row(n)) {
                *o += v * y;
            }
        }
        Ok(out)
    }

    /// `[G0]_j = −Σ_n w_n χ_j^e ψ0(x_jn) Y(s_n)`.
    pub fn rhs_g0(&self, charges: &[PointCharge]) -> Result<HarmonicCoeffs> {
        let eps1 = self.params.eps1;
        let mut v = self.project_exposed(|j, n| psi0_at_point(self.node_position(j, n), charges, eps1))?;
        v.iter_mut().for_each(|x| *x = -*x);
        HarmonicCoeffs::from_vec(self.cavity.len(), self.lmax, CoeffRole::Reaction, v)
    }

    /// `F0 = −(ε1/ε2) S(c0)` with `c0` the exposed projection of `∂_n ψ0`.
    pub fn rhs_f0(&self, charges: &[PointCharge]) -> Result<HarmonicCoeffs> {
        let eps1 = self.params.eps1;
        let c0 = self.project_exposed(|j, n| {
            dpsi0_dn_at(self.node_position(j, n), self.grid.points()[n], charges, eps1)
        })?;
        let mut out = vec![0.0; self.dim()];
        let scale = -self.params.eps1 / self.params.eps2;
        self.single_layer_multi(&[(&c0, scale)], &mut [&mut out]);
        HarmonicCoeffs::from_vec(self.cavity.len(), self.lmax, CoeffRole::Extended, out)
    }

    /// Exposed projection `⟨χ_j^e g, Y⟩` of samples given at the exposed nodes,
    /// in the order of [`Self::exposed_nodes`].
    pub fn project_exposed_samples(&self, values: &[f64]) -> Result<HarmonicCoeffs> {
        if values.len() != self.n_exposed() {
            return Err(Error::LengthMismatch { expected: self.n_exposed(), got: values.len() });
        }
        let n_nodes = self.grid.len();
        let v = self.project_exposed(|j, n| Ok(values[self.exposed_index[j * n_nodes + n]]))?;
        HarmonicCoeffs::from_vec(self.cavity.len(), self.lmax, CoeffRole::Extended, v)
    }

    /// Exposed nodes in ball-major order as `(ball, node)` pairs.
    pub fn exposed_nodes(&self) -> &[(usize, usize)] {
        &self.exposed_list
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
