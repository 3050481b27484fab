use super::discrete::DiscreteOperatorSet;
use crate::angular::{degree_of, eval_harmonics};
use crate::error::{Error, Result};

/// Default cap on `M (ℓmax+1)²` for dense assembly.
pub const DEFAULT_DENSE_CAP: usize = 20_000;

/// Explicit row-major matrices of the four coupling operators.
///
/// Assembled entry by entry from the defining quadrature sums, independently
/// of the matrix-free code paths, so the two can be checked against each other.
#[derive(Debug, Clone)]
pub struct DenseOperators {
    pub dim: usize,
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub c1: Vec<f64>,
    pub c2: Vec<f64>,
}

impl DenseOperators {
    pub fn matvec(mat: &[f64], x: &[f64]) -> Vec<f64> {
        let n = x.len();
        mat.chunks_exact(n).map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }
}

impl DiscreteOperatorSet {
    pub fn assemble_dense(&self) -> Result<DenseOperators> {
        self.assemble_dense_capped(DEFAULT_DENSE_CAP)
    }

    pub fn assemble_dense_capped(&self, cap: usize) -> Result<DenseOperators> {
        let dim = self.dim();
        if dim > cap {
            return Err(Error::ProblemTooLarge { dim, cap });
        }
        let nb = self.n_basis();
        let lmax = self.lmax();
        let m = self.cavity().len();
        let balls = self.cavity().balls();
        let grid = self.grid();
        let exp = self.exposure();
        let kernel = self.kernel();
        let params = self.params();

        let mut a = vec![0.0; dim * dim];
        let mut b = vec![0.0; dim * dim];
        for k in 0..dim {
            a[k * dim + k] = 1.0;
            b[k * dim + k] = 1.0;
        }
        let mut ra = vec![0.0; lmax + 1];
        let mut rb = vec![0.0; lmax + 1];
        for j in 0..m {
            for (n, s) in grid.points().iter().enumerate() {
                let ys = eval_harmonics(lmax, *s)?;
                let w = grid.weights()[n];
                for e in exp.neighbors(j, n) {
                    let yl = eval_harmonics(lmax, e.s)?;
                    let ri = balls[e.ball].radius;
                    crate::radial::RadialKernel::Laplace.interior_ratios(lmax, e.r, ri, &mut ra);
                    kernel.interior_ratios(lmax, e.r, ri, &mut rb);
                    for p in 0..nb {
                        let row = (j * nb + p) * dim + e.ball * nb;
                        for q in 0..nb {
                            let base = w * ys[p] * e.weight * yl[q];
                            a[row + q] -= base * ra[degree_of(q)];
                            b[row + q] -= base * rb[degree_of(q)];
                        }
                    }
                }
            }
        }

        // S: single-layer matrix, dim × dim, mapping densities to projected fields.
        let mut s_mat = vec![0.0; dim * dim];
        for j in 0..m {
            for (n, sn) in grid.points().iter().enumerate() {
                if !exp.is_exposed(j, n) {
                    continue;
                }
                let ys = eval_harmonics(lmax, *sn)?;
                let w = grid.weights()[n];
                let x = balls[j].center + *sn * balls[j].radius;
                for (i, bi) in balls.iter().enumerate() {
                    let d = x - bi.center;
                    let r = d.norm();
                    let yl = eval_harmonics(lmax, d * (1.0 / r))?;
                    let mut kr = vec![0.0; lmax + 1];
                    kernel.exterior_ratios(lmax, r, bi.radius, &mut kr);
                    let eig = kernel.single_layer_eigenvalues(lmax, bi.radius);
                    for p in 0..nb {
                        let row = (j * nb + p) * dim + i * nb;
                        for q in 0..nb {
                            let l = degree_of(q);
                            s_mat[row + q] += w * ys[p] * eig[l] * kr[l] * yl[q];
                        }
                    }
                }
            }
        }

        // Block-diagonal P·diag(factor) for both Neumann traces.
        let mut pd1 = vec![0.0; dim * dim];
        let mut pd2 = vec![0.0; dim * dim];
        for (i, bi) in balls.iter().enumerate() {
            let mut pm = vec![0.0; nb * nb];
            for (n, sn) in grid.points().iter().enumerate() {
                if !exp.is_exposed(i, n) {
                    continue;
                }
                let y = eval_harmonics(lmax, *sn)?;
                for p in 0..nb {
                    for q in 0..nb {
                        pm[p * nb + q] += grid.weights()[n] * y[p] * y[q];
                    }
                }
            }
            let ip = kernel.interior_log_derivs(lmax, bi.radius);
            for p in 0..nb {
                for q in 0..nb {
                    let l = degree_of(q);
                    let at = (i * nb + p) * dim + i * nb + q;
                    pd1[at] = pm[p * nb + q] * l as f64 / bi.radius;
                    pd2[at] = pm[p * nb + q] * ip[l];
                }
            }
        }
        let ratio = params.eps1 / params.eps2;
        let mut c1 = matmul(&s_mat, &pd1, dim);
        c1.iter_mut().for_each(|v| *v *= ratio);
        let mut c2 = matmul(&s_mat, &pd2, dim);
        c2.iter_mut().for_each(|v| *v = -*v);
        Ok(DenseOperators { dim, a, b, c1, c2 })
    }
}

fn matmul(x: &[f64], y: &[f64], n: usize) -> Vec<f64> {
    let mut out = vec![0.0; n * n];
    for i in 0..n {
        for k in 0..n {
            let v = x[i * n + k];
            if v == 0.0 {
                continue;
            }
            let yr = &y[k * n..(k + 1) * n];
            for (o, w) in out[i * n..(i + 1) * n].iter_mut().zip(yr) {
                *o += v * w;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angular::lebedev_grid;
    use crate::cavity::{Ball, Cavity};
    use crate::geometry::Vec3;
    use crate::operators::SolventParams;

    #[test]
    fn single_ball_dense_identity() {
        let cav = Cavity::new(vec![Ball::new(Vec3::ZERO, 1.5, 1.0)]).unwrap();
        let ops = DiscreteOperatorSet::new(&cav, &lebedev_grid(26).unwrap(), SolventParams::default(), 3).unwrap();
        let d = ops.assemble_dense().unwrap();
        for i in 0..d.dim {
            for k in 0..d.dim {
                let want = if i == k { 1.0 } else { 0.0 };
                assert_eq!(d.a[i * d.dim + k], want);
                assert_eq!(d.b[i * d.dim + k], want);
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let cav = Cavity::new(vec![Ball::new(Vec3::ZERO, 1.5, 1.0)]).unwrap();
        let ops = DiscreteOperatorSet::new(&cav, &lebedev_grid(26).unwrap(), SolventParams::default(), 3).unwrap();
        assert!(matches!(ops.assemble_dense_capped(10), Err(Error::ProblemTooLarge { dim: 16, cap: 10 })));
    }
}
