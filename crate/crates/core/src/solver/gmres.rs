use crate::error::Result;

/// Outcome of one restarted GMRES run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GmresOutcome {
    pub iterations: usize,
    /// Final residual norm relative to `‖b‖`.
    pub relative_residual: f64,
    pub converged: bool,
}

/// Restarted GMRES with modified Gram–Schmidt and Givens rotations.
///
/// Solves `op(x) = b` starting from the contents of `x`; stops when the
/// residual drops below `tol · ‖b‖` or after `max_iter` Krylov steps.
pub fn gmres<F>(mut op: F, b: &[f64], x: &mut [f64], tol: f64, restart: usize, max_iter: usize) -> Result<GmresOutcome>
where
    F: FnMut(&[f64], &mut [f64]) -> Result<()>,
{
    let n = b.len();
    let restart = restart.max(1).min(n.max(1));
    let bnorm = norm(b);
    if bnorm == 0.0 {
        x.fill(0.0);
        return Ok(GmresOutcome { iterations: 0, relative_residual: 0.0, converged: true });
    }
    let target = tol * bnorm;
    let mut w = vec![0.0; n];
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(restart + 1);
    let mut h = vec![vec![0.0; restart]; restart + 1];
    let mut cs = vec![0.0; restart];
    let mut sn = vec![0.0; restart];
    let mut g = vec![0.0; restart + 1];
    let mut iters = 0;

    loop {
        op(x, &mut w)?;
        let mut r: Vec<f64> = b.iter().zip(&w).map(|(bi, wi)| bi - wi).collect();
        let beta = norm(&r);
        if beta <= target {
            return Ok(GmresOutcome { iterations: iters, relative_residual: beta / bnorm, converged: true });
        }
        if iters >= max_iter {
            return Ok(GmresOutcome { iterations: iters, relative_residual: beta / bnorm, converged: false });
        }
        r.iter_mut().for_each(|v| *v /= beta);
        basis.clear();
        basis.push(r);
        g.fill(0.0);
        g[0] = beta;
        let mut k_used = 0;

        for k in 0..restart {
            op(&basis[k], &mut w)?;
            iters += 1;
            for (i, v) in basis.iter().enumerate() {
                let hik = dot(&w, v);
                h[i][k] = hik;
                w.iter_mut().zip(v).for_each(|(wj, vj)| *wj -= hik * vj);
            }
            let hn = norm(&w);
            h[k + 1][k] = hn;
            for i in 0..k {
                let t = cs[i] * h[i][k] + sn[i] * h[i + 1][k];
                h[i + 1][k] = -sn[i] * h[i][k] + cs[i] * h[i + 1][k];
                h[i][k] = t;
            }
            let d = h[k][k].hypot(h[k + 1][k]);
            if d == 0.0 {
                cs[k] = 1.0;
                sn[k] = 0.0;
            } else {
                cs[k] = h[k][k] / d;
                sn[k] = h[k + 1][k] / d;
            }
            h[k][k] = d;
            h[k + 1][k] = 0.0;
            g[k + 1] = -sn[k] * g[k];
            g[k] *= cs[k];
            let resid = g[k + 1].abs();
            k_used = k + 1;
            if resid <= target || hn == 0.0 || iters >= max_iter {
                break;
            }
            basis.push(w.iter().map(|v| v / hn).collect());
        }
        // back substitution on the k_used × k_used triangle
        let mut y = vec![0.0; k_used];
        for i in (0..k_used).rev() {
            let mut s = g[i];
            for j in i + 1..k_used {
                s -= h[i][j] * y[j];
            }
            y[i] = if h[i][i] != 0.0 { s / h[i][i] } else { 0.0 };
        }
        for (yi, v) in y.iter().zip(&basis) {
            x.iter_mut().zip(v).for_each(|(xj, vj)| *xj += yi * vj);
        }
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn apply(m: &[Vec<f64>], x: &[f64], y: &mut [f64]) -> Result<()> {
        for (yi, row) in y.iter_mut().zip(m) {
            *yi = dot(row, x);
        }
        Ok(())
    }

    #[test]
    fn solves_nonsymmetric_system() {
        let n = 40;
        let m: Vec<Vec<f64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { 4.0 } else { ((i * 7 + j * 3) % 11) as f64 / 40.0 - 0.1 }).collect())
            .collect();
        let xt: Vec<f64> = (0..n).map(|i| (i as f64).cos()).collect();
        let mut b = vec![0.0; n];
        apply(&m, &xt, &mut b).unwrap();
        let mut x = vec![0.0; n];
        let out = gmres(|v, w| apply(&m, v, w), &b, &mut x, 1e-12, 5, 1000).unwrap();
        assert!(out.converged);
        for (a, e) in x.iter().zip(&xt) {
            assert!((a - e).abs() < 1e-10);
        }
    }

    #[test]
    fn zero_rhs() {
        let mut x = vec![1.0; 3];
        let out = gmres(|v, w| { w.copy_from_slice(v); Ok(()) }, &[0.0; 3], &mut x, 1e-8, 30, 10).unwrap();
        assert_eq!(out.iterations, 0);
        assert_eq!(x, vec![0.0; 3]);
    }

    #[test]
    fn iteration_cap_reports_failure() {
        let n = 50;
        let m: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| if i == j { (i + 1) as f64 } else { 0.0 }).collect()).collect();
        let b = vec![1.0; n];
        let mut x = vec![0.0; n];
        let out = gmres(|v, w| apply(&m, v, w), &b, &mut x, 1e-14, 3, 6).unwrap();
        assert!(!out.converged);
        assert!(out.iterations <= 6);
    }
}
