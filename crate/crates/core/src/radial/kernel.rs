use super::bessel::{i_order_ratios, k_order_ratios, scaled_i0};

/// Radial behaviour of the single-ball solutions for one operator family.
///
/// `Laplace` is the harmonic case (`r^ℓ` inside, `r^{−ℓ−1}` outside);
/// `Screened` uses `i_ℓ(κr)` inside and `k_ℓ(κr)` outside. The Laplace variant
/// is also the exact `κ → 0` limit of the screened one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RadialKernel {
    Laplace,
    Screened { kappa: f64 },
}

impl RadialKernel {
    /// Screened kernel for `kappa > 0`, Laplace kernel for `kappa == 0`.
    pub fn for_kappa(kappa: f64) -> Self {
        if kappa > 0.0 {
            RadialKernel::Screened { kappa }
        } else {
            RadialKernel::Laplace
        }
    }

    /// `u_ℓ(r) / u_ℓ(R)` for `ℓ = 0..=lmax`, interior solution, `0 ≤ r ≤ R`.
    pub fn interior_ratios(&self, lmax: usize, r: f64, radius: f64, out: &mut [f64]) {
        match *self {
            RadialKernel::Laplace => {
                let t = r / radius;
                let mut v = 1.0;
                for o in out.iter_mut().take(lmax + 1) {
                    *o = v;
                    v *= t;
                }
            }
            RadialKernel::Screened { kappa } => {
                let (xr, xb) = (kappa * r, kappa * radius);
                let rho_r = i_order_ratios(xr, lmax);
                let rho_b = i_order_ratios(xb, lmax);
                let mut v = scaled_i0(xr) / scaled_i0(xb) * (xr - xb).exp();
                for ell in 0..=lmax {
                    if ell > 0 {
                        v *= rho_r[ell] / rho_b[ell];
                    }
                    out[ell] = v;
                }
            }
        }
    }

    /// `u'_ℓ(R) / u_ℓ(R)` for the interior solution (derivative in `r`).
    pub fn interior_log_derivs(&self, lmax: usize, radius: f64) -> Vec<f64> {
        match *self {
            RadialKernel::Laplace => (0..=lmax).map(|l| l as f64 / radius).collect(),
            RadialKernel::Screened { kappa } => {
                let x = kappa * radius;
                let rho = i_order_ratios(x, lmax + 1);
                (0..=lmax).map(|l| kappa * (rho[l + 1] + l as f64 / x)).collect()
            }
        }
    }

    /// `v_ℓ(r) / v_ℓ(R)` for the exterior (decaying) solution, `r ≥ R`.
    pub fn exterior_ratios(&self, lmax: usize, r: f64, radius: f64, out: &mut [f64]) {
        match *self {
            RadialKernel::Laplace => {
                let t = radius / r;
                let mut v = t;
                for o in out.iter_mut().take(lmax + 1) {
                    *o = v;
                    v *= t;
                }
            }
            RadialKernel::Screened { kappa } => {
                let (xr, xb) = (kappa * r, kappa * radius);
                let sig_r = k_order_ratios(xr, lmax);
                let sig_b = k_order_ratios(xb, lmax);
                let mut v = (xb - xr).exp() * xb / xr;
                for ell in 0..=lmax {
                    if ell > 0 {
                        v *= sig_r[ell] / sig_b[ell];
                    }
                    out[ell] = v;
                }
            }
        }
    }

    /// Eigenvalue of the single-layer operator of a sphere of radius `R` on
    /// `Y_ℓ^m`, i.e. `(u'_ℓ/u_ℓ − v'_ℓ/v_ℓ)^{−1}` evaluated at `R`.
    ///
    /// Equals `κR² i_ℓ(κR) k_ℓ(κR)` by the Wronskian and `R/(2ℓ+1)` for Laplace.
    pub fn single_layer_eigenvalues(&self, lmax: usize, radius: f64) -> Vec<f64> {
        match *self {
            RadialKernel::Laplace => (0..=lmax).map(|l| radius / (2 * l + 1) as f64).collect(),
            RadialKernel::Screened { kappa } => {
                let x = kappa * radius;
                let rho = i_order_ratios(x, lmax + 1);
                let sigma = k_order_ratios(x, lmax);
                (0..=lmax)
                    .map(|l| {
                        let ip = rho[l + 1] + l as f64 / x;
                        let km = 1.0 / sigma[l] + (l + 1) as f64 / x;
                        1.0 / (kappa * (ip + km))
                    })
                    .collect()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radial::{bessel_i_family, bessel_k_family};

    #[test]
    fn screened_ratios_match_families() {
        let kappa = 0.7;
        let (r, radius) = (1.3, 2.1);
        let lmax = 12;
        let fi_r = bessel_i_family(kappa, lmax, r).unwrap();
        let fi_b = bessel_i_family(kappa, lmax, radius).unwrap();
        let mut out = vec![0.0; lmax + 1];
        RadialKernel::Screened { kappa }.interior_ratios(lmax, r, radius, &mut out);
        for l in 0..=lmax {
            let want = fi_r.value(l) / fi_b.value(l);
            assert!((out[l] - want).abs() < 1e-13 * want.abs(), "l={l}");
        }
        let fk_r = bessel_k_family(kappa, lmax, 3.4).unwrap();
        let fk_b = bessel_k_family(kappa, lmax, radius).unwrap();
        RadialKernel::Screened { kappa }.exterior_ratios(lmax, 3.4, radius, &mut out);
        for l in 0..=lmax {
            let want = fk_r.value(l) / fk_b.value(l);
            assert!((out[l] - want).abs() < 1e-13 * want.abs(), "l={l}");
        }
    }

    #[test]
    fn single_layer_eigenvalue_is_wronskian_product() {
        let kappa = 0.9;
        let radius = 1.7;
        let lmax = 10;
        let fi = bessel_i_family(kappa, lmax, radius).unwrap();
        let fk = bessel_k_family(kappa, lmax, radius).unwrap();
        let eig = RadialKernel::Screened { kappa }.single_layer_eigenvalues(lmax, radius);
        for l in 0..=lmax {
            // scales cancel in the product
            let want = kappa * radius * radius * fi.values[l] * fk.values[l];
            assert!((eig[l] - want).abs() < 1e-13 * want, "l={l}");
        }
    }

    #[test]
    fn screened_tends_to_laplace() {
        let lmax = 8;
        let radius = 1.8;
        let s = RadialKernel::Screened { kappa: 1e-7 };
        let l = RadialKernel::Laplace;
        let mut a = vec![0.0; lmax + 1];
        let mut b = vec![0.0; lmax + 1];
        s.interior_ratios(lmax, 0.9, radius, &mut a);
        l.interior_ratios(lmax, 0.9, radius, &mut b);
        for k in 0..=lmax {
            assert!((a[k] - b[k]).abs() < 1e-6);
        }
        s.exterior_ratios(lmax, 2.9, radius, &mut a);
        l.exterior_ratios(lmax, 2.9, radius, &mut b);
        for k in 0..=lmax {
            assert!((a[k] - b[k]).abs() < 1e-6 * b[k].max(1.0));
        }
        let ea = s.single_layer_eigenvalues(lmax, radius);
        let eb = l.single_layer_eigenvalues(lmax, radius);
        let da = s.interior_log_derivs(lmax, radius);
        let db = l.interior_log_derivs(lmax, radius);
        for k in 0..=lmax {
            assert!((ea[k] - eb[k]).abs() < 1e-6);
            assert!((da[k] - db[k]).abs() < 1e-6);
        }
    }

    #[test]
    fn interior_ratio_at_center() {
        let mut out = vec![0.0; 4];
        RadialKernel::Screened { kappa: 0.5 }.interior_ratios(3, 0.0, 2.0, &mut out);
        // i_0(0) = 1, i_0(1) = sinh(1)
        assert!((out[0] - 1.0 / 1.0_f64.sinh()).abs() < 1e-14);
        assert!(out[1..].iter().all(|v| *v == 0.0));
    }

    #[test]
    fn huge_kappa_is_finite() {
        let s = RadialKernel::Screened { kappa: 1e4 };
        let mut out = vec![0.0; 11];
        s.interior_ratios(10, 1.0, 2.0, &mut out);
        assert!(out.iter().all(|v| v.is_finite()));
        s.exterior_ratios(10, 3.0, 2.0, &mut out);
        assert!(out.iter().all(|v| v.is_finite()));
        assert!(s.single_layer_eigenvalues(10, 2.0).iter().all(|v| v.is_finite() && *v > 0.0));
    }
}
