use crate::error::{Error, Result};

/// Values and `r`-derivatives of one Bessel family at a fixed radius.
///
/// `values[ℓ] · e^{scale}` is the function, `derivs[ℓ] · e^{scale}` its
/// derivative in `r`. The scale is `κr` for the `i` family and `−κr` for the
/// `k` family.
#[derive(Debug, Clone, PartialEq)]
pub struct BesselFamily {
    pub values: Vec<f64>,
    pub derivs: Vec<f64>,
    pub scale: f64,
}

impl BesselFamily {
    /// Unscaled value; overflows for large `κr`, use only for moderate arguments.
    pub fn value(&self, ell: usize) -> f64 {
        self.values[ell] * self.scale.exp()
    }

    pub fn deriv(&self, ell: usize) -> f64 {
        self.derivs[ell] * self.scale.exp()
    }
}

fn check_args(kappa: f64, r: f64) -> Result<()> {
    if !(kappa > 0.0) {
        return Err(Error::NonPositiveArgument(kappa));
    }
    if !(r > 0.0) {
        return Err(Error::NonPositiveArgument(r));
    }
    Ok(())
}

/// `ρ_n = i_n(x)/i_{n−1}(x)` for `n = 1..=nmax`, stored at index `n` (index 0 is 1).
///
/// Downward recurrence `ρ_n = x / (2n+1 + x ρ_{n+1})` started far enough
/// above both `nmax` and `x` that the truncation error is damped below
/// round-off. At `x = 0` every ratio vanishes.
pub fn i_order_ratios(x: f64, nmax: usize) -> Vec<f64> {
    let mut rho = vec![0.0; nmax + 1];
    rho[0] = 1.0;
    if nmax == 0 || x == 0.0 {
        return rho;
    }
    let start = nmax.max(x.ceil() as usize) + 40;
    let mut next = 0.0;
    for n in (1..=start).rev() {
        let cur = x / ((2 * n + 1) as f64 + x * next);
        if n <= nmax {
            rho[n] = cur;
        }
        next = cur;
    }
    rho
}

/// `σ_n = k_n(x)/k_{n−1}(x)` for `n = 1..=nmax` at index `n`; index 0 holds
/// `k_0/k_{−1} = 1`. Upward recurrence, stable for the decaying family.
pub fn k_order_ratios(x: f64, nmax: usize) -> Vec<f64> {
    let mut sigma = vec![1.0; nmax + 1];
    for n in 1..=nmax {
        sigma[n] = 1.0 / sigma[n - 1] + (2 * n - 1) as f64 / x;
    }
    sigma
}

/// `e^{−x} i_0(x) = (1 − e^{−2x}) / (2x)`, equal to 1 at `x = 0`.
pub(crate) fn scaled_i0(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        -(-2.0 * x).exp_m1() / (2.0 * x)
    }
}

pub fn bessel_i_family(kappa: f64, lmax: usize, r: f64) -> Result<BesselFamily> {
    check_args(kappa, r)?;
    let x = kappa * r;
    let rho = i_order_ratios(x, lmax + 1);
    let mut values = Vec::with_capacity(lmax + 1);
    let mut derivs = Vec::with_capacity(lmax + 1);
    let mut v = scaled_i0(x);
    for ell in 0..=lmax {
        if ell > 0 {
            v *= rho[ell];
        }
        values.push(v);
        // i'_ℓ(x) = i_{ℓ+1}(x) + (ℓ/x) i_ℓ(x)
        derivs.push(kappa * v * (rho[ell + 1] + ell as f64 / x));
    }
    Ok(BesselFamily { values, derivs, scale: x })
}

pub fn bessel_k_family(kappa: f64, lmax: usize, r: f64) -> Result<BesselFamily> {
    check_args(kappa, r)?;
    let x = kappa * r;
    let sigma = k_order_ratios(x, lmax);
    let mut values = Vec::with_capacity(lmax + 1);
    let mut derivs = Vec::with_capacity(lmax + 1);
    let mut v = 1.0 / x;
    for ell in 0..=lmax {
        if ell > 0 {
            v *= sigma[ell];
        }
        values.push(v);
        // k'_ℓ(x) = −k_{ℓ−1}(x) − ((ℓ+1)/x) k_ℓ(x), with k_{−1} = k_0
        derivs.push(-kappa * v * (1.0 / sigma[ell] + (ell + 1) as f64 / x));
    }
    Ok(BesselFamily { values, derivs, scale: -x })
}

/// `i'_ℓ(r) / i_ℓ(r)` with the derivative in `r`.
pub fn ratio_ip_over_i(kappa: f64, ell: usize, r: f64) -> Result<f64> {
    check_args(kappa, r)?;
    let x = kappa * r;
    let rho = i_order_ratios(x, ell + 1);
    Ok(kappa * (rho[ell + 1] + ell as f64 / x))
}

/// `k'_ℓ(r) / k_ℓ(r)` with the derivative in `r`.
pub fn ratio_kp_over_k(kappa: f64, ell: usize, r: f64) -> Result<f64> {
    check_args(kappa, r)?;
    let x = kappa * r;
    let sigma = k_order_ratios(x, ell);
    Ok(-kappa * (1.0 / sigma[ell] + (ell + 1) as f64 / x))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Power series `i_n(x) = x^n Σ_k (x²/2)^k / (k! (2n+2k+1)!!)`.
    fn series_i(n: usize, x: f64) -> f64 {
        let mut dfact = 1.0;
        for k in 1..=n {
            dfact *= (2 * k + 1) as f64;
        }
        let mut term = x.powi(n as i32) / dfact;
        let mut sum = term;
        for k in 1..400 {
            term *= x * x / (2.0 * k as f64 * (2 * n + 2 * k + 1) as f64);
            sum += term;
            if term < 1e-18 * sum {
                break;
            }
        }
        sum
    }

    /// Closed form `k_n(x) = e^{−x}/x Σ_{k=0}^{n} (n+k)! / (k! (n−k)! (2x)^k)`.
    fn closed_k(n: usize, x: f64) -> f64 {
        let mut sum = 0.0;
        let mut coef = 1.0; // (n+k)!/(k!(n-k)!)
        for k in 0..=n {
            if k > 0 {
                coef *= ((n + k) * (n - k + 1)) as f64 / k as f64;
            }
            sum += coef / (2.0 * x).powi(k as i32);
        }
        (-x).exp() / x * sum
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
    }

    #[test]
    fn i0_closed_form() {
        let f = bessel_i_family(1.0, 0, 1.0).unwrap();
        assert!(rel(f.value(0), 1.1752011936438014) < 1e-14);
    }

    #[test]
    fn k0_closed_form() {
        let f = bessel_k_family(1.0, 0, 2.0).unwrap();
        assert!(rel(f.value(0), 0.06766764161830635) < 1e-14);
    }

    #[test]
    fn small_argument_law() {
        // i_2(κr) ≈ (κr)²/15 as r → 0
        let r = 1e-4;
        let f = bessel_i_family(1.0, 2, r).unwrap();
        assert!(rel(f.value(2), r * r / 15.0) < 1e-7);
    }

    #[test]
    fn matches_series_and_closed_form() {
        for &x in &[1e-3, 0.1, 0.5, 1.0, 3.7, 10.0, 25.0] {
            let fi = bessel_i_family(1.0, 25, x).unwrap();
            let fk = bessel_k_family(1.0, 25, x).unwrap();
            for n in 0..=25 {
                let want_i = series_i(n, x);
                if want_i > 1e-280 {
                    assert!(rel(fi.value(n), want_i) < 1e-12, "i_{n}({x})");
                }
                let want_k = closed_k(n, x);
                if want_k.is_finite() && want_k < 1e280 {
                    assert!(rel(fk.value(n), want_k) < 1e-12, "k_{n}({x})");
                }
            }
        }
    }

    #[test]
    fn k_values_positive_and_increasing_in_order_at_r10() {
        let f = bessel_k_family(1.0, 5, 10.0).unwrap();
        for n in 0..=5 {
            assert!(f.values[n] > 0.0);
            assert!(rel(f.value(n), closed_k(n, 10.0)) < 1e-12);
        }
        // e^{x} k_n grows with n at fixed x since k_{n+1} = k_{n−1} + (2n+1)/x k_n
        for n in 0..5 {
            assert!(f.values[n + 1] > f.values[n]);
        }
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let (kappa, r, ell) = (2.0, 5.0, 7);
        let h = 1e-5;
        let plus = bessel_i_family(kappa, ell, r + h).unwrap().value(ell);
        let minus = bessel_i_family(kappa, ell, r - h).unwrap().value(ell);
        let fd = (plus - minus) / (2.0 * h);
        let d = bessel_i_family(kappa, ell, r).unwrap().deriv(ell);
        assert!(rel(d, fd) < 1e-8, "{d} vs {fd}");
    }

    #[test]
    fn log_derivative_examples() {
        let ip = ratio_ip_over_i(1.0, 0, 1.0).unwrap();
        assert!((ip - (1.0 / 1.0_f64.tanh() - 1.0)).abs() < 1e-14);
        assert!((ip - 0.3130352854993313).abs() < 1e-12);
        let kp = ratio_kp_over_k(1.0, 0, 1.0).unwrap();
        assert!((kp + 2.0).abs() < 1e-15);
    }

    #[test]
    fn large_argument_stays_finite() {
        let ip = ratio_ip_over_i(500.0, 4, 3.0).unwrap();
        let kp = ratio_kp_over_k(500.0, 4, 3.0).unwrap();
        assert!(ip.is_finite() && kp.is_finite());
        // both tend to ±κ
        assert!((ip / 500.0 - 1.0).abs() < 1e-2);
        assert!((kp / 500.0 + 1.0).abs() < 1e-2);
        let fi = bessel_i_family(1e4, 25, 3.0).unwrap();
        let fk = bessel_k_family(1e4, 25, 3.0).unwrap();
        assert!(fi.values.iter().chain(&fi.derivs).chain(&fk.values).chain(&fk.derivs).all(|v| v.is_finite()));
    }

    #[test]
    fn rejects_non_positive_arguments() {
        assert!(bessel_i_family(1.0, 2, 0.0).is_err());
        assert!(bessel_k_family(0.0, 2, 1.0).is_err());
        assert!(ratio_ip_over_i(1.0, 2, -1.0).is_err());
        assert!(ratio_kp_over_k(-1.0, 2, 1.0).is_err());
    }
}
