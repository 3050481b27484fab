mod common;

use std::f64::consts::PI;

use common::*;
use ddlpb::angular::{basis_len, degree_of, eval_harmonics, lebedev_grid};
use ddlpb::cavity::{Ball, Cavity};
use ddlpb::geometry::Vec3;
use ddlpb::operators::{DiscreteOperatorSet, SolventParams};
use ddlpb::radial::{ratio_ip_over_i, RadialKernel};

fn legendre(ell: usize, t: f64) -> f64 {
    let (mut p0, mut p1) = (1.0, t);
    if ell == 0 {
        return p0;
    }
    for n in 1..ell {
        let p2 = ((2 * n + 1) as f64 * t * p1 - n as f64 * p0) / (n + 1) as f64;
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// Eigenvalue of the screened single layer on a sphere of radius `radius`,
/// by Funk–Hecke reduction and the substitution `t = 1 − u²`, which removes the
/// kernel singularity: `λ_ℓ = R/√2 ∫_0^√2 e^{−κR√2 u} P_ℓ(1 − u²) du`.
fn single_layer_by_quadrature(kappa: f64, radius: f64, ell: usize) -> f64 {
    let upper = 2f64.sqrt();
    let f = |u: f64| (-kappa * radius * 2f64.sqrt() * u).exp() * legendre(ell, 1.0 - u * u);
    let n = 40_000;
    let h = upper / n as f64;
    let mut sum = f(0.0) + f(upper);
    for k in 1..n {
        sum += if k % 2 == 1 { 4.0 } else { 2.0 } * f(k as f64 * h);
    }
    radius / 2f64.sqrt() * sum * h / 3.0
}

#[test]
fn single_layer_eigenvalues_match_quadrature() {
    let radius = 2.0;
    for kr in [0.01, 0.1, 0.5, 1.0, 5.0, 20.0, 50.0] {
        let kappa = kr / radius;
        let lam = RadialKernel::for_kappa(kappa).single_layer_eigenvalues(10, radius);
        for (ell, l) in lam.iter().enumerate() {
            let oracle = single_layer_by_quadrature(kappa, radius, ell);
            assert!((l - oracle).abs() <= 1e-8 * oracle.abs(), "kR {kr} l {ell}: {l} vs {oracle}");
        }
    }
    let lam = RadialKernel::for_kappa(0.0).single_layer_eigenvalues(10, radius);
    for (ell, l) in lam.iter().enumerate() {
        assert!((l - radius / (2 * ell + 1) as f64).abs() < 1e-15);
    }
}

#[test]
fn single_ball_coupling_is_diagonal() {
    let radius = 1.7;
    let kappa = 0.7;
    let lmax = 6;
    let cavity = Cavity::new(vec![Ball::new(Vec3::new(0.3, -1.0, 2.0), radius, 1.0)]).unwrap();
    let params = SolventParams::new(2.0, 78.54, kappa).unwrap();
    let ops = DiscreteOperatorSet::new(&cavity, &lebedev_grid(146).unwrap(), params, lmax).unwrap();
    let mut rng = rng(11);
    let xr = random_vec(&mut rng, ops.dim());
    let xe = random_vec(&mut rng, ops.dim());
    let (mut c1, mut c2) = (vec![0.0; ops.dim()], vec![0.0; ops.dim()]);
    ops.apply_c_into(&xr, &xe, &mut c1, &mut c2).unwrap();
    for p in 0..ops.dim() {
        let ell = degree_of(p);
        let lam = single_layer_by_quadrature(kappa, radius, ell);
        let want1 = 2.0 / 78.54 * ell as f64 / radius * lam * xr[p];
        let want2 = -ratio_ip_over_i(kappa, ell, radius).unwrap() * lam * xe[p];
        assert!((c1[p] - want1).abs() < 1e-9, "C1 p {p}");
        assert!((c2[p] - want2).abs() < 1e-9, "C2 p {p}");
    }
}

#[test]
fn single_ball_f0_for_centered_charge() {
    // ∂_n ψ0 = −q/(ε1 R²) uniformly, so only the (0,0) mode survives.
    let (radius, kappa, q, eps1, eps2) = (2.0, 0.104, 1.5, 1.0, 78.54);
    let cavity = Cavity::new(vec![Ball::new(Vec3::ZERO, radius, q)]).unwrap();
    let ops = DiscreteOperatorSet::new(&cavity, &lebedev_grid(50).unwrap(), SolventParams::new(eps1, eps2, kappa).unwrap(), 5)
        .unwrap();
    let f0 = ops.rhs_f0(&cavity.center_charges()).unwrap();
    let lam0 = single_layer_by_quadrature(kappa, radius, 0);
    let want = -(eps1 / eps2) * lam0 * (-q / (eps1 * radius * radius)) * (4.0 * PI).sqrt();
    assert!((f0.as_slice()[0] - want).abs() < 1e-9 * want.abs());
    assert!(f0.as_slice()[1..].iter().all(|v| v.abs() < 1e-12));
}

#[test]
fn doubling_eps2_halves_f0() {
    let mut rng = rng(12);
    let cavity = random_cavity(&mut rng, 5);
    let charges = cavity.center_charges();
    let grid = lebedev_grid(86).unwrap();
    let f = |eps2: f64| {
        let ops = DiscreteOperatorSet::new(&cavity, &grid, SolventParams::new(1.0, eps2, 0.2).unwrap(), 5).unwrap();
        ops.rhs_f0(&charges).unwrap().into_vec()
    };
    let (a, b) = (f(40.0), f(80.0));
    for (x, y) in a.iter().zip(&b) {
        assert!((x - 2.0 * y).abs() < 1e-13 * x.abs().max(1.0));
    }
}

#[test]
fn g0_translation_invariance() {
    let mut rng = rng(13);
    let cavity = random_cavity(&mut rng, 6);
    let charges = cavity.center_charges();
    let shift = Vec3::new(-4.0, 9.5, 0.25);
    let moved = cavity.map_centers(|c| c + shift);
    let grid = lebedev_grid(110).unwrap();
    let params = SolventParams::new(1.0, 78.54, 0.104).unwrap();
    let g = DiscreteOperatorSet::new(&cavity, &grid, params, 6).unwrap().rhs_g0(&charges).unwrap();
    let g_moved = DiscreteOperatorSet::new(&moved, &grid, params, 6)
        .unwrap()
        .rhs_g0(&moved_charges(&charges, |x| x + shift))
        .unwrap();
    assert!(max_abs_diff(g.as_slice(), g_moved.as_slice()) < 1e-12);
}

#[test]
fn constant_field_maps_to_exposed_projection() {
    let mut rng = rng(14);
    let cavity = random_cavity(&mut rng, 5);
    let grid = lebedev_grid(86).unwrap();
    let lmax = 5;
    let ops = DiscreteOperatorSet::new(&cavity, &grid, SolventParams::default(), lmax).unwrap();
    let nb = basis_len(lmax);
    let mut x = vec![0.0; ops.dim()];
    for j in 0..cavity.len() {
        x[j * nb] = (4.0 * PI).sqrt();
    }
    let mut out = vec![0.0; ops.dim()];
    ops.apply_a_into(&x, &mut out).unwrap();
    for j in 0..cavity.len() {
        let mut want = vec![0.0; nb];
        for n in 0..grid.len() {
            if ops.exposure().is_exposed(j, n) {
                let y = eval_harmonics(lmax, grid.points()[n]).unwrap();
                for p in 0..nb {
                    want[p] += grid.weights()[n] * y[p];
                }
            }
        }
        assert!(max_abs_diff(&out[j * nb..(j + 1) * nb], &want) < 1e-12);
    }
}

#[test]
fn vanishing_kappa_b_matches_a() {
    let mut rng = rng(15);
    let cavity = random_cavity(&mut rng, 6);
    let grid = lebedev_grid(86).unwrap();
    let ops = DiscreteOperatorSet::new(&cavity, &grid, SolventParams::new(1.0, 78.54, 1e-8).unwrap(), 6).unwrap();
    let x = random_vec(&mut rng, ops.dim());
    let (mut a, mut b) = (vec![0.0; ops.dim()], vec![0.0; ops.dim()]);
    ops.apply_a_into(&x, &mut a).unwrap();
    ops.apply_b_into(&x, &mut b).unwrap();
    assert!(max_abs_diff(&a, &b) < 1e-6);
}

#[test]
fn applications_are_linear() {
    let mut rng = rng(16);
    let cavity = random_cavity(&mut rng, 4);
    let ops =
        DiscreteOperatorSet::new(&cavity, &lebedev_grid(50).unwrap(), SolventParams::new(1.0, 78.54, 0.5).unwrap(), 4).unwrap();
    let d = ops.dim();
    let (u, v) = (random_vec(&mut rng, d), random_vec(&mut rng, d));
    let (alpha, beta) = (0.7, -2.3);
    let comb: Vec<f64> = u.iter().zip(&v).map(|(a, b)| alpha * a + beta * b).collect();
    let apply = |x: &[f64]| {
        let (mut a, mut b, mut c1, mut c2) = (vec![0.0; d], vec![0.0; d], vec![0.0; d], vec![0.0; d]);
        ops.apply_a_into(x, &mut a).unwrap();
        ops.apply_b_into(x, &mut b).unwrap();
        ops.apply_c_into(x, x, &mut c1, &mut c2).unwrap();
        [a, b, c1, c2]
    };
    let (fu, fv, fc) = (apply(&u), apply(&v), apply(&comb));
    for k in 0..4 {
        let lin: Vec<f64> = fu[k].iter().zip(&fv[k]).map(|(a, b)| alpha * a + beta * b).collect();
        assert!(max_abs_diff(&lin, &fc[k]) < 1e-12);
    }
    let zero = vec![0.0; d];
    assert!(apply(&zero).iter().all(|o| o.iter().all(|v| *v == 0.0)));
}

#[test]
fn coupling_is_finite_for_extreme_screening() {
    let mut rng = rng(17);
    let cavity = random_cavity(&mut rng, 4);
    let grid = lebedev_grid(50).unwrap();
    for kappa in [1e-6, 1e2, 1e4] {
        let ops = DiscreteOperatorSet::new(&cavity, &grid, SolventParams::new(1.0, 78.54, kappa).unwrap(), 5).unwrap();
        let x = random_vec(&mut rng, ops.dim());
        let (mut c1, mut c2) = (vec![0.0; ops.dim()], vec![0.0; ops.dim()]);
        ops.apply_c_into(&x, &x, &mut c1, &mut c2).unwrap();
        assert!(c1.iter().chain(&c2).all(|v| v.is_finite()), "kappa {kappa}");
    }
}

#[test]
fn coupling_is_continuous_in_kappa() {
    let mut rng = rng(18);
    let cavity = random_cavity(&mut rng, 4);
    let charges = cavity.center_charges();
    let grid = lebedev_grid(50).unwrap();
    let f0 = |kappa: f64| {
        let ops = DiscreteOperatorSet::new(&cavity, &grid, SolventParams::new(1.0, 78.54, kappa).unwrap(), 5).unwrap();
        ops.rhs_f0(&charges).unwrap().into_vec()
    };
    let (a, b) = (f0(0.0), f0(1e-9));
    assert!(max_abs_diff(&a, &b) < 1e-7 * max_abs(&a));
}

#[test]
fn fully_exposed_ball_in_dilute_cluster_has_identity_p() {
    let cavity = Cavity::new(vec![
        Ball::new(Vec3::ZERO, 1.5, 1.0),
        Ball::new(Vec3::new(10.0, 0.0, 0.0), 1.5, -1.0),
    ])
    .unwrap();
    let ops = DiscreteOperatorSet::new(&cavity, &lebedev_grid(194).unwrap(), SolventParams::default(), 11).unwrap();
    for j in 0..2 {
        let p = ops.p_matrix(j);
        let nb = basis_len(11);
        for a in 0..nb {
            for b in 0..nb {
                let want = if a == b { 1.0 } else { 0.0 };
                assert!((p[a * nb + b] - want).abs() < 1e-11);
            }
        }
    }
}
