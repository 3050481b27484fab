mod common;

use common::*;
use ddlpb::angular::TABLE_PRESETS;
use ddlpb::cavity::PointCharge;
use ddlpb::cli::builtin_case;
use ddlpb::geometry::Vec3;
use ddlpb::operators::SolventParams;
use ddlpb::oracle::{born_energy_screened, kirkwood_energy, KirkwoodProblem};
use ddlpb::solver::{convergence_sweep, solve, SolveConfig, SolveMode};
use ddlpb::units::COULOMB_KCAL_MOL;
use ddlpb::Error;

fn config(lmax: usize, n_leb: usize, mode: SolveMode) -> SolveConfig {
    SolveConfig { lmax, n_leb, mode, ..SolveConfig::default() }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

#[test]
fn born_is_exact_at_every_degree() {
    let (cavity, charges) = builtin_case("born").unwrap();
    let exact = born_energy_screened(1.0, 2.0, 1.0, 78.54, 0.0).unwrap();
    assert!((exact + 81.9589).abs() < 5e-5);
    for (lmax, n_leb) in [(0, 6), (3, 26), (11, 194)] {
        for mode in [SolveMode::Outer, SolveMode::Global] {
            let e = solve(&cavity, &charges, &SolventParams::new(1.0, 78.54, 0.0).unwrap(), &config(lmax, n_leb, mode))
                .unwrap()
                .energy;
            assert!(rel(e, exact) < 1e-10, "lmax {lmax} {mode:?}: {e}");
        }
    }
}

#[test]
fn screened_born_in_outer_mode_meets_the_solve_tolerance() {
    let (cavity, charges) = builtin_case("born").unwrap();
    let params = SolventParams::new(1.0, 78.54, 0.104).unwrap();
    let e = solve(&cavity, &charges, &params, &config(3, 26, SolveMode::Outer)).unwrap().energy;
    assert!(rel(e, born_energy_screened(1.0, 2.0, 1.0, 78.54, 0.104).unwrap()) < 1e-6);
}

#[test]
fn finest_table_row_is_close_to_the_series() {
    let mut report = Vec::new();
    let mut ok = true;
    for case in ["kirkwood1", "kirkwood2", "kirkwood3", "kirkwood4", "kirkwood5"] {
        let (cavity, charges) = builtin_case(case).unwrap();
        let exact = kirkwood_energy(&KirkwoodProblem::new(2.0, charges.clone(), 1.0, 78.54)).unwrap();
        let e = solve(&cavity, &charges, &SolventParams::new(1.0, 78.54, 0.0).unwrap(), &config(11, 194, SolveMode::Global))
            .unwrap()
            .energy;
        let r = rel(e, exact);
        ok &= r < 2e-5;
        report.push(format!("{case}: {e:.4} vs {exact:.4} (RE {r:.3e})"));
    }
    assert!(ok, "{}", report.join("; "));
}

#[test]
fn vanishing_kappa_matches_laplace_path() {
    for case in ["kirkwood2", "formaldehyde"] {
        let (cavity, charges) = builtin_case(case).unwrap();
        let cfg = SolveConfig { gmres_tol: 1e-12, ..config(7, 86, SolveMode::Global) };
        let e0 = solve(&cavity, &charges, &SolventParams::new(1.0, 78.54, 0.0).unwrap(), &cfg).unwrap().energy;
        let e1 = solve(&cavity, &charges, &SolventParams::new(1.0, 78.54, 1e-6).unwrap(), &cfg).unwrap().energy;
        assert!(rel(e1, e0) < 1e-6, "{case}: {e1} vs {e0}");
    }
}

#[test]
fn large_kappa_approaches_conductor_limit() {
    let (cavity, charges) = builtin_case("born").unwrap();
    let limit = -COULOMB_KCAL_MOL / (2.0 * 2.0);
    let mut gaps = Vec::new();
    let mut energies = Vec::new();
    for kappa in [1.0, 10.0, 100.0] {
        let params = SolventParams::new(1.0, 78.54, kappa).unwrap();
        let e = solve(&cavity, &charges, &params, &config(3, 26, SolveMode::Global)).unwrap().energy;
        energies.push(e);
        gaps.push(e - limit);
    }
    assert!(energies.windows(2).all(|w| w[1] < w[0]));
    assert!(gaps.iter().all(|g| *g > 0.0));
    assert!(gaps.windows(2).all(|w| w[1] < w[0]));
}

#[test]
fn rigid_motion_invariance() {
    let mut rng = rng(21);
    for (m, kappa) in [(3, 0.0), (6, 0.104), (9, 0.5)] {
        let cavity = random_cavity(&mut rng, m);
        let charges = cavity.center_charges();
        let rot = random_rotation(&mut rng);
        let shift = Vec3::new(1.0, -2.0, 3.5);
        let motion = |x: Vec3| rot.apply(x) + shift;
        let params = SolventParams::new(1.0, 78.54, kappa).unwrap();
        let grid = ddlpb::angular::lebedev_grid(50).unwrap();
        let ops = ddlpb::operators::DiscreteOperatorSet::new(&cavity, &grid, params, 5).unwrap();
        let moved_ops =
            ddlpb::operators::DiscreteOperatorSet::new(&cavity.map_centers(motion), &grid.rotated(&rot), params, 5).unwrap();
        for mode in [SolveMode::Outer, SolveMode::Global] {
            let cfg = config(5, 50, mode);
            let e0 = ddlpb::solver::solve_with_operators(&ops, &charges, &cfg).unwrap().energy;
            let e1 = ddlpb::solver::solve_with_operators(&moved_ops, &moved_charges(&charges, motion), &cfg).unwrap().energy;
            assert!(rel(e1, e0) < 1e-8, "m {m} {mode:?}: {e1} vs {e0}");
        }
    }
}

#[test]
fn report_satisfies_its_stopping_rule() {
    let (cavity, charges) = builtin_case("formaldehyde").unwrap();
    let params = SolventParams::new(1.0, 78.54, 0.104).unwrap();
    let outer = solve(&cavity, &charges, &params, &config(7, 86, SolveMode::Outer)).unwrap();
    assert!(*outer.increments.last().unwrap() < 1e-4);
    assert_eq!(outer.energy_history.len(), outer.outer_iterations);
    assert_eq!(*outer.energy_history.last().unwrap(), outer.energy);
    let global = solve(&cavity, &charges, &params, &config(7, 86, SolveMode::Global)).unwrap();
    assert!(global.final_residual < 1e-8);
    assert!((outer.energy - global.energy).abs() <= (10.0 * 1e-4 * global.energy.abs()).max(1e-6));
    assert!(global.surface.iter().all(|s| s.psi_r.is_finite()));
}

#[test]
fn sweep_keeps_order_and_marks_failed_rows() {
    let (cavity, charges) = builtin_case("kirkwood1").unwrap();
    let params = SolventParams::new(1.0, 78.54, 0.0).unwrap();
    let (ls, ns): (Vec<usize>, Vec<usize>) = TABLE_PRESETS.iter().copied().unzip();
    let rows = convergence_sweep(&cavity, &charges, &params, &ls, &ns, &SolveConfig::default()).unwrap();
    let reference = [-349.5532, -349.4132, -349.5064, -349.5043, -349.5052];
    for (row, (want, (l, n))) in rows.iter().zip(reference.iter().zip(TABLE_PRESETS)) {
        assert_eq!((row.lmax, row.n_leb), (l, n));
        assert!(rel(row.energy.unwrap(), *want) < 1e-4);
    }
    let rows = convergence_sweep(&cavity, &charges, &params, &[3, 5], &[27, 50], &SolveConfig::default()).unwrap();
    assert_eq!(rows.len(), 2);
    assert!(rows[0].energy.is_none() && rows[0].error.is_some());
    assert!(rows[1].energy.is_some());
    let single = convergence_sweep(&cavity, &charges, &params, &[3], &[26], &SolveConfig::default()).unwrap();
    assert_eq!(single.len(), 1);
}

#[test]
fn charge_outside_cavity_is_rejected() {
    let (cavity, _) = builtin_case("born").unwrap();
    let stray = [PointCharge::new(Vec3::new(5.0, 0.0, 0.0), 1.0)];
    let res = solve(&cavity, &stray, &SolventParams::default(), &SolveConfig::default());
    assert!(matches!(res, Err(Error::ChargeOutsideCavity { .. })));
}

#[test]
fn zero_charges_give_zero_energy() {
    let (cavity, charges) = builtin_case("formaldehyde").unwrap();
    let neutral: Vec<PointCharge> = charges.iter().map(|c| PointCharge::new(c.position, 0.0)).collect();
    let report = solve(&cavity, &neutral, &SolventParams::default(), &config(5, 50, SolveMode::Global)).unwrap();
    assert_eq!(report.energy, 0.0);
}
