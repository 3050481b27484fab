mod common;

use std::collections::BTreeSet;

use common::*;
use ddlpb::angular::lebedev_grid;
use ddlpb::cavity::{build_exposure, parse_pqr_str, Cavity, ExposureCache, INTERIOR_TOLERANCE};
use ddlpb::geometry::Vec3;
use rand::Rng;

fn node(cavity: &Cavity, grid_point: Vec3, j: usize) -> Vec3 {
    let b = cavity.balls()[j];
    b.center + grid_point * b.radius
}

#[test]
fn brute_force_recheck() {
    let mut rng = rng(1);
    let grid = lebedev_grid(50).unwrap();
    for m in [1, 2, 5, 9, 14, 20] {
        let cavity = random_cavity(&mut rng, m);
        let cache = build_exposure(&cavity, &grid);
        for j in 0..m {
            for (n, s) in grid.points().iter().enumerate() {
                let x = node(&cavity, *s, j);
                let inside: Vec<usize> = (0..m)
                    .filter(|&i| i != j)
                    .filter(|&i| {
                        let b = cavity.balls()[i];
                        (x - b.center).norm() < b.radius - INTERIOR_TOLERANCE
                    })
                    .collect();
                let cached: Vec<usize> = cache.neighbors(j, n).iter().map(|e| e.ball).collect();
                assert_eq!(cached, inside, "ball {j} node {n}");
                assert_eq!(cache.is_exposed(j, n), inside.is_empty());
                for e in cache.neighbors(j, n) {
                    let b = cavity.balls()[e.ball];
                    assert!((e.weight - 1.0 / inside.len() as f64).abs() < 1e-15);
                    assert!((b.center + e.s * e.r - x).norm() < 1e-10);
                    assert!((e.s.norm() - 1.0).abs() < 1e-12);
                }
            }
        }
    }
}

fn assert_same_structure(a: &ExposureCache, b: &ExposureCache, map_s: impl Fn(Vec3) -> Vec3) {
    assert_eq!(a.n_balls(), b.n_balls());
    for j in 0..a.n_balls() {
        for n in 0..a.n_nodes() {
            assert_eq!(a.is_exposed(j, n), b.is_exposed(j, n));
            let (na, nb) = (a.neighbors(j, n), b.neighbors(j, n));
            assert_eq!(na.len(), nb.len());
            for (ea, eb) in na.iter().zip(nb) {
                assert_eq!(ea.ball, eb.ball);
                assert_eq!(ea.weight, eb.weight);
                assert!((ea.r - eb.r).abs() < 1e-10);
                assert!((map_s(ea.s) - eb.s).norm() < 1e-10);
            }
        }
    }
}

#[test]
fn translation_invariance() {
    let mut rng = rng(2);
    let grid = lebedev_grid(86).unwrap();
    for m in [3, 8, 12] {
        let cavity = random_cavity(&mut rng, m);
        let shift = Vec3::new(3.25, -7.5, 11.0);
        let moved = cavity.map_centers(|c| c + shift);
        assert_same_structure(&build_exposure(&cavity, &grid), &build_exposure(&moved, &grid), |s| s);
    }
}

#[test]
fn rotation_equivariance() {
    let mut rng = rng(3);
    let grid = lebedev_grid(86).unwrap();
    for m in [3, 8, 12] {
        let cavity = random_cavity(&mut rng, m);
        let rot = random_rotation(&mut rng);
        let moved = cavity.map_centers(|c| rot.apply(c));
        let a = build_exposure(&cavity, &grid);
        let b = build_exposure(&moved, &grid.rotated(&rot));
        assert_same_structure(&a, &b, |s| rot.apply(s));
    }
}

/// Unordered ball pairs coupled through at least one node of either ball.
fn coupled_pairs(cache: &ExposureCache) -> BTreeSet<(usize, usize)> {
    let mut pairs = BTreeSet::new();
    for j in 0..cache.n_balls() {
        for n in 0..cache.n_nodes() {
            for e in cache.neighbors(j, n) {
                pairs.insert((j.min(e.ball), j.max(e.ball)));
            }
        }
    }
    pairs
}

#[test]
fn radius_scale_enlarges_neighbor_sets() {
    let mut rng = rng(4);
    let grid = lebedev_grid(110).unwrap();
    for m in [4, 10, 16] {
        let cavity = random_cavity(&mut rng, m);
        let scaled = cavity.rescaled(1.2).unwrap();
        let (small, large) = (coupled_pairs(&build_exposure(&cavity, &grid)), coupled_pairs(&build_exposure(&scaled, &grid)));
        assert!(small.is_subset(&large));
        assert!(build_exposure(&scaled, &grid).exposed_count() > 0);
    }
    // A widely spaced pair couples only after scaling.
    let text = "ATOM 1 C X 1 0.0 0.0 0.0 0.0 1.0\nATOM 2 C X 1 2.2 0.0 0.0 0.0 1.0\n";
    let cavity = parse_pqr_str(text).unwrap();
    assert!(coupled_pairs(&build_exposure(&cavity, &grid)).is_empty());
    let scaled = cavity.rescaled(1.2).unwrap();
    assert_eq!(coupled_pairs(&build_exposure(&scaled, &grid)).len(), 1);
}

#[test]
fn partition_identity_on_random_cavities() {
    let mut rng = rng(5);
    for n_leb in [26, 146, 590] {
        let grid = lebedev_grid(n_leb).unwrap();
        let m = rng.random_range(2..15);
        let cache = build_exposure(&random_cavity(&mut rng, m), &grid);
        for j in 0..m {
            for n in 0..grid.len() {
                let total = cache.exposed_weight(j, n) + cache.neighbors(j, n).iter().map(|e| e.weight).sum::<f64>();
                assert!((total - 1.0).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn pqr_round_trip_of_formaldehyde() {
    let text = "\
REMARK formaldehyde
ATOM      1  C   FOR     1       0.000   0.000  -0.6175  0.08130 2.11805
ATOM      2  O   FOR     1       0.000   0.000   0.7525 -0.20542 1.92500
HETATM    3  H1  FOR     1       0.000   0.935  -1.1575  0.06206 1.58730
HETATM    4  H2  FOR     1       0.000  -0.935  -1.1575  0.06206 1.58730
END
";
    let cavity = parse_pqr_str(text).unwrap();
    assert_eq!(cavity.len(), 4);
    let total: f64 = cavity.balls().iter().map(|b| b.charge).sum();
    assert!(total.abs() < 1e-12);
    let cache = build_exposure(&cavity, &lebedev_grid(302).unwrap());
    for j in 0..4 {
        assert!(cache.exposed_nodes(j).count() > 0);
    }
}
