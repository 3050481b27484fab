#![allow(dead_code)]

use ddlpb::cavity::{Ball, Cavity, PointCharge};
use ddlpb::geometry::{Rotation, Vec3};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn unit_vector(rng: &mut impl Rng) -> Vec3 {
    loop {
        let v = Vec3::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        let n = v.norm();
        if n > 0.1 && n <= 1.0 {
            return v * (1.0 / n);
        }
    }
}

/// A connected cluster of `m` overlapping balls with random center charges.
pub fn random_cavity(rng: &mut impl Rng, m: usize) -> Cavity {
    let mut balls: Vec<Ball> = Vec::with_capacity(m);
    while balls.len() < m {
        let r = rng.random_range(1.0..2.0);
        let q = rng.random_range(-1.0..1.0);
        let center = if balls.is_empty() {
            Vec3::ZERO
        } else {
            let a = balls[rng.random_range(0..balls.len())];
            let d = rng.random_range(0.5..0.95) * (a.radius + r);
            a.center + unit_vector(rng) * d
        };
        if balls.iter().any(|b| (b.center - center).norm() < 0.3) {
            continue;
        }
        balls.push(Ball::new(center, r, q));
    }
    Cavity::new(balls).unwrap()
}

pub fn random_vec(rng: &mut impl Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.random_range(-1.0..1.0)).collect()
}

pub fn random_rotation(rng: &mut impl Rng) -> Rotation {
    Rotation::from_axis_angle(unit_vector(rng), rng.random_range(0.1..3.0))
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

pub fn max_abs(a: &[f64]) -> f64 {
    a.iter().map(|x| x.abs()).fold(0.0, f64::max)
}

pub fn moved_charges(charges: &[PointCharge], f: impl Fn(Vec3) -> Vec3) -> Vec<PointCharge> {
    charges.iter().map(|c| PointCharge::new(f(c.position), c.charge)).collect()
}

/// Energies printed in the Kirkwood benchmark table, per case, for the
/// `(ℓmax, N_leb)` rows `(3,26) (5,50) (7,86) (9,146) (11,194)`.
pub const TABLE1: [(&str, [f64; 5]); 6] = [
    ("born", [-81.9589, -81.9589, -81.9589, -81.9589, -81.9589]),
    ("kirkwood1", [-349.5532, -349.4132, -349.5064, -349.5043, -349.5052]),
    ("kirkwood2", [-64.0454, -62.5341, -62.7587, -62.7508, -62.7524]),
    ("kirkwood3", [-141.3629, -133.2890, -135.3437, -135.1534, -135.2189]),
    ("kirkwood4", [-2991.4727, -2988.0565, -2988.5869, -2988.4893, -2988.5196]),
    ("kirkwood5", [-3114.9078, -3126.2105, -3124.0588, -3123.5037, -3123.5193]),
];

/// Analytic reference energies of the same six cases.
pub const TABLE1_EXACT: [f64; 6] = [-81.9589, -349.5051, -62.7523, -135.2216, -2988.5210, -3123.4730];
