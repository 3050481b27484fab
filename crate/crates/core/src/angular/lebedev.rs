use std::f64::consts::PI;

use super::lebedev_data::RULES;
use crate::error::{Error, Result};
use crate::geometry::{Rotation, Vec3};

/// One octahedral orbit of a Lebedev–Laikov rule.
///
/// `class` selects the orbit shape (1: 6 vertices, 2: 12 edge midpoints,
/// 3: 8 face centers, 4: 24 points `(a, a, b)`, 5: 24 points `(a, b, 0)`,
/// 6: 48 points `(a, b, c)`); `v` is the weight normalized to total 1.
#[derive(Debug, Clone, Copy)]
pub struct Orbit {
    pub class: u8,
    pub a: f64,
    pub b: f64,
    pub v: f64,
}

/// Lebedev quadrature nodes on the unit sphere with weights summing to 4π.
#[derive(Debug, Clone, PartialEq)]
pub struct AngularGrid {
    points: Vec<Vec3>,
    weights: Vec<f64>,
    order: usize,
}

impl AngularGrid {
    pub fn points(&self) -> &[Vec3] {
        &self.points
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Highest polynomial degree integrated exactly.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The same rule with every node rotated; exactness is unchanged.
    pub fn rotated(&self, rot: &Rotation) -> AngularGrid {
        let points = self
            .points
            .iter()
            .map(|p| {
                let q = rot.apply(*p);
                q * (1.0 / q.norm())
            })
            .collect();
        AngularGrid { points, weights: self.weights.clone(), order: self.order }
    }

    /// Largest `lmax` for which the discrete Gram matrix of the basis is exact.
    pub fn max_exact_lmax(&self) -> usize {
        self.order / 2
    }
}

/// All grid sizes accepted by [`lebedev_grid`], ascending.
pub fn supported_grid_sizes() -> impl Iterator<Item = usize> {
    RULES.iter().map(|(n, _, _)| *n)
}

pub fn lebedev_grid(n_points: usize) -> Result<AngularGrid> {
    let (_, order, orbits) = RULES
        .iter()
        .find(|(n, _, _)| *n == n_points)
        .ok_or(Error::UnsupportedGridSize(n_points))?;

    let mut points = Vec::with_capacity(n_points);
    let mut weights = Vec::with_capacity(n_points);
    for orbit in orbits.iter() {
        let start = points.len();
        expand_orbit(orbit, &mut points);
        let w = 4.0 * PI * orbit.v;
        weights.resize(weights.len() + points.len() - start, w);
    }
    debug_assert_eq!(points.len(), n_points);

    Ok(AngularGrid {
        points,
        weights,
        order: *order,
    })
}

fn signs2() -> [(f64, f64); 4] {
    [(1.0, 1.0), (-1.0, 1.0), (1.0, -1.0), (-1.0, -1.0)]
}

fn expand_orbit(orbit: &Orbit, out: &mut Vec<Vec3>) {
    match orbit.class {
        1 => {
            for (x, y, z) in [
                (1.0, 0.0, 0.0),
                (-1.0, 0.0, 0.0),
                (0.0, 1.0, 0.0),
                (0.0, -1.0, 0.0),
                (0.0, 0.0, 1.0),
                (0.0, 0.0, -1.0),
            ] {
                out.push(Vec3::new(x, y, z));
            }
        }
        2 => {
            let a = 0.5_f64.sqrt();
            for (s, t) in signs2() {
                out.push(Vec3::new(0.0, s * a, t * a));
            }
            for (s, t) in signs2() {
                out.push(Vec3::new(s * a, 0.0, t * a));
            }
            for (s, t) in signs2() {
                out.push(Vec3::new(s * a, t * a, 0.0));
            }
        }
        3 => {
            let a = (1.0_f64 / 3.0).sqrt();
            for sz in [1.0, -1.0] {
                for (s, t) in signs2() {
                    out.push(Vec3::new(s * a, t * a, sz * a));
                }
            }
        }
        4 => {
            let a = orbit.a;
            let b = (1.0 - 2.0 * a * a).sqrt();
            // b in each of the three slots, a elsewhere
            for slot in 0..3 {
                for sb in [1.0, -1.0] {
                    for (s, t) in signs2() {
                        let p = match slot {
                            0 => Vec3::new(s * a, t * a, sb * b),
                            1 => Vec3::new(s * a, sb * b, t * a),
                            _ => Vec3::new(sb * b, s * a, t * a),
                        };
                        out.push(p);
                    }
                }
            }
        }
        5 => {
            let a = orbit.a;
            let b = (1.0 - a * a).sqrt();
            for (p, q) in [(a, b), (b, a)] {
                for (s, t) in signs2() {
                    out.push(Vec3::new(s * p, t * q, 0.0));
                }
            }
            for (p, q) in [(a, b), (b, a)] {
                for (s, t) in signs2() {
                    out.push(Vec3::new(s * p, 0.0, t * q));
                }
            }
            for (p, q) in [(a, b), (b, a)] {
                for (s, t) in signs2() {
                    out.push(Vec3::new(0.0, s * p, t * q));
                }
            }
        }
        6 => {
            let a = orbit.a;
            let b = orbit.b;
            let c = (1.0 - a * a - b * b).sqrt();
            for (p, q, r) in [(a, b, c), (b, a, c), (c, a, b), (c, b, a), (a, c, b), (b, c, a)] {
                for sr in [1.0, -1.0] {
                    for (s, t) in signs2() {
                        out.push(Vec3::new(s * p, t * q, sr * r));
                    }
                }
            }
        }
        other => unreachable!("orbit class {other} is not part of any Lebedev table"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn required_sizes_are_available() {
        for n in [
            6, 14, 26, 38, 50, 86, 110, 146, 170, 194, 230, 266, 302, 350, 434, 590, 770, 974, 1202,
            2030, 4334,
        ] {
            let grid = lebedev_grid(n).unwrap();
            assert_eq!(grid.len(), n);
        }
    }

    #[test]
    fn unsupported_size_is_rejected() {
        assert!(matches!(lebedev_grid(100), Err(Error::UnsupportedGridSize(100))));
        assert!(matches!(lebedev_grid(0), Err(Error::UnsupportedGridSize(0))));
    }

    #[test]
    fn weights_sum_to_four_pi_and_nodes_are_unit() {
        for n in supported_grid_sizes() {
            let grid = lebedev_grid(n).unwrap();
            let total: f64 = grid.weights().iter().sum();
            assert!((total - 4.0 * PI).abs() < 1e-12, "n={n} sum={total}");
            for p in grid.points() {
                assert!((p.norm() - 1.0).abs() < 1e-14, "n={n}");
            }
        }
    }

    #[test]
    fn weights_positive_except_known_rules() {
        // The 74-, 230- and 266-point rules carry a negative weight on one orbit.
        for n in supported_grid_sizes() {
            let grid = lebedev_grid(n).unwrap();
            let positive = grid.weights().iter().all(|&w| w > 0.0);
            assert_eq!(positive, !matches!(n, 74 | 230 | 266), "n={n}");
        }
    }

    #[test]
    fn nodes_are_distinct() {
        for n in [26, 194, 590] {
            let grid = lebedev_grid(n).unwrap();
            let pts = grid.points();
            for i in 0..pts.len() {
                for j in 0..i {
                    assert!((pts[i] - pts[j]).norm() > 1e-6, "n={n} duplicate {i} {j}");
                }
            }
        }
    }

    #[test]
    fn monomials_integrate_exactly() {
        // ∫ x^a y^b z^c over S² for even exponents:
        // 2 Γ((a+1)/2) Γ((b+1)/2) Γ((c+1)/2) / Γ((a+b+c+3)/2)
        fn double_fact(k: i64) -> f64 {
            (1..=k).rev().step_by(2).map(|v| v as f64).product::<f64>().max(1.0)
        }
        fn exact(a: i64, b: i64, c: i64) -> f64 {
            if a % 2 == 1 || b % 2 == 1 || c % 2 == 1 {
                return 0.0;
            }
            4.0 * PI * double_fact(a - 1) * double_fact(b - 1) * double_fact(c - 1)
                / double_fact(a + b + c + 1)
        }
        for n in [6, 14, 26, 50, 110, 194, 302, 590] {
            let grid = lebedev_grid(n).unwrap();
            let d = grid.order() as i64;
            for a in 0..=d.min(8) {
                for b in 0..=(d - a).min(8) {
                    let c = (d - a - b).min(8);
                    let value: f64 = grid
                        .points()
                        .iter()
                        .zip(grid.weights())
                        .map(|(p, w)| w * p.x.powi(a as i32) * p.y.powi(b as i32) * p.z.powi(c as i32))
                        .sum();
                    let expect = exact(a, b, c);
                    assert!((value - expect).abs() < 1e-11 * expect.abs().max(1.0), "n={n} ({a},{b},{c}) {value} vs {expect}");
                }
            }
        }
    }
}
