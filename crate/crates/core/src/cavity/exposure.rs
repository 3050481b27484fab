use std::collections::HashMap;

use rayon::prelude::*;

use super::Cavity;
use crate::angular::AngularGrid;
use crate::geometry::Vec3;

/// A node counts as inside ball `i` when `|x − x_i| < r_i − INTERIOR_TOLERANCE`.
pub const INTERIOR_TOLERANCE: f64 = 1e-12;

/// A ball `i` containing the surface node `x_jn`, with the node expressed in
/// the local spherical coordinates of `i`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NeighborEntry {
    pub ball: usize,
    pub weight: f64,
    pub r: f64,
    pub s: Vec3,
}

/// Per-ball, per-node exposure flags and intersection data.
#[derive(Debug, Clone)]
pub struct ExposureCache {
    n_balls: usize,
    n_nodes: usize,
    exposed: Vec<bool>,
    offsets: Vec<usize>,
    entries: Vec<NeighborEntry>,
}

impl ExposureCache {
    pub fn n_balls(&self) -> usize {
        self.n_balls
    }

    pub fn n_nodes(&self) -> usize {
        self.n_nodes
    }

    /// `χ_j^e(x_jn)`.
    pub fn is_exposed(&self, j: usize, n: usize) -> bool {
        self.exposed[j * self.n_nodes + n]
    }

    pub fn exposed_weight(&self, j: usize, n: usize) -> f64 {
        if self.is_exposed(j, n) {
            1.0
        } else {
            0.0
        }
    }

    /// Balls other than `j` whose open interior contains `x_jn`, by ascending index.
    pub fn neighbors(&self, j: usize, n: usize) -> &[NeighborEntry] {
        let k = j * self.n_nodes + n;
        &self.entries[self.offsets[k]..self.offsets[k + 1]]
    }

    pub fn exposed_count(&self) -> usize {
        self.exposed.iter().filter(|e| **e).count()
    }

    /// Exposed node indices of ball `j`.
    pub fn exposed_nodes(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n_nodes).filter(move |&n| self.is_exposed(j, n))
    }
}

type CellKey = (i64, i64, i64);

struct SpatialHash {
    cell: f64,
    bins: HashMap<CellKey, Vec<usize>>,
}

impl SpatialHash {
    fn new(cavity: &Cavity) -> Self {
        let max_r = cavity.balls().iter().fold(0.0_f64, |m, b| m.max(b.radius));
        let cell = 2.0 * max_r;
        let mut bins: HashMap<CellKey, Vec<usize>> = HashMap::new();
        for (i, b) in cavity.balls().iter().enumerate() {
            bins.entry(key(b.center, cell)).or_default().push(i);
        }
        Self { cell, bins }
    }

    /// Indices of every ball whose center lies within one cell of `x`.
    fn candidates(&self, x: Vec3, out: &mut Vec<usize>) {
        out.clear();
        let (cx, cy, cz) = key(x, self.cell);
        for dx in -1..=1 {
            for dy in -1..=1 {
                for dz in -1..=1 {
                    if let Some(v) = self.bins.get(&(cx + dx, cy + dy, cz + dz)) {
                        out.extend_from_slice(v);
                    }
                }
            }
        }
        out.sort_unstable();
    }
}

fn key(x: Vec3, cell: f64) -> CellKey {
    ((x.x / cell).floor() as i64, (x.y / cell).floor() as i64, (x.z / cell).floor() as i64)
}

/// Classifies every Lebedev node of every sphere as exposed or buried and
/// records the containing balls with equal partition weights `1/|N|`.
pub fn build_exposure(cavity: &Cavity, grid: &AngularGrid) -> ExposureCache {
    let hash = SpatialHash::new(cavity);
    let balls = cavity.balls();
    let n_nodes = grid.len();

    let per_ball: Vec<(Vec<bool>, Vec<usize>, Vec<NeighborEntry>)> = (0..balls.len())
        .into_par_iter()
        .map(|j| {
            let bj = balls[j];
            let mut exposed = Vec::with_capacity(n_nodes);
            let mut counts = Vec::with_capacity(n_nodes);
            let mut entries = Vec::new();
            let mut cand = Vec::new();
            for s in grid.points() {
                let x = bj.center + *s * bj.radius;
                hash.candidates(x, &mut cand);
                let start = entries.len();
                for &i in &cand {
                    if i == j {
                        continue;
                    }
                    let d = x - balls[i].center;
                    let r = d.norm();
                    if r < balls[i].radius - INTERIOR_TOLERANCE {
                        let s_loc = if r > 0.0 { d * (1.0 / r) } else { Vec3::new(0.0, 0.0, 1.0) };
                        entries.push(NeighborEntry { ball: i, weight: 0.0, r, s: s_loc });
                    }
                }
                let k = entries.len() - start;
                for e in &mut entries[start..] {
                    e.weight = 1.0 / k as f64;
                }
                exposed.push(k == 0);
                counts.push(k);
            }
            (exposed, counts, entries)
        })
        .collect();

    let mut exposed = Vec::with_capacity(balls.len() * n_nodes);
    let mut offsets = Vec::with_capacity(balls.len() * n_nodes + 1);
    let mut entries = Vec::new();
    offsets.push(0);
    for (e, counts, ent) in per_ball {
        exposed.extend(e);
        for c in counts {
            offsets.push(offsets.last().unwrap() + c);
        }
        entries.extend(ent);
    }
    ExposureCache { n_balls: balls.len(), n_nodes, exposed, offsets, entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angular::lebedev_grid;
    use crate::cavity::Ball;

    fn cav(specs: &[([f64; 3], f64)]) -> Cavity {
        Cavity::new(specs.iter().map(|(c, r)| Ball::new((*c).into(), *r, 0.0)).collect()).unwrap()
    }

    #[test]
    fn single_ball_fully_exposed() {
        let g = lebedev_grid(50).unwrap();
        let e = build_exposure(&cav(&[([1.0, 2.0, 3.0], 1.5)]), &g);
        assert_eq!(e.exposed_count(), 50);
        assert!((0..50).all(|n| e.neighbors(0, n).is_empty()));
    }

    #[test]
    fn two_unit_balls() {
        let g = lebedev_grid(26).unwrap();
        let e = build_exposure(&cav(&[([0.0; 3], 1.0), ([1.0, 0.0, 0.0], 1.0)]), &g);
        for (n, s) in g.points().iter().enumerate() {
            let inside = (*s - Vec3::new(1.0, 0.0, 0.0)).norm() < 1.0;
            assert_eq!(e.is_exposed(0, n), !inside);
            if inside {
                let nb = e.neighbors(0, n);
                assert_eq!(nb.len(), 1);
                assert_eq!(nb[0].ball, 1);
                assert_eq!(nb[0].weight, 1.0);
            }
        }
    }

    #[test]
    fn tangent_balls_do_not_couple() {
        let g = lebedev_grid(6).unwrap();
        let e = build_exposure(&cav(&[([0.0; 3], 1.0), ([2.0, 0.0, 0.0], 1.0)]), &g);
        assert_eq!(e.exposed_count(), 12);
    }

    #[test]
    fn partition_and_reconstruction() {
        let specs = [([0.0, 0.0, 0.0], 1.2), ([1.0, 0.3, 0.0], 1.0), ([0.4, 0.9, 0.2], 1.1)];
        let c = cav(&specs);
        let g = lebedev_grid(110).unwrap();
        let e = build_exposure(&c, &g);
        for j in 0..3 {
            for (n, s) in g.points().iter().enumerate() {
                let sum: f64 = e.neighbors(j, n).iter().map(|x| x.weight).sum();
                assert!((e.exposed_weight(j, n) + sum - 1.0).abs() < 1e-12);
                let x = c.balls()[j].center + *s * c.balls()[j].radius;
                for nb in e.neighbors(j, n) {
                    let y = c.balls()[nb.ball].center + nb.s * nb.r;
                    assert!((x - y).norm() < 1e-10);
                    assert!((nb.s.norm() - 1.0).abs() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn buried_ball_has_no_exposed_nodes() {
        let g = lebedev_grid(26).unwrap();
        let e = build_exposure(&cav(&[([0.0; 3], 3.0), ([0.5, 0.0, 0.0], 1.0)]), &g);
        assert_eq!(e.exposed_nodes(1).count(), 0);
        assert_eq!(e.exposed_nodes(0).count(), 26);
    }
}
