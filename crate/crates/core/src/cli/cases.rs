use crate::cavity::{Ball, Cavity, PointCharge};
use crate::error::{Error, Result};
use crate::geometry::Vec3;

/// Names accepted by [`builtin_case`].
pub const BUILTIN_CASES: [&str; 7] = ["born", "kirkwood1", "kirkwood2", "kirkwood3", "kirkwood4", "kirkwood5", "formaldehyde"];

const KIRKWOOD_RADIUS: f64 = 2.0;

fn kirkwood_charges(name: &str) -> Option<Vec<([f64; 3], f64)>> {
    Some(match name {
        "born" | "kirkwood0" => vec![([0.0, 0.0, 0.0], 1.0)],
        "kirkwood1" => vec![([1.0, 0.0, 0.0], 1.0), ([-1.0, 0.0, 0.0], 1.0)],
        "kirkwood2" => vec![([1.0, 0.0, 0.0], 1.0), ([-1.0, 0.0, 0.0], 1.0), ([0.0, 1.0, 0.0], -1.0), ([0.0, -1.0, 0.0], -1.0)],
        "kirkwood3" => vec![([1.2, 0.0, 0.0], 1.0), ([-1.2, 0.0, 0.0], 1.0), ([0.0, 1.2, 0.0], -1.0), ([0.0, -1.2, 0.0], -1.0)],
        "kirkwood4" => vec![
            ([0.4, 0.0, 0.0], 1.0),
            ([0.0, 0.8, 0.0], 1.0),
            ([0.0, 0.0, 1.2], 1.0),
            ([0.0, 0.0, -0.4], 1.0),
            ([-0.8, 0.0, 0.0], 1.0),
            ([0.0, -1.2, 0.0], 1.0),
        ],
        "kirkwood5" => vec![
            ([0.2, 0.2, 0.2], 1.0),
            ([0.5, 0.5, 0.5], 1.0),
            ([0.8, 0.8, 0.8], 1.0),
            ([-0.2, 0.2, -0.2], 1.0),
            ([0.5, -0.5, 0.5], 1.0),
            ([-0.8, -0.8, -0.8], 1.0),
        ],
        _ => return None,
    })
}

fn formaldehyde() -> Vec<Ball> {
    vec![
        Ball::new(Vec3::new(0.0, 0.0, -0.6175), 2.11805, 0.08130),
        Ball::new(Vec3::new(0.0, 0.0, 0.7525), 1.925, -0.20542),
        Ball::new(Vec3::new(0.0, 0.935, -1.1575), 1.5873, 0.06206),
        Ball::new(Vec3::new(0.0, -0.935, -1.1575), 1.5873, 0.06206),
    ]
}

/// Cavity and charges of a named benchmark structure.
///
/// The Kirkwood structures are one ball of radius 2 Å at the origin with the
/// charges placed inside; formaldehyde carries one charge per atom center.
pub fn builtin_case(name: &str) -> Result<(Cavity, Vec<PointCharge>)> {
    if name == "formaldehyde" {
        let c = Cavity::new(formaldehyde())?;
        let q = c.center_charges();
        return Ok((c, q));
    }
    let charges = kirkwood_charges(name).ok_or_else(|| {
        Error::InvalidConfig(format!("unknown case '{name}' (expected one of {})", BUILTIN_CASES.join(", ")))
    })?;
    let total: f64 = charges.iter().map(|(_, q)| q).sum();
    let cavity = Cavity::new(vec![Ball::new(Vec3::ZERO, KIRKWOOD_RADIUS, total)])?;
    Ok((cavity, charges.into_iter().map(|(p, q)| PointCharge::new(p.into(), q)).collect()))
}
