//! Modified spherical Bessel functions `i_ℓ`, `k_ℓ` of the argument `κr` and
//! the radial factors the single-ball solvers need.
//!
//! Conventions: `i_ℓ(r) = √(π/(2κr)) I_{ℓ+½}(κr)` and
//! `k_ℓ(r) = √(2/(πκr)) K_{ℓ+½}(κr)`, so `i_0(x) = sinh x / x` and
//! `k_0(x) = e^{−x}/x`. Derivatives are taken in `r` unless stated otherwise.
//!
//! Nothing here ever forms a raw `i_ℓ` or `k_ℓ` when only a ratio is needed:
//! ratios are products of successive-order ratios, which neither overflow for
//! large `κr` nor underflow for small `κr`.

mod bessel;
mod kernel;

pub use bessel::{
    bessel_i_family, bessel_k_family, i_order_ratios, k_order_ratios, ratio_ip_over_i, ratio_kp_over_k,
    BesselFamily,
};
pub use kernel::RadialKernel;
