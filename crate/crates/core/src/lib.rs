//! Exact intersection theory on blow-ups of Hirzebruch surfaces.
//!
//! The surfaces handled here are `F_{e,r}`: the Hirzebruch surface `F_e`
//! blown up at `r` points, optionally blown up once more at an extra point
//! `x` (the surface used to compute Seshadri constants at `x`). Divisor
//! classes are integer vectors in the basis `H_e, F_e, E_1..E_r[, E_x]`.
//!
//! Modules, bottom up:
//!
//! - [`lattice`]: classes, surfaces, the intersection pairing, `K`.
//! - [`cohomology`]: `h^0` on `F_e`, Riemann–Roch bounds, section bases.
//! - [`negcurves`]: enumeration and filtering of `(-1)`/`(-2)` classes.
//! - [`positivity`]: fixed components, nefness, ampleness.
//! - [`seshadri`]: closed forms and the enumerative Seshadri engine.
//! - [`linsys`]: virtual/expected/interpolated dimensions, the `(-1)`
//!   reduction and the conjecture scanner.
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cohomology;
mod error;
pub mod lattice;
pub mod linsys;
pub mod negcurves;
pub mod positivity;
mod rational;
pub mod seshadri;

pub use error::{Error, Result};
pub use lattice::{DivClass, PointConfig, SurfaceModel};
pub use rational::ExactRational;
