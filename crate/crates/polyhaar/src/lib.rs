//! Random open and closed polygons of total length 2 in the plane and in
//! space, sampled under the symmetric measure pushed forward from spheres
//! and Stiefel manifolds through the quaternionic Hopf map.
//!
//! The crate has four layers:
//!
//! * [`quat`] — quaternion algebra and the Hopf / frame-Hopf maps that turn
//!   model-space coordinates into edge vectors.
//! * [`sample`] — direct Haar-measure samplers for the four model spaces
//!   (open/closed × planar/spatial), equilateral arms, and a rejection
//!   sampler for quasi-equilateral ensembles.
//! * [`stats`] — geometric estimators on individual polygons (chords,
//!   gyradius, total curvature, projections) and exact edge-set-ensemble
//!   averages with brute-force permutation oracles.
//! * [`theory`] — closed-form expectations, edgelength densities, and tail
//!   bounds the Monte Carlo estimates are verified against.
//!
//! Everything is deterministic given an [`rng::RngStream`] seed and stream
//! id, so experiments reproduce bit-for-bit regardless of worker count.

pub mod accum;
pub mod experiment;
pub mod gof;
pub mod polygon;
pub mod quat;
pub mod rng;
pub mod sample;
pub mod space;
pub mod stats;
pub mod theory;

mod error;

pub use error::{Error, Result};
pub use polygon::{Dim, Polygon};
pub use space::SpaceKind;
