//! Exact algebra for equivariant bordism of 2-torus manifolds and unitary
//! toric manifolds: faithful polynomials and their duals, the differential
//! `d`, colored polytopes and graphs, localization sums, and the kernel
//! computations that give the bordism groups.

pub mod algebra;
pub mod bordism;
pub mod error;
pub mod examples;
pub mod json;
pub mod localization;
pub mod polytope;
pub mod sampling;
pub mod verify;

pub use error::{Error, Result};
